#include "curvecx/triangulation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "curvecx/detail/union_find.hpp"

namespace curvecx {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

int dihedral_side(int rot, bool refl, int side) { return refl ? mod3(rot - side - 1) : mod3(side + rot); }
int dihedral_corner(int rot, bool refl, int corner) { return refl ? mod3(rot - corner) : mod3(corner + rot); }

int start_corner(int slot) { return slot; }
int end_corner(int slot) { return slot_of(triangle_of(slot), (side_of(slot) + 1) % 3); }

struct Analysis {
  ValidationReport report;
  std::vector<int> corner_root;
};

Analysis analyze(int triangles, const std::vector<Edge>& edges) {
  Analysis out;
  ValidationReport& rep = out.report;
  detail::ParityUnionFind corners(3 * triangles);
  detail::ParityUnionFind tris(triangles);
  bool orientable = true;
  for (const Edge& edge : edges) {
    if (edge.flag == Gluing::Parallel) {
      corners.unite(start_corner(edge.slot_a), start_corner(edge.slot_b));
      corners.unite(end_corner(edge.slot_a), end_corner(edge.slot_b));
    } else {
      corners.unite(start_corner(edge.slot_a), end_corner(edge.slot_b));
      corners.unite(end_corner(edge.slot_a), start_corner(edge.slot_b));
    }
    // Orientable iff triangles can be oriented so every gluing is antiparallel.
    const int relation = edge.flag == Gluing::Parallel ? 1 : 0;
    if (!tris.unite(triangle_of(edge.slot_a), triangle_of(edge.slot_b), relation)) orientable = false;
  }
  out.corner_root.resize(3 * triangles);
  int punctures = 0;
  for (int c = 0; c < 3 * triangles; ++c) {
    out.corner_root[c] = corners.root(c);
    if (out.corner_root[c] == c) ++punctures;
  }
  int components = 0;
  for (int k = 0; k < triangles; ++k) {
    if (tris.root(k) == k) ++components;
  }
  const int e = static_cast<int>(edges.size());
  rep.connected = components == 1;
  rep.orientable = orientable;
  rep.punctures = punctures;
  rep.euler_char = triangles - e;
  const int closed_chi = punctures - e + triangles;
  rep.genus = orientable ? (2 - closed_chi) / 2 : 2 - closed_chi;
  if (!rep.connected) {
    std::ostringstream msg;
    msg << "gluing graph is disconnected (" << components << " components)";
    rep.violations.push_back(msg.str());
  }
  return out;
}

std::vector<Edge> edges_from(const GluingData& data) {
  std::vector<Edge> edges;
  edges.reserve(data.pairs.size());
  for (const GluedPair& p : data.pairs) edges.push_back({p.slot_a, p.slot_b, p.flag});
  return edges;
}

}  // namespace

std::string_view to_string(Gluing flag) { return flag == Gluing::Parallel ? "parallel" : "antiparallel"; }

Gluing parse_gluing(std::string_view text) {
  if (text == "parallel") return Gluing::Parallel;
  if (text == "antiparallel") return Gluing::Antiparallel;
  throw std::invalid_argument("unknown gluing flag '" + std::string(text) + "'");
}

namespace {
std::string join_violations(const std::vector<std::string>& violations) {
  std::string msg = "invalid triangulation";
  for (const auto& v : violations) msg += "; " + v;
  return msg;
}
}  // namespace

InvalidTriangulation::InvalidTriangulation(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

ValidationReport validate(const GluingData& data) {
  std::vector<std::string> problems;
  if (data.triangles < 1) {
    problems.push_back("triangle count must be positive");
    throw InvalidTriangulation(problems);
  }
  const int slots = 3 * data.triangles;
  std::vector<int> uses(slots, 0);
  for (const GluedPair& p : data.pairs) {
    bool in_range = true;
    for (int s : {p.slot_a, p.slot_b}) {
      if (s < 0 || s >= slots) {
        problems.push_back("slot " + std::to_string(s) + " out of range");
        in_range = false;
      }
    }
    if (!in_range) continue;
    if (p.slot_a == p.slot_b) {
      problems.push_back("fixed point in gluing at slot " + std::to_string(p.slot_a));
      ++uses[p.slot_a];
      continue;
    }
    ++uses[p.slot_a];
    ++uses[p.slot_b];
  }
  for (int s = 0; s < slots; ++s) {
    if (uses[s] == 0) problems.push_back("slot " + std::to_string(s) + " is unmatched");
    if (uses[s] > 1) problems.push_back("slot " + std::to_string(s) + " is matched more than once");
  }
  if (!problems.empty()) throw InvalidTriangulation(problems);
  return analyze(data.triangles, edges_from(data)).report;
}

Triangulation Triangulation::assemble(int triangles, std::vector<Edge> edges, const std::vector<int>* labels) {
  Analysis analysis = analyze(triangles, edges);
  if (!analysis.report.ok()) throw InvalidTriangulation(analysis.report.violations);

  Triangulation tri;
  tri.triangles_ = triangles;
  tri.partner_.assign(3 * triangles, -1);
  tri.edge_of_.assign(3 * triangles, -1);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    tri.partner_[edges[e].slot_a] = edges[e].slot_b;
    tri.partner_[edges[e].slot_b] = edges[e].slot_a;
    tri.edge_of_[edges[e].slot_a] = e;
    tri.edge_of_[edges[e].slot_b] = e;
  }
  tri.edges_ = std::move(edges);
  tri.punctures_ = analysis.report.punctures;
  tri.sig_ = analysis.report.surface();

  const auto& root = analysis.corner_root;
  tri.corner_label_.assign(3 * triangles, -1);
  if (labels == nullptr) {
    std::map<int, int> label_of_root;
    for (int c = 0; c < 3 * triangles; ++c) {
      auto [it, inserted] = label_of_root.try_emplace(root[c], static_cast<int>(label_of_root.size()));
      tri.corner_label_[c] = it->second;
    }
  } else {
    // Supplied labels must induce exactly the corner partition.
    std::map<int, int> label_of_root;
    std::map<int, int> root_of_label;
    for (int c = 0; c < 3 * triangles; ++c) {
      const int label = (*labels)[c];
      auto [it, inserted] = label_of_root.try_emplace(root[c], label);
      auto [jt, inserted2] = root_of_label.try_emplace(label, root[c]);
      if (it->second != label || jt->second != root[c]) {
        throw std::logic_error("puncture labels inconsistent with corner identifications");
      }
      tri.corner_label_[c] = label;
    }
  }
  return tri;
}

Triangulation Triangulation::from_gluing(const GluingData& data) {
  validate(data);
  return assemble(data.triangles, edges_from(data), nullptr);
}

std::array<int, 2> Triangulation::endpoints(int e) const {
  const Edge& edge = edges_[e];
  return {corner_label_[start_corner(edge.slot_a)], corner_label_[end_corner(edge.slot_a)]};
}

ValidationReport Triangulation::report() const { return analyze(triangles_, edges_).report; }

GluingData Triangulation::gluing() const {
  GluingData data;
  data.triangles = triangles_;
  for (const Edge& edge : edges_) data.pairs.push_back({edge.slot_a, edge.slot_b, edge.flag});
  return data;
}

// Gives tests and the flip code access to the raw constructor.
class TriangulationAccess {
public:
  static Triangulation assemble(int triangles, std::vector<Edge> edges, const std::vector<int>& labels) {
    return Triangulation::assemble(triangles, std::move(edges), &labels);
  }
};

Triangulation relabel(const Triangulation& tri, const std::vector<int>& perm, const std::vector<int>& rotation,
                      const std::vector<bool>& reflect) {
  const int t = tri.triangle_count();
  if (static_cast<int>(perm.size()) != t || static_cast<int>(rotation.size()) != t ||
      static_cast<int>(reflect.size()) != t) {
    throw std::invalid_argument("relabel: map sizes must equal the triangle count");
  }
  auto map_slot = [&](int slot) {
    const int k = triangle_of(slot);
    return slot_of(perm[k], dihedral_side(rotation[k], reflect[k], side_of(slot)));
  };
  std::vector<Edge> edges = tri.edges();
  for (Edge& edge : edges) {
    const bool toggle = reflect[triangle_of(edge.slot_a)] != reflect[triangle_of(edge.slot_b)];
    edge.slot_a = map_slot(edge.slot_a);
    edge.slot_b = map_slot(edge.slot_b);
    if (toggle) edge.flag = toggled(edge.flag);
  }
  std::vector<int> labels(3 * t);
  for (int k = 0; k < t; ++k) {
    for (int c = 0; c < 3; ++c) {
      labels[slot_of(perm[k], dihedral_corner(rotation[k], reflect[k], c))] = tri.corner_puncture(slot_of(k, c));
    }
  }
  return TriangulationAccess::assemble(t, std::move(edges), labels);
}

namespace {

// Relabels triangle k alone.
Triangulation relabel_one(const Triangulation& tri, int k, int rot, bool refl) {
  const int t = tri.triangle_count();
  std::vector<int> perm(t);
  for (int i = 0; i < t; ++i) perm[i] = i;
  std::vector<int> rotation(t, 0);
  std::vector<bool> reflect(t, false);
  rotation[k] = rot;
  reflect[k] = refl;
  return relabel(tri, perm, rotation, reflect);
}

struct NormalizedQuad {
  Triangulation work;
  int a = 0;  // triangle holding the diagonal on side 0
  int b = 0;  // other triangle, side 0 glued antiparallel to side 0 of a
};

// Rotates both triangles so the edge is side 0 of each and reflects the
// second triangle if needed so the diagonal is glued antiparallel.
NormalizedQuad normalize_for_flip(const Triangulation& tri, int e) {
  if (e < 0 || e >= tri.edge_count()) throw std::out_of_range("edge index out of range");
  if (tri.is_self_folded(e)) {
    throw UnflippableEdge("unflippable edge " + std::to_string(e) + ": both sides lie in one triangle");
  }
  const Edge& edge = tri.edge(e);
  const int a = triangle_of(edge.slot_a);
  const int b = triangle_of(edge.slot_b);
  Triangulation work = relabel_one(tri, a, mod3(-side_of(edge.slot_a)), false);
  work = relabel_one(work, b, mod3(-side_of(edge.slot_b)), false);
  if (work.edge(e).flag == Gluing::Parallel) work = relabel_one(work, b, 1, true);
  return {std::move(work), a, b};
}

}  // namespace

FlipQuad flip_quad(const Triangulation& tri, int e) {
  const NormalizedQuad q = normalize_for_flip(tri, e);
  FlipQuad quad;
  quad.side_a = {q.work.edge_of(slot_of(q.a, 1)), q.work.edge_of(slot_of(q.a, 2))};
  quad.side_b = {q.work.edge_of(slot_of(q.b, 1)), q.work.edge_of(slot_of(q.b, 2))};
  return quad;
}

Triangulation flip(const Triangulation& tri, int e) {
  const NormalizedQuad q = normalize_for_flip(tri, e);
  const Triangulation& w = q.work;
  const int a = q.a;
  const int b = q.b;
  // Quad corners: u = a.0 = b.1, v = a.1 = b.0, x = a.2, y = b.2.
  const int u = w.corner_puncture(slot_of(a, 0));
  const int v = w.corner_puncture(slot_of(a, 1));
  const int x = w.corner_puncture(slot_of(a, 2));
  const int y = w.corner_puncture(slot_of(b, 2));

  // New triangles a = (y, x, u), b = (x, y, v). Outer sides keep direction.
  auto move_slot = [&](int slot) {
    if (slot == slot_of(a, 1)) return slot_of(b, 2);
    if (slot == slot_of(a, 2)) return slot_of(a, 1);
    if (slot == slot_of(b, 1)) return slot_of(a, 2);
    if (slot == slot_of(b, 2)) return slot_of(b, 1);
    return slot;
  };
  std::vector<Edge> edges = w.edges();
  for (int f = 0; f < static_cast<int>(edges.size()); ++f) {
    if (f == e) {
      edges[f] = {slot_of(a, 0), slot_of(b, 0), Gluing::Antiparallel};
      continue;
    }
    edges[f].slot_a = move_slot(edges[f].slot_a);
    edges[f].slot_b = move_slot(edges[f].slot_b);
  }
  std::vector<int> labels = w.corner_labels();
  labels[slot_of(a, 0)] = y;
  labels[slot_of(a, 1)] = x;
  labels[slot_of(a, 2)] = u;
  labels[slot_of(b, 0)] = x;
  labels[slot_of(b, 1)] = y;
  labels[slot_of(b, 2)] = v;
  Triangulation out = TriangulationAccess::assemble(w.triangle_count(), std::move(edges), labels);
  if (!(out.surface() == tri.surface())) {
    throw UnflippableEdge("unflippable edge " + std::to_string(e) + ": flip changes the surface");
  }
  return out;
}

std::vector<int> flippable_edges(const Triangulation& tri) {
  std::vector<int> out;
  for (int e = 0; e < tri.edge_count(); ++e) {
    if (!tri.is_self_folded(e)) out.push_back(e);
  }
  return out;
}

int shared_edge_count(const Triangulation& lhs, const Triangulation& rhs) {
  if (lhs.edge_count() != rhs.edge_count()) return 0;
  int shared = 0;
  for (int e = 0; e < lhs.edge_count(); ++e) {
    auto p = lhs.endpoints(e);
    auto q = rhs.endpoints(e);
    std::sort(p.begin(), p.end());
    std::sort(q.begin(), q.end());
    if (p == q) ++shared;
  }
  return shared;
}

Triangulation apply_flips(const Triangulation& tri, const std::vector<int>& sequence) {
  Triangulation current = tri;
  for (int e : sequence) current = flip(current, e);
  return current;
}

// ---------------------------------------------------------------------------
// Reference triangulations

namespace {

// Mutable gluing used while building reference triangulations.
struct GluingBuilder {
  std::vector<int> partner;
  std::vector<Gluing> flag;  // per slot, equal on both slots of a pair

  int add_triangle() {
    partner.insert(partner.end(), 3, -1);
    flag.insert(flag.end(), 3, Gluing::Antiparallel);
    return static_cast<int>(partner.size() / 3) - 1;
  }
  void glue(int s, int t, Gluing g) {
    partner[s] = t;
    partner[t] = s;
    flag[s] = g;
    flag[t] = g;
  }

  // Subdivides triangle k into three by a new interior puncture; returns
  // the index of the last new triangle.
  int insert_puncture(int k) {
    const int y = add_triangle();
    const int z = add_triangle();
    // Old sides 1 and 2 of k move to side 0 of y and z.
    for (auto [old_slot, new_slot] : {std::pair{slot_of(k, 1), slot_of(y, 0)}, std::pair{slot_of(k, 2), slot_of(z, 0)}}) {
      int other = partner[old_slot];
      const Gluing g = flag[old_slot];
      if (other == slot_of(k, 1)) other = slot_of(y, 0);
      else if (other == slot_of(k, 2)) other = slot_of(z, 0);
      glue(new_slot, other, g);
    }
    // k = (c0, c1, p), y = (c1, c2, p), z = (c2, c0, p).
    glue(slot_of(k, 1), slot_of(y, 2), Gluing::Antiparallel);
    glue(slot_of(y, 1), slot_of(z, 2), Gluing::Antiparallel);
    glue(slot_of(z, 1), slot_of(k, 2), Gluing::Antiparallel);
    return z;
  }

  GluingData finish() const {
    GluingData data;
    data.triangles = static_cast<int>(partner.size() / 3);
    for (int s = 0; s < static_cast<int>(partner.size()); ++s) {
      if (s < partner[s]) data.pairs.push_back({s, partner[s], flag[s]});
    }
    return data;
  }
};

// Polygon side labels: letter id and direction (+1 along the polygon).
std::vector<std::pair<int, int>> polygon_word(const SurfaceSig& sig) {
  std::vector<std::pair<int, int>> word;
  if (sig.orientable) {
    for (int h = 0; h < sig.genus; ++h) {
      word.push_back({2 * h, +1});
      word.push_back({2 * h + 1, +1});
      word.push_back({2 * h, -1});
      word.push_back({2 * h + 1, -1});
    }
  } else {
    for (int c = 0; c < sig.genus; ++c) {
      word.push_back({c, +1});
      word.push_back({c, +1});
    }
  }
  return word;
}

void glue_polygon_sides(GluingBuilder& builder, const std::vector<int>& side_slots,
                        const std::vector<std::pair<int, int>>& word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[i].first != word[j].first) continue;
      const Gluing g = word[i].second == word[j].second ? Gluing::Parallel : Gluing::Antiparallel;
      builder.glue(side_slots[i], side_slots[j], g);
    }
  }
}

}  // namespace

Triangulation build_reference(const SurfaceSig& sig) {
  ideal_triangulation_counts(sig);  // throws when no ideal triangulation exists
  GluingBuilder builder;
  int last = 0;
  int placed = 0;  // punctures realized by the base construction
  if (sig.genus == 0) {
    const int t0 = builder.add_triangle();
    const int t1 = builder.add_triangle();
    builder.glue(slot_of(t0, 0), slot_of(t1, 0), Gluing::Antiparallel);
    builder.glue(slot_of(t0, 1), slot_of(t1, 2), Gluing::Antiparallel);
    builder.glue(slot_of(t0, 2), slot_of(t1, 1), Gluing::Antiparallel);
    last = t1;
    placed = 3;
  } else {
    const auto word = polygon_word(sig);
    const int sides = static_cast<int>(word.size());
    std::vector<int> side_slots(sides);
    if (sig.punctures == 1) {
      // Fan from polygon vertex 0: triangle (v0, v_k, v_{k+1}).
      std::vector<int> fan;
      for (int k = 1; k + 1 < sides; ++k) fan.push_back(builder.add_triangle());
      for (int i = 0; i < static_cast<int>(fan.size()); ++i) {
        const int k = i + 1;
        side_slots[k] = slot_of(fan[i], 1);
        if (i == 0) side_slots[0] = slot_of(fan[i], 0);
        else builder.glue(slot_of(fan[i], 0), slot_of(fan[i - 1], 2), Gluing::Antiparallel);
        if (k + 1 == sides - 1) side_slots[sides - 1] = slot_of(fan[i], 2);
      }
      last = fan.back();
      placed = 1;
    } else {
      // Cone over the polygon: triangle (c, v_k, v_{k+1}).
      std::vector<int> cone;
      for (int k = 0; k < sides; ++k) cone.push_back(builder.add_triangle());
      for (int k = 0; k < sides; ++k) {
        side_slots[k] = slot_of(cone[k], 1);
        builder.glue(slot_of(cone[k], 2), slot_of(cone[(k + 1) % sides], 0), Gluing::Antiparallel);
      }
      last = cone.back();
      placed = 2;
    }
    glue_polygon_sides(builder, side_slots, word);
  }
  for (; placed < sig.punctures; ++placed) last = builder.insert_puncture(last);
  Triangulation tri = Triangulation::from_gluing(builder.finish());
  if (!(tri.surface() == sig)) {
    throw std::logic_error("reference triangulation for " + sig.to_string() + " realizes " + tri.surface().to_string());
  }
  return tri;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

void append_u16(std::string& out, int value) {
  out.push_back(static_cast<char>((value >> 8) & 0xff));
  out.push_back(static_cast<char>(value & 0xff));
}

// Encoding reached by a breadth-first relabeling from (start, rot, refl).
// Each discovered triangle is turned so the side it was entered through is
// side 0 and that gluing reads antiparallel.
std::string encode_from(const Triangulation& tri, int start, int start_rot, bool start_refl) {
  const int t = tri.triangle_count();
  std::vector<int> index(t, -1), rot(t, 0), order;
  std::vector<bool> refl(t, false);
  order.reserve(t);
  index[start] = 0;
  rot[start] = start_rot;
  refl[start] = start_refl;
  order.push_back(start);
  // Old side of triangle k sitting at new side `side`.
  auto old_side = [&](int k, int side) {
    for (int s = 0; s < 3; ++s) {
      if (dihedral_side(rot[k], refl[k], s) == side) return s;
    }
    return -1;
  };
  std::string out;
  append_u16(out, t);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int k = order[head];
    for (int side = 0; side < 3; ++side) {
      const int slot = slot_of(k, old_side(k, side));
      const int other = tri.partner(slot);
      const int m = triangle_of(other);
      const int flag_bit = tri.gluing_of_slot(slot) == Gluing::Parallel ? 1 : 0;
      if (index[m] < 0) {
        index[m] = static_cast<int>(order.size());
        order.push_back(m);
        const bool r = (flag_bit ^ (refl[k] ? 1 : 0)) != 0;
        refl[m] = r;
        rot[m] = r ? mod3(side_of(other) + 1) : mod3(-side_of(other));
      }
      const int new_other = slot_of(index[m], dihedral_side(rot[m], refl[m], side_of(other)));
      const int bit = flag_bit ^ (refl[k] ? 1 : 0) ^ (refl[m] ? 1 : 0);
      append_u16(out, 2 * new_other + bit);
    }
  }
  return out;
}

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

CanonicalForm canonical_form(const Triangulation& tri) {
  std::string best;
  bool have = false;
  for (int start = 0; start < tri.triangle_count(); ++start) {
    for (int r = 0; r < 3; ++r) {
      for (bool refl : {false, true}) {
        std::string code = encode_from(tri, start, r, refl);
        if (!have || code < best) {
          best = std::move(code);
          have = true;
        }
      }
    }
  }
  return CanonicalForm{std::move(best)};
}

}  // namespace curvecx
