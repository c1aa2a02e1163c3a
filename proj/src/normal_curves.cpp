#include "curvecx/normal_curves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "curvecx/detail/parallel.hpp"
#include "curvecx/detail/union_find.hpp"

namespace curvecx {

namespace {

void check_shape(const Triangulation& tri, const Weights& w) {
  if (static_cast<int>(w.size()) != tri.edge_count()) {
    throw std::invalid_argument("weight vector has " + std::to_string(w.size()) + " entries, triangulation has " +
                                std::to_string(tri.edge_count()) + " edges");
  }
  for (int x : w) {
    if (x < 0) throw std::invalid_argument("weights must be nonnegative");
  }
}

bool triangle_ok(int x, int y, int z) { return (x + y + z) % 2 == 0 && x <= y + z && y <= x + z && z <= x + y; }

// Normal arcs inside each triangle and the numbering of intersection points.
//
// Points on edge e are numbered 0..w[e]-1 along slot_a of the edge. On
// side i (corner i -> corner i+1) of a triangle with side weights x and
// corner counts c, the first c[i] positions belong to arcs around corner i
// and the last c[i+1] to arcs around corner i+1. Corner arc j at corner i
// joins side i position j to side i-1 position x[i-1]-1-j.
class Layout {
public:
  Layout(const Triangulation& tri, const Weights& w) : tri_(tri) {
    const int e = tri.edge_count();
    offset_.resize(e + 1, 0);
    for (int f = 0; f < e; ++f) offset_[f + 1] = offset_[f] + w[f];
    const int t = tri.triangle_count();
    x_.resize(3 * t);
    c_.resize(3 * t);
    for (int k = 0; k < t; ++k) {
      for (int i = 0; i < 3; ++i) x_[slot_of(k, i)] = w[tri.edge_of(slot_of(k, i))];
      for (int i = 0; i < 3; ++i) {
        c_[slot_of(k, i)] = (x_[slot_of(k, (i + 2) % 3)] + x_[slot_of(k, i)] - x_[slot_of(k, (i + 1) % 3)]) / 2;
      }
    }
  }

  int points() const { return offset_.back(); }
  int side_weight(int slot) const { return x_[slot]; }
  int corner_count(int corner) const { return c_[corner]; }

  // Slot-local numbering runs from the side's start corner; it is reversed
  // relative to the edge numbering on slot_b of an antiparallel edge.
  bool reversed(int slot) const {
    const Edge& edge = tri_.edge(tri_.edge_of(slot));
    return slot != edge.slot_a && edge.flag == Gluing::Antiparallel;
  }
  int to_local(int slot, int edge_pos) const {
    return reversed(slot) ? x_[slot] - 1 - edge_pos : edge_pos;
  }
  int point_id(int slot, int local_pos) const {
    const int e = tri_.edge_of(slot);
    const int edge_pos = reversed(slot) ? x_[slot] - 1 - local_pos : local_pos;
    return offset_[e] + edge_pos;
  }
  int edge_of_point(int p) const {
    return static_cast<int>(std::upper_bound(offset_.begin(), offset_.end(), p) - offset_.begin()) - 1;
  }
  int offset(int e) const { return offset_[e]; }

  // The other end of the normal arc leaving `slot` at local position `pos`.
  std::pair<int, int> arc_partner(int slot, int pos) const {
    const int k = triangle_of(slot);
    const int i = side_of(slot);
    if (pos < c_[slot]) {
      const int prev = slot_of(k, (i + 2) % 3);
      return {prev, x_[prev] - 1 - pos};
    }
    const int next = slot_of(k, (i + 1) % 3);
    return {next, x_[slot] - 1 - pos};
  }

private:
  const Triangulation& tri_;
  std::vector<int> offset_;
  std::vector<int> x_;
  std::vector<int> c_;
};

struct Walk {
  std::vector<int> component;  // component index per point
  std::vector<char> one_sided;  // per component
  int count = 0;
};

// Follows the curve through every point. Each point is left through one of
// its two slots and re-entered through the other.
Walk walk_curves(const Triangulation& tri, const Layout& layout, bool stop_after_first) {
  Walk walk;
  const int n = layout.points();
  walk.component.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (walk.component[start] >= 0) continue;
    const int id = walk.count++;
    const int e0 = layout.edge_of_point(start);
    int slot = tri.edge(e0).slot_a;
    int point = start;
    int parity = 0;
    while (true) {
      walk.component[point] = id;
      const int local = layout.to_local(slot, point - layout.offset(layout.edge_of_point(point)));
      auto [next_slot, next_local] = layout.arc_partner(slot, local);
      parity ^= 1 ^ (layout.reversed(slot) ? 1 : 0) ^ (layout.reversed(next_slot) ? 1 : 0);
      point = layout.point_id(next_slot, next_local);
      slot = tri.partner(next_slot);
      if (point == start && slot == tri.edge(e0).slot_a) break;
    }
    walk.one_sided.push_back(static_cast<char>(parity));
    if (stop_after_first) break;
  }
  return walk;
}

}  // namespace

bool is_admissible(const Triangulation& tri, const Weights& w) {
  check_shape(tri, w);
  for (int k = 0; k < tri.triangle_count(); ++k) {
    const int x = w[tri.edge_of(slot_of(k, 0))];
    const int y = w[tri.edge_of(slot_of(k, 1))];
    const int z = w[tri.edge_of(slot_of(k, 2))];
    if (!triangle_ok(x, y, z)) return false;
  }
  return true;
}

Weights add(const Weights& lhs, const Weights& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("weight vectors differ in length");
  Weights out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] + rhs[i];
  return out;
}

Weights scale(const Weights& w, int factor) {
  Weights out(w);
  for (int& x : out) x *= factor;
  return out;
}

std::vector<TracedComponent> trace_components(const Triangulation& tri, const Weights& w) {
  if (!is_admissible(tri, w)) throw std::invalid_argument("trace: weights are not admissible");
  const Layout layout(tri, w);
  const Walk walk = walk_curves(tri, layout, false);
  std::vector<TracedComponent> out(walk.count);
  for (auto& comp : out) comp.weights.assign(w.size(), 0);
  for (int p = 0; p < layout.points(); ++p) ++out[walk.component[p]].weights[layout.edge_of_point(p)];
  for (int i = 0; i < walk.count; ++i) out[i].one_sided = walk.one_sided[i] != 0;
  std::sort(out.begin(), out.end(), [](const TracedComponent& a, const TracedComponent& b) {
    return a.weights < b.weights;
  });
  return out;
}

std::vector<Weights> trace(const Triangulation& tri, const Weights& w) {
  std::vector<Weights> out;
  for (auto& comp : trace_components(tri, w)) out.push_back(std::move(comp.weights));
  return out;
}

bool is_connected_curve(const Triangulation& tri, const Weights& w) {
  if (!is_admissible(tri, w)) return false;
  const Layout layout(tri, w);
  if (layout.points() == 0) return false;
  const Walk walk = walk_curves(tri, layout, true);
  return std::all_of(walk.component.begin(), walk.component.end(), [](int c) { return c == 0; });
}

// ---------------------------------------------------------------------------
// Cutting

int CutPiece::euler_char() const {
  const int holes = static_cast<int>(punctures.size()) + boundary_count;
  return orientable ? 2 - 2 * genus - holes : 2 - genus - holes;
}

SurfaceSig CutPiece::as_surface() const {
  return SurfaceSig{orientable, genus, static_cast<int>(punctures.size()) + boundary_count};
}

bool CutPiece::is_punctured_disc(int k) const {
  return orientable && genus == 0 && boundary_count == 1 && static_cast<int>(punctures.size()) == k;
}

namespace {

// Regions of the triangles cut along the curve: for corner i, regions
// (i, 0..c[i]-1) counted from the corner outwards, then one central region.
class Regions {
public:
  explicit Regions(const Triangulation& tri, const Layout& layout) : layout_(layout) {
    const int t = tri.triangle_count();
    base_.resize(t + 1, 0);
    for (int k = 0; k < t; ++k) {
      int count = 1;
      for (int i = 0; i < 3; ++i) count += layout.corner_count(slot_of(k, i));
      base_[k + 1] = base_[k] + count;
    }
  }
  int size() const { return base_.back(); }

  int corner_region(int k, int i, int j) const {
    int idx = base_[k];
    for (int a = 0; a < i; ++a) idx += layout_.corner_count(slot_of(k, a));
    return idx + j;
  }
  int central(int k) const { return base_[k + 1] - 1; }

  // Region touching segment q (0..x) of a side, in slot-local numbering.
  int segment_region(int slot, int q) const {
    const int k = triangle_of(slot);
    const int i = side_of(slot);
    const int ci = layout_.corner_count(slot);
    if (q < ci) return corner_region(k, i, q);
    if (q == ci) return central(k);
    return corner_region(k, (i + 1) % 3, layout_.side_weight(slot) - q);
  }

  // Region holding the corner itself.
  int corner_cell(int corner) const {
    const int k = triangle_of(corner);
    const int i = side_of(corner);
    return layout_.corner_count(corner) > 0 ? corner_region(k, i, 0) : central(k);
  }

private:
  const Layout& layout_;
  std::vector<int> base_;
};

}  // namespace

namespace {

struct CutStructure {
  std::vector<CutPiece> pieces;
  std::vector<int> piece_of_region;
};

CutStructure compute_cut(const Triangulation& tri, const Weights& w, const Layout& layout, const Regions& regions) {
  const Walk walk = walk_curves(tri, layout, false);
  if (walk.count != 1) throw NotConnected("cut_along: weights do not describe a single curve");
  const bool one_sided = walk.one_sided[0] != 0;

  detail::ParityUnionFind uf(regions.size());
  std::vector<int> conflicts;
  for (int e = 0; e < tri.edge_count(); ++e) {
    const Edge& edge = tri.edge(e);
    const int x = w[e];
    const int relation = edge.flag == Gluing::Parallel ? 1 : 0;
    for (int q = 0; q <= x; ++q) {
      const int qb = edge.flag == Gluing::Parallel ? q : x - q;
      const int ra = regions.segment_region(edge.slot_a, q);
      const int rb = regions.segment_region(edge.slot_b, qb);
      if (!uf.unite(ra, rb, relation)) conflicts.push_back(ra);
    }
  }

  // Pieces numbered in order of their first region.
  std::vector<int> piece(regions.size());
  std::map<int, int> order;
  for (int r = 0; r < regions.size(); ++r) {
    auto [it, inserted] = order.try_emplace(uf.root(r), static_cast<int>(order.size()));
    piece[r] = it->second;
  }
  const int count = static_cast<int>(order.size());
  if (count > 2) throw std::logic_error("cut_along: cutting along one curve produced more than two pieces");
  if (count == 2 && one_sided) throw std::logic_error("cut_along: one-sided curve separates");

  std::vector<int> chi(count, 0);
  std::vector<bool> orientable(count, true);
  std::vector<std::set<int>> punctures(count);
  for (int r = 0; r < regions.size(); ++r) chi[piece[r]] += 1;
  for (int e = 0; e < tri.edge_count(); ++e) {
    const Edge& edge = tri.edge(e);
    for (int q = 0; q <= w[e]; ++q) chi[piece[regions.segment_region(edge.slot_a, q)]] -= 1;
    // Each intersection point splits into two copies on either side.
    for (int p = 0; p < w[e]; ++p) {
      chi[piece[regions.segment_region(edge.slot_a, p)]] += 1;
      chi[piece[regions.segment_region(edge.slot_a, p + 1)]] += 1;
    }
  }
  for (int k = 0; k < tri.triangle_count(); ++k) {
    for (int i = 0; i < 3; ++i) {
      const int ci = layout.corner_count(slot_of(k, i));
      for (int j = 0; j < ci; ++j) {
        // Each normal arc splits into two boundary copies.
        chi[piece[regions.corner_region(k, i, j)]] -= 1;
        const int outer = j + 1 < ci ? regions.corner_region(k, i, j + 1) : regions.central(k);
        chi[piece[outer]] -= 1;
      }
    }
  }
  for (int r : conflicts) orientable[piece[r]] = false;
  for (int c = 0; c < 3 * tri.triangle_count(); ++c) {
    punctures[piece[regions.corner_cell(c)]].insert(tri.corner_puncture(c));
  }

  CutStructure out;
  out.pieces.resize(count);
  for (int i = 0; i < count; ++i) {
    CutPiece& pc = out.pieces[i];
    pc.orientable = orientable[i];
    pc.punctures.assign(punctures[i].begin(), punctures[i].end());
    pc.boundary_count = count == 2 ? 1 : (one_sided ? 1 : 2);
    const int rest = 2 - chi[i] - static_cast<int>(pc.punctures.size()) - pc.boundary_count;
    if (pc.orientable) {
      if (rest % 2 != 0 || rest < 0) throw std::logic_error("cut_along: inconsistent Euler characteristic");
      pc.genus = rest / 2;
    } else {
      if (rest < 1) throw std::logic_error("cut_along: inconsistent Euler characteristic");
      pc.genus = rest;
    }
  }
  out.piece_of_region = std::move(piece);
  return out;
}

}  // namespace

std::vector<CutPiece> cut_along(const Triangulation& tri, const Weights& w) {
  if (!is_admissible(tri, w)) throw std::invalid_argument("cut_along: weights are not admissible");
  const Layout layout(tri, w);
  const Regions regions(tri, layout);
  return compute_cut(tri, w, layout, regions).pieces;
}

std::vector<int> locate_in_pieces(const Triangulation& tri, const Weights& curve, const std::vector<Weights>& others) {
  if (!is_admissible(tri, curve)) throw std::invalid_argument("locate_in_pieces: weights are not admissible");
  const Layout layout(tri, curve);
  const Regions regions(tri, layout);
  const CutStructure cut = compute_cut(tri, curve, layout, regions);

  std::vector<int> out;
  out.reserve(others.size());
  for (const Weights& other : others) {
    if (other == curve) {
      out.push_back(-1);
      continue;
    }
    const Weights sum = add(curve, other);
    const Layout joint(tri, sum);
    const Walk walk = walk_curves(tri, joint, false);
    if (walk.count != 2) {
      out.push_back(-1);
      continue;
    }
    // Component weights decide which walk component is `other`.
    std::vector<Weights> comp(2, Weights(sum.size(), 0));
    for (int p = 0; p < joint.points(); ++p) ++comp[walk.component[p]][joint.edge_of_point(p)];
    int target;
    if (comp[0] == other && comp[1] == curve) target = 0;
    else if (comp[1] == other && comp[0] == curve) target = 1;
    else {
      out.push_back(-1);
      continue;
    }
    // A point of `other` lies in the segment of `curve` given by the number
    // of `curve` points before it along the edge.
    int located = -2;
    for (int e = 0; e < tri.edge_count() && located != -1; ++e) {
      int before = 0;
      for (int p = 0; p < sum[e]; ++p) {
        const int id = joint.offset(e) + p;
        if (walk.component[id] != target) {
          ++before;
          continue;
        }
        const int piece = cut.piece_of_region[regions.segment_region(tri.edge(e).slot_a, before)];
        if (located == -2) located = piece;
        else if (located != piece) {
          located = -1;
          break;
        }
      }
    }
    out.push_back(located < 0 ? -1 : located);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::OneSided: return "OneSided";
    case CurveKind::TwoSidedNonseparating: return "TwoSidedNonseparating";
    case CurveKind::Separating: return "Separating";
  }
  return "?";
}

std::string_view to_string(Triviality verdict) {
  switch (verdict) {
    case Triviality::Nontrivial: return "Nontrivial";
    case Triviality::BoundsDisc: return "BoundsDisc";
    case Triviality::BoundsOncePuncturedDisc: return "BoundsOncePuncturedDisc";
    case Triviality::BoundsMobiusBand: return "BoundsMobiusBand";
  }
  return "?";
}

bool CurveClass::is_k_separating(int k) const {
  return std::any_of(pieces.begin(), pieces.end(), [k](const CutPiece& p) { return p.is_punctured_disc(k); });
}

Classification classify(const Triangulation& tri, const Weights& w) {
  Classification out;
  out.pieces = cut_along(tri, w);
  const bool separating = out.pieces.size() == 2;
  if (separating) {
    for (const CutPiece& p : out.pieces) {
      if (p.is_punctured_disc(0)) out.verdict = Triviality::BoundsDisc;
      else if (p.is_punctured_disc(1)) out.verdict = Triviality::BoundsOncePuncturedDisc;
      else if (!p.orientable && p.genus == 1 && p.punctures.empty() && p.boundary_count == 1) {
        out.verdict = Triviality::BoundsMobiusBand;
      }
      if (out.verdict != Triviality::Nontrivial) return out;
    }
  }
  CurveClass curve;
  curve.coords = w;
  curve.pieces = out.pieces;
  if (separating) {
    curve.kind = CurveKind::Separating;
    for (const CutPiece& p : out.pieces) {
      if (p.orientable && p.genus == 0 && p.boundary_count == 1) {
        const int k = static_cast<int>(p.punctures.size());
        if (!curve.k_separating || k < *curve.k_separating) curve.k_separating = k;
      }
    }
  } else {
    curve.kind = out.pieces.front().boundary_count == 1 ? CurveKind::OneSided : CurveKind::TwoSidedNonseparating;
  }
  out.curve = std::move(curve);
  return out;
}

bool disjoint(const Triangulation& tri, const Weights& a, const Weights& b) {
  if (a == b) throw SameClass("disjoint: same class");
  std::vector<Weights> comps = trace(tri, add(a, b));
  if (comps.size() != 2) return false;
  const auto& lo = std::min(a, b);
  const auto& hi = std::max(a, b);
  return comps[0] == lo && comps[1] == hi;
}

Weights transport_flip(const Triangulation& tri, const Weights& w, int e) {
  check_shape(tri, w);
  const FlipQuad quad = flip_quad(tri, e);
  const std::array<int, 5> sides = {quad.side_a[0], quad.side_a[1], quad.side_b[0], quad.side_b[1], e};
  for (std::size_t i = 0; i < sides.size(); ++i) {
    for (std::size_t j = i + 1; j < sides.size(); ++j) {
      if (sides[i] == sides[j]) {
        throw Untransportable("untransportable across this flip: quadrilateral sides are not distinct edges");
      }
    }
  }
  Weights out = w;
  out[e] = std::max(w[quad.side_a[0]] + w[quad.side_b[0]], w[quad.side_a[1]] + w[quad.side_b[1]]) - w[e];
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<CurveClass> enumerate_vertices(const Triangulation& tri, int bound) {
  if (bound < 0) throw std::invalid_argument("enumerate_vertices: bound must be nonnegative");
  const int e = tri.edge_count();
  const int t = tri.triangle_count();
  // Triangles checked once their last edge (in index order) is assigned.
  std::vector<std::vector<std::array<int, 3>>> closing(e);
  for (int k = 0; k < t; ++k) {
    std::array<int, 3> sides = {tri.edge_of(slot_of(k, 0)), tri.edge_of(slot_of(k, 1)), tri.edge_of(slot_of(k, 2))};
    closing[*std::max_element(sides.begin(), sides.end())].push_back(sides);
  }

  const int lead = std::min(e, 2);
  int shards = 1;
  for (int i = 0; i < lead; ++i) shards *= bound + 1;
  std::vector<std::vector<CurveClass>> found(shards);

  detail::parallel_for(shards, [&](int shard) {
    Weights w(e, 0);
    int code = shard;
    for (int i = lead - 1; i >= 0; --i) {
      w[i] = code % (bound + 1);
      code /= bound + 1;
    }
    auto fits = [&](int f) {
      for (const auto& s : closing[f]) {
        if (!triangle_ok(w[s[0]], w[s[1]], w[s[2]])) return false;
      }
      return true;
    };
    for (int i = 0; i < lead; ++i) {
      if (!fits(i)) return;
    }
    auto& out = found[shard];
    auto visit = [&](auto&& self, int f) -> void {
      if (f == e) {
        if (!is_connected_curve(tri, w)) return;
        Classification c = classify(tri, w);
        if (c.verdict == Triviality::Nontrivial) out.push_back(std::move(*c.curve));
        return;
      }
      for (int x = 0; x <= bound; ++x) {
        w[f] = x;
        if (fits(f)) self(self, f + 1);
      }
      w[f] = 0;
    };
    visit(visit, lead);
  });

  std::vector<CurveClass> out;
  for (auto& shard : found) {
    for (auto& c : shard) out.push_back(std::move(c));
  }
  return out;
}

Weights peripheral_curve(const Triangulation& tri, int puncture) {
  if (puncture < 0 || puncture >= tri.puncture_count()) throw std::out_of_range("unknown puncture");
  Weights w(tri.edge_count(), 0);
  for (int f = 0; f < tri.edge_count(); ++f) {
    for (int end : tri.endpoints(f)) {
      if (end == puncture) ++w[f];
    }
  }
  return w;
}

std::vector<Weights> arc_neighborhood_curves(const Triangulation& tri, int e) {
  if (e < 0 || e >= tri.edge_count()) throw std::out_of_range("edge index out of range");
  const auto ends = tri.endpoints(e);
  Weights w(tri.edge_count(), 0);
  for (int f = 0; f < tri.edge_count(); ++f) {
    if (f == e) continue;
    for (int end : tri.endpoints(f)) {
      if (end == ends[0] || end == ends[1]) ++w[f];
    }
  }
  if (!is_admissible(tri, w)) throw std::logic_error("arc neighborhood boundary is not admissible");
  return trace(tri, w);
}

}  // namespace curvecx
