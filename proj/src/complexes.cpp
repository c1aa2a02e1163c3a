#include "curvecx/complexes.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "curvecx/detail/parallel.hpp"
#include "curvecx/detail/union_find.hpp"

namespace curvecx {

namespace {

using Bits = std::vector<std::uint64_t>;

int words_for(int n) { return (n + 63) / 64; }
bool test_bit(const Bits& bits, int i) { return (bits[i >> 6] >> (i & 63)) & 1u; }
void set_bit(Bits& bits, int i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
void clear_bit(Bits& bits, int i) { bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

bool any(const Bits& bits) {
  return std::any_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w != 0; });
}

Bits intersect(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

int count_and(const Bits& a, const Bits& b) {
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

template <typename Fn>
void for_each_bit(const Bits& bits, Fn&& fn) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      fn(static_cast<int>(w * 64 + bit));
      word &= word - 1;
    }
  }
}

std::vector<std::vector<int>> components_of(const std::vector<int>& vertices,
                                            const std::vector<std::array<int, 2>>& edges) {
  std::map<int, int> index;
  for (int v : vertices) index.emplace(v, static_cast<int>(index.size()));
  detail::ParityUnionFind uf(static_cast<int>(vertices.size()));
  for (auto [a, b] : edges) uf.unite(index.at(a), index.at(b));
  std::map<int, std::vector<int>> groups;
  for (int v : vertices) groups[uf.root(index.at(v))].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ComplexSnapshot::ComplexSnapshot(SurfaceSig surface, Triangulation triangulation, int bound,
                                 std::vector<CurveClass> vertices)
    : surface_(surface), triangulation_(std::move(triangulation)), bound_(bound), vertices_(std::move(vertices)) {
  const int n = size();
  rows_.assign(n, Bits(words_for(n), 0));
  std::vector<Bits> rows(n, Bits(words_for(n), 0));
  detail::parallel_for(n, [&](int a) {
    for (int b = a + 1; b < n; ++b) {
      if (disjoint(triangulation_, vertices_[a].coords, vertices_[b].coords)) set_bit(rows[a], b);
    }
  });
  for (int a = 0; a < n; ++a) {
    for_each_bit(rows[a], [&](int b) {
      set_bit(rows_[a], b);
      set_bit(rows_[b], a);
    });
  }
}

bool ComplexSnapshot::adjacent(int a, int b) const { return a != b && test_bit(rows_.at(a), b); }

std::vector<int> ComplexSnapshot::neighbors(int v) const {
  std::vector<int> out;
  for_each_bit(rows_.at(v), [&](int u) { out.push_back(u); });
  return out;
}

std::vector<std::array<int, 2>> ComplexSnapshot::edge_list() const {
  std::vector<std::array<int, 2>> out;
  for (int a = 0; a < size(); ++a) {
    for_each_bit(rows_[a], [&](int b) {
      if (a < b) out.push_back({a, b});
    });
  }
  return out;
}

std::size_t ComplexSnapshot::edge_count() const {
  std::size_t total = 0;
  for (const Bits& row : rows_) {
    for (std::uint64_t w : row) total += std::popcount(w);
  }
  return total / 2;
}

std::optional<int> ComplexSnapshot::find(const Weights& coords) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), coords,
                             [](const CurveClass& c, const Weights& w) { return c.coords < w; });
  if (it == vertices_.end() || it->coords != coords) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

ComplexSnapshot build_snapshot(const Triangulation& tri, int bound) {
  return ComplexSnapshot(tri.surface(), tri, bound, enumerate_vertices(tri, bound));
}

ComplexSnapshot build_snapshot(const SurfaceSig& sig, int bound) { return build_snapshot(build_reference(sig), bound); }

// ---------------------------------------------------------------------------
// Links

namespace {

DualLinkView link_view(const ComplexSnapshot& snapshot, int v, bool dual) {
  if (v < 0 || v >= snapshot.size()) throw std::out_of_range("unknown vertex " + std::to_string(v));
  DualLinkView view;
  view.center = v;
  view.vertices = snapshot.neighbors(v);
  for (std::size_t i = 0; i < view.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < view.vertices.size(); ++j) {
      const bool adj = snapshot.adjacent(view.vertices[i], view.vertices[j]);
      if (adj != dual) view.edges.push_back({view.vertices[i], view.vertices[j]});
    }
  }
  view.components = components_of(view.vertices, view.edges);
  return view;
}

}  // namespace

DualLinkView link(const ComplexSnapshot& snapshot, int v) { return link_view(snapshot, v, false); }
DualLinkView dual_link(const ComplexSnapshot& snapshot, int v) { return link_view(snapshot, v, true); }

std::vector<int> SidePartition::members(int piece) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < link_vertices.size(); ++i) {
    if (side[i] == piece) out.push_back(link_vertices[i]);
  }
  return out;
}

SidePartition side_partition(const ComplexSnapshot& snapshot, int v) {
  if (v < 0 || v >= snapshot.size()) throw std::out_of_range("unknown vertex " + std::to_string(v));
  const CurveClass& center = snapshot.vertex(v);
  if (!center.separating()) throw std::invalid_argument("side_partition: vertex is not separating");
  SidePartition out;
  out.center = v;
  out.pieces = center.pieces;
  out.link_vertices = snapshot.neighbors(v);
  std::vector<Weights> others;
  for (int u : out.link_vertices) others.push_back(snapshot.vertex(u).coords);
  out.side = locate_in_pieces(snapshot.triangulation(), center.coords, others);
  for (std::size_t i = 0; i < out.side.size(); ++i) {
    if (out.side[i] < 0) {
      throw std::logic_error("side_partition: link vertex " + std::to_string(out.link_vertices[i]) +
                             " is not contained in one piece");
    }
  }
  for (std::size_t i = 0; i < out.link_vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < out.link_vertices.size(); ++j) {
      if (out.side[i] != out.side[j] && !snapshot.adjacent(out.link_vertices[i], out.link_vertices[j])) {
        ++out.crossing_dual_edges;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cliques

bool is_clique(const ComplexSnapshot& snapshot, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!snapshot.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

std::vector<CliqueAudit> maximal_simplices(const ComplexSnapshot& snapshot) {
  const int n = snapshot.size();
  std::vector<std::vector<int>> cliques;
  std::vector<int> current;
  // Bron-Kerbosch with Tomita pivoting.
  std::function<void(Bits, Bits)> expand = [&](Bits candidates, Bits excluded) {
    if (!any(candidates) && !any(excluded)) {
      cliques.push_back(current);
      std::sort(cliques.back().begin(), cliques.back().end());
      return;
    }
    int pivot = -1;
    int best = -1;
    auto consider = [&](int u) {
      const int score = count_and(candidates, snapshot.row(u));
      if (score > best) {
        best = score;
        pivot = u;
      }
    };
    for_each_bit(candidates, consider);
    for_each_bit(excluded, consider);
    Bits branch = candidates;
    for (std::size_t w = 0; w < branch.size(); ++w) branch[w] &= ~snapshot.row(pivot)[w];
    for_each_bit(branch, [&](int v) {
      current.push_back(v);
      expand(intersect(candidates, snapshot.row(v)), intersect(excluded, snapshot.row(v)));
      current.pop_back();
      clear_bit(candidates, v);
      set_bit(excluded, v);
    });
  };
  if (n > 0) {
    Bits all(words_for(n), 0);
    for (int v = 0; v < n; ++v) set_bit(all, v);
    expand(all, Bits(words_for(n), 0));
  }
  std::sort(cliques.begin(), cliques.end());

  const SurfaceSig& sig = snapshot.surface();
  std::optional<SimplexDimRange> range;
  try {
    range = maximal_simplex_range(sig);
  } catch (const HypothesisError&) {
  }
  std::optional<int> pants;
  if (euler_char(sig) < 0) pants = pants_count(sig);

  std::vector<CliqueAudit> out;
  out.reserve(cliques.size());
  for (auto& clique : cliques) {
    CliqueAudit audit;
    audit.dimension = static_cast<int>(clique.size()) - 1;
    for (int v : clique) audit.one_sided += snapshot.vertex(v).one_sided() ? 1 : 0;
    const int m = audit.one_sided;
    const int l = audit.dimension;
    if (pants) audit.eq1_ok = 3 * *pants == sig.punctures + m + 2 * (l + 1 - m);
    if (range && l == range->hi) audit.certified = true;
    if (!sig.orientable && sig.genus >= 3 && audit.eq1_ok.value_or(false) && m % 2 == sig.genus % 2) {
      audit.certified = true;
    }
    audit.clique = std::move(clique);
    out.push_back(std::move(audit));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pentagons and simple pairs

bool is_pentagon(const ComplexSnapshot& snapshot, const std::array<int, 5>& ids) {
  for (int i = 0; i < 5; ++i) {
    if (ids[i] < 0 || ids[i] >= snapshot.size()) throw std::out_of_range("unknown vertex " + std::to_string(ids[i]));
    for (int j = i + 1; j < 5; ++j) {
      if (ids[i] == ids[j]) throw std::invalid_argument("is_pentagon: vertices must be distinct");
    }
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == 4);
      if (snapshot.adjacent(ids[i], ids[j]) != consecutive) return false;
    }
  }
  return true;
}

bool same_pentagon(const std::array<int, 5>& lhs, const std::array<int, 5>& rhs) {
  for (int shift = 0; shift < 5; ++shift) {
    bool forward = true;
    bool backward = true;
    for (int i = 0; i < 5; ++i) {
      forward = forward && lhs[i] == rhs[(shift + i) % 5];
      backward = backward && lhs[i] == rhs[(shift - i + 5) % 5];
    }
    if (forward || backward) return true;
  }
  return false;
}

namespace {

void require_vertex(const ComplexSnapshot& snapshot, int v) {
  if (v < 0 || v >= snapshot.size()) throw std::out_of_range("unknown vertex " + std::to_string(v));
}

void check_genus_one(const ComplexSnapshot& snapshot, int alpha, int beta) {
  const SurfaceSig& sig = snapshot.surface();
  if (sig.orientable || sig.genus != 1 || sig.punctures < 5) {
    throw std::invalid_argument("simple pair witness needs N{1,n} with n >= 5, got " + sig.to_string());
  }
  require_vertex(snapshot, alpha);
  require_vertex(snapshot, beta);
  if (!snapshot.vertex(alpha).is_k_separating(2) || !snapshot.vertex(beta).is_k_separating(2)) {
    throw std::invalid_argument("simple pair witness: alpha and beta must be 2-separating");
  }
}

}  // namespace

std::vector<std::string> check_simple_pair_witness(const ComplexSnapshot& snapshot, int alpha, int beta,
                                                   const SimplePairWitness& witness) {
  check_genus_one(snapshot, alpha, beta);
  const int n = snapshot.surface().punctures;
  std::vector<std::string> failures;
  if (static_cast<int>(witness.gammas.size()) != n - 1) {
    failures.push_back("witness must list gamma_1..gamma_" + std::to_string(n - 1));
    return failures;
  }
  for (int g : witness.gammas) require_vertex(snapshot, g);
  require_vertex(snapshot, witness.delta);
  const auto& gm = witness.gammas;
  auto gamma = [&](int k) { return gm[k - 1]; };

  std::set<int> distinct(gm.begin(), gm.end());
  distinct.insert(witness.delta);
  distinct.insert(alpha);
  distinct.insert(beta);
  if (static_cast<int>(distinct.size()) != n + 2) failures.push_back("vertices are not pairwise distinct");
  else if (!is_pentagon(snapshot, {gamma(1), gamma(2), alpha, gamma(3), beta})) {
    failures.push_back("(i) (gamma_1, gamma_2, alpha, gamma_3, beta) is not a pentagon");
  }

  if (!snapshot.vertex(gamma(1)).is_k_separating(2)) failures.push_back("(ii) gamma_1 is not 2-separating");
  if (!snapshot.vertex(gamma(2)).is_k_separating(3)) failures.push_back("(ii) gamma_2 is not 3-separating");
  for (int k = 3; k <= n - 1; ++k) {
    if (!snapshot.vertex(gamma(k)).is_k_separating(k)) {
      failures.push_back("(ii) gamma_" + std::to_string(k) + " is not " + std::to_string(k) + "-separating");
    }
  }
  if (!snapshot.vertex(witness.delta).one_sided()) failures.push_back("(ii) delta is not one-sided");

  std::vector<int> sigma(gm.begin() + 3, gm.end());
  const std::array<std::pair<int, int>, 4> heads = {
      std::pair{alpha, gamma(3)}, std::pair{alpha, gamma(2)}, std::pair{beta, gamma(3)}, std::pair{gamma(1), gamma(2)}};
  const std::array<const char*, 4> names = {"{alpha, gamma_3}", "{alpha, gamma_2}", "{beta, gamma_3}",
                                            "{gamma_1, gamma_2}"};
  for (std::size_t i = 0; i < heads.size(); ++i) {
    std::vector<int> simplex = sigma;
    simplex.push_back(heads[i].first);
    simplex.push_back(heads[i].second);
    simplex.push_back(witness.delta);
    std::set<int> unique(simplex.begin(), simplex.end());
    // Maximal simplices of C(N{1,n}) all have dimension n-2.
    if (!is_clique(snapshot, simplex) || static_cast<int>(unique.size()) - 1 != n - 2) {
      failures.push_back(std::string("(iii) ") + names[i] + " + sigma + delta is not a simplex of dimension n-2");
    }
  }
  return failures;
}

std::optional<SimplePairWitness> find_simple_pair_witness(const ComplexSnapshot& snapshot, int alpha, int beta) {
  check_genus_one(snapshot, alpha, beta);
  const int n = snapshot.surface().punctures;
  if (alpha == beta || snapshot.adjacent(alpha, beta)) return std::nullopt;
  const int words = words_for(snapshot.size());

  // Pentagon members by role, already filtered against alpha and beta.
  auto select = [&](auto&& pred) {
    std::vector<int> out;
    for (int v = 0; v < snapshot.size(); ++v) {
      if (v != alpha && v != beta && pred(snapshot.vertex(v), v)) out.push_back(v);
    }
    return out;
  };
  const auto near_a = [&](int v) { return snapshot.adjacent(v, alpha); };
  const auto near_b = [&](int v) { return snapshot.adjacent(v, beta); };
  const std::vector<int> g3_pool =
      select([&](const CurveClass& c, int v) { return c.is_k_separating(3) && near_a(v) && near_b(v); });
  const std::vector<int> g2_pool =
      select([&](const CurveClass& c, int v) { return c.is_k_separating(3) && near_a(v) && !near_b(v); });
  const std::vector<int> g1_pool =
      select([&](const CurveClass& c, int v) { return c.is_k_separating(2) && !near_a(v) && near_b(v); });

  // delta and gamma_4..gamma_{n-1} belong to every simplex of condition (iii), so
  // they form a clique inside the common neighborhood of the pentagon.
  std::vector<Bits> typed(n + 1, Bits(words, 0));
  for (int v = 0; v < snapshot.size(); ++v) {
    const CurveClass& c = snapshot.vertex(v);
    if (c.one_sided()) set_bit(typed[0], v);
    for (int k = 4; k <= n - 1; ++k) {
      if (c.is_k_separating(k)) set_bit(typed[k], v);
    }
  }

  SimplePairWitness witness;
  witness.gammas.assign(n - 1, -1);
  // Fills gamma_k..gamma_{n-1} then delta inside `common`.
  std::function<bool(int, const Bits&)> fill = [&](int k, const Bits& common) -> bool {
    const int role = k <= n - 1 ? k : 0;
    const Bits pool = intersect(common, typed[role]);
    bool found = false;
    for (std::size_t w = 0; w < pool.size() && !found; ++w) {
      std::uint64_t word = pool[w];
      while (word != 0 && !found) {
        const int v = static_cast<int>(w * 64 + std::countr_zero(word));
        word &= word - 1;
        if (role == 0) {
          witness.delta = v;
          found = check_simple_pair_witness(snapshot, alpha, beta, witness).empty();
        } else {
          witness.gammas[k - 1] = v;
          found = fill(k + 1, intersect(common, snapshot.row(v)));
        }
      }
    }
    return found;
  };

  for (int g3 : g3_pool) {
    for (int g2 : g2_pool) {
      if (g2 == g3 || snapshot.adjacent(g2, g3)) continue;
      for (int g1 : g1_pool) {
        if (!snapshot.adjacent(g1, g2) || snapshot.adjacent(g1, g3)) continue;
        Bits common = intersect(snapshot.row(alpha), snapshot.row(beta));
        for (int g : {g1, g2, g3}) common = intersect(common, snapshot.row(g));
        if (!any(common)) continue;
        witness.gammas[0] = g1;
        witness.gammas[1] = g2;
        witness.gammas[2] = g3;
        if (fill(4, common)) return witness;
      }
    }
  }
  return std::nullopt;
}

bool sphere_pentagon_check(const ComplexSnapshot& snapshot, int alpha, int beta, const std::vector<int>& gammas) {
  const SurfaceSig& sig = snapshot.surface();
  const int n = sig.punctures;
  if (!sig.orientable || sig.genus != 0 || n < 5) {
    throw std::invalid_argument("sphere_pentagon_check needs S{0,n} with n >= 5, got " + sig.to_string());
  }
  require_vertex(snapshot, alpha);
  require_vertex(snapshot, beta);
  if (!snapshot.vertex(alpha).is_k_separating(2) || !snapshot.vertex(beta).is_k_separating(2)) {
    throw std::invalid_argument("sphere_pentagon_check: alpha and beta must be 2-separating");
  }
  if (static_cast<int>(gammas.size()) != n - 2) {
    throw std::invalid_argument("sphere_pentagon_check: expected gamma_1..gamma_" + std::to_string(n - 2));
  }
  for (int g : gammas) require_vertex(snapshot, g);
  auto gamma = [&](int k) { return gammas[k - 1]; };

  std::set<int> distinct(gammas.begin(), gammas.end());
  distinct.insert(alpha);
  distinct.insert(beta);
  if (static_cast<int>(distinct.size()) != n) return false;
  if (!is_pentagon(snapshot, {gamma(1), gamma(2), alpha, gamma(3), beta})) return false;

  auto sep = [&](int k, int j) { return snapshot.vertex(gamma(k)).is_k_separating(j); };
  if (!sep(1, 2) || !sep(n - 2, 2) || !sep(2, 3)) return false;
  for (int k = 3; 2 * k <= n; ++k) {
    if (!sep(k, k) || !sep(n - k, k)) return false;
  }

  std::vector<int> sigma(gammas.begin() + 3, gammas.end());
  for (auto [a, b] : {std::pair{alpha, gamma(3)}, std::pair{alpha, gamma(2)}, std::pair{beta, gamma(3)},
                      std::pair{gamma(1), gamma(2)}}) {
    std::vector<int> simplex = sigma;
    simplex.push_back(a);
    simplex.push_back(b);
    // Maximal simplices of C(S{0,n}) have dimension n-4.
    if (!is_clique(snapshot, simplex) || static_cast<int>(simplex.size()) - 1 != n - 4) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Arcs

bool is_chain(const Triangulation& tri, const std::vector<int>& edges) {
  if (edges.empty()) return false;
  for (int e : edges) {
    if (e < 0 || e >= tri.edge_count()) throw std::out_of_range("edge index out of range");
  }
  if (std::set<int>(edges.begin(), edges.end()).size() != edges.size()) return false;
  std::vector<std::array<int, 2>> ends;
  for (int e : edges) ends.push_back(tri.endpoints(e));
  for (auto& p : ends) {
    if (p[0] == p[1]) return false;
  }
  if (edges.size() == 1) return true;

  auto shared = [](const std::array<int, 2>& a, const std::array<int, 2>& b) {
    int count = 0;
    for (int x : a) {
      for (int y : b) count += x == y ? 1 : 0;
    }
    return count;
  };
  std::vector<int> sequence;
  for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
    if (shared(ends[i], ends[i + 1]) != 1) return false;
  }
  // Orient the first arc away from the second.
  const int common = (ends[0][0] == ends[1][0] || ends[0][0] == ends[1][1]) ? ends[0][0] : ends[0][1];
  sequence.push_back(ends[0][0] == common ? ends[0][1] : ends[0][0]);
  sequence.push_back(common);
  for (std::size_t i = 1; i < ends.size(); ++i) {
    const int last = sequence.back();
    if (ends[i][0] != last && ends[i][1] != last) return false;
    sequence.push_back(ends[i][0] == last ? ends[i][1] : ends[i][0]);
  }
  return std::set<int>(sequence.begin(), sequence.end()).size() == sequence.size();
}

std::vector<int> good_triangles(const Triangulation& tri) {
  std::vector<int> out;
  for (int k = 0; k < tri.triangle_count(); ++k) {
    std::set<int> corners, edges;
    for (int i = 0; i < 3; ++i) {
      corners.insert(tri.corner_puncture(slot_of(k, i)));
      edges.insert(tri.edge_of(slot_of(k, i)));
    }
    if (corners.size() == 3 && edges.size() == 3) out.push_back(k);
  }
  return out;
}

}  // namespace curvecx
