#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "curvecx/audit.hpp"
#include "curvecx/complexes.hpp"

using namespace curvecx;

namespace {

SurfaceSig sig(const char* text) { return SurfaceSig::parse(text); }

// Snapshots are reused across cases; building N1,5 takes a second or so.
const ComplexSnapshot& cached(const char* text, int bound) {
  static std::map<std::pair<std::string, int>, ComplexSnapshot> cache;
  const auto key = std::make_pair(std::string(text), bound);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_snapshot(sig(text), bound)).first;
  return it->second;
}

int component_count(int n, const std::vector<std::array<int, 2>>& edges, const std::vector<int>& labels) {
  std::map<int, int> index;
  for (int i = 0; i < n; ++i) index[labels[i]] = i;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[index.at(a)].push_back(index.at(b));
    adj[index.at(b)].push_back(index.at(a));
  }
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack = {s};
    seen[s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int x : adj[u]) {
        if (!seen[x]) stack.push_back(x), seen[x] = true;
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("snapshot adjacency agrees with pairwise disjointness") {
  for (auto [text, bound] : {std::pair{"N1,3", 3}, std::pair{"S0,5", 2}, std::pair{"N3,1", 2}}) {
    CAPTURE(std::string(text));
    const ComplexSnapshot& snap = cached(text, bound);
    REQUIRE(snap.size() > 0);
    std::size_t edges = 0;
    for (int a = 0; a < snap.size(); ++a) {
      CHECK_FALSE(snap.adjacent(a, a));
      for (int b = a + 1; b < snap.size(); ++b) {
        const bool d = disjoint(snap.triangulation(), snap.vertex(a).coords, snap.vertex(b).coords);
        CHECK(snap.adjacent(a, b) == d);
        CHECK(snap.adjacent(b, a) == d);
        edges += d ? 1 : 0;
      }
      CHECK(snap.find(snap.vertex(a).coords) == a);
    }
    CHECK(snap.edge_count() == edges);
    CHECK(snap.edge_list().size() == edges);
  }
  const ComplexSnapshot& n12 = cached("N1,2", 6);
  CHECK(n12.size() == 2);
  CHECK(n12.edge_count() == 0);
  CHECK_FALSE(n12.find(Weights(3, 0)).has_value());
  const ComplexSnapshot& torus = cached("S1,1", 6);
  CHECK(torus.size() > 10);
  CHECK(torus.edge_count() == 0);
}

TEST_CASE("link and dual link split the link pairs") {
  const ComplexSnapshot& snap = cached("N1,4", 3);
  for (int v = 0; v < snap.size(); v += 5) {
    const DualLinkView l = link(snap, v);
    const DualLinkView d = dual_link(snap, v);
    CHECK(l.vertices == snap.neighbors(v));
    CHECK(d.vertices == l.vertices);
    const std::size_t m = l.vertices.size();
    CHECK(l.edges.size() + d.edges.size() == m * (m - 1) / 2);
    for (auto [a, b] : d.edges) CHECK_FALSE(snap.adjacent(a, b));
    for (auto [a, b] : l.edges) CHECK(snap.adjacent(a, b));
    CHECK(static_cast<int>(d.components.size()) == component_count(static_cast<int>(m), d.edges, d.vertices));
    std::size_t covered = 0;
    for (const auto& c : d.components) covered += c.size();
    CHECK(covered == m);
  }
  CHECK_THROWS_AS(link(snap, snap.size()), std::out_of_range);
}

TEST_CASE("side partitions of separating vertices") {
  const ComplexSnapshot& snap = cached("N1,5", 3);
  int by_k[6] = {};
  for (int v = 0; v < snap.size(); ++v) {
    const CurveClass& c = snap.vertex(v);
    if (!c.separating()) {
      CHECK_THROWS_AS(side_partition(snap, v), std::invalid_argument);
      continue;
    }
    const int k = *c.k_separating;
    if (k != 3 && k != 4) continue;
    if (by_k[k]++ >= 25) continue;
    const SidePartition part = side_partition(snap, v);
    REQUIRE(part.pieces.size() == 2);
    CHECK(part.crossing_dual_edges == 0);
    const auto a = part.members(0);
    const auto b = part.members(1);
    CHECK(a.size() + b.size() == part.link_vertices.size());
    CHECK_FALSE(a.empty());
    CHECK_FALSE(b.empty());
    // Curves on different sides never meet.
    for (int x : a) {
      for (int y : b) CHECK(snap.adjacent(x, y));
    }
    CHECK_FALSE(dual_link(snap, v).connected());
  }
  CHECK(by_k[3] > 0);
  CHECK(by_k[4] > 0);
}

TEST_CASE("maximal simplices") {
  {
    const ComplexSnapshot& snap = cached("N1,4", 3);
    const auto cliques = maximal_simplices(snap);
    REQUIRE_FALSE(cliques.empty());
    std::set<std::array<int, 2>> edges_seen;
    std::set<std::vector<int>> distinct;
    for (const auto& q : cliques) {
      CHECK(is_clique(snap, q.clique));
      CHECK(q.dimension + 1 == static_cast<int>(q.clique.size()));
      CHECK(std::is_sorted(q.clique.begin(), q.clique.end()));
      distinct.insert(q.clique);
      int one_sided = 0;
      for (int v : q.clique) one_sided += snap.vertex(v).one_sided() ? 1 : 0;
      CHECK(q.one_sided == one_sided);
      for (int u = 0; u < snap.size(); ++u) {
        if (std::find(q.clique.begin(), q.clique.end(), u) != q.clique.end()) continue;
        auto bigger = q.clique;
        bigger.push_back(u);
        CHECK_FALSE(is_clique(snap, bigger));
      }
      for (std::size_t i = 0; i < q.clique.size(); ++i) {
        for (std::size_t j = i + 1; j < q.clique.size(); ++j) edges_seen.insert({q.clique[i], q.clique[j]});
      }
      CHECK(q.dimension <= 2);
      if (q.certified) CHECK(q.dimension == 2);
    }
    CHECK(distinct.size() == cliques.size());
    CHECK(edges_seen.size() == snap.edge_count());
  }
  {
    const auto cliques = maximal_simplices(cached("N3,1", 2));
    std::set<std::pair<int, int>> certified;
    for (const auto& q : cliques) {
      REQUIRE(q.eq1_ok.has_value());
      if (q.certified) {
        CHECK(*q.eq1_ok);
        CHECK(q.one_sided % 2 == 1);
        certified.insert({q.dimension, q.one_sided});
      }
    }
    for (const auto& [l, m] : certified) CHECK(onesided_count_for_dimension(sig("N3,1"), l) == m);
  }
  const auto torus = maximal_simplices(cached("S1,1", 4));
  for (const auto& q : torus) CHECK(q.dimension == 0);
}

TEST_CASE("pentagons") {
  const ComplexSnapshot& snap = cached("S0,5", 2);
  // Pairwise disjoint or pairwise intersecting sets are never pentagons.
  std::vector<int> independent;
  for (int v = 0; v < snap.size() && independent.size() < 5; ++v) {
    if (std::none_of(independent.begin(), independent.end(), [&](int u) { return snap.adjacent(u, v); })) {
      independent.push_back(v);
    }
  }
  REQUIRE(independent.size() == 5);
  CHECK_FALSE(is_pentagon(snap, {independent[0], independent[1], independent[2], independent[3], independent[4]}));
  CHECK_THROWS(is_pentagon(snap, {0, 0, 1, 2, 3}));
  CHECK_THROWS(is_pentagon(snap, {0, 1, 2, 3, snap.size()}));

  // The curve complex of S0,5 is a graph; find a 5-cycle with no chords.
  std::optional<std::array<int, 5>> found;
  for (int a = 0; a < snap.size() && !found; ++a) {
    for (int b : snap.neighbors(a)) {
      for (int c : snap.neighbors(b)) {
        if (c == a || snap.adjacent(a, c)) continue;
        for (int d : snap.neighbors(c)) {
          if (d == a || d == b || snap.adjacent(d, a) || snap.adjacent(d, b)) continue;
          for (int e : snap.neighbors(d)) {
            if (e == a || e == b || e == c || !snap.adjacent(e, a) || snap.adjacent(e, b) || snap.adjacent(e, c)) {
              continue;
            }
            found = std::array<int, 5>{a, b, c, d, e};
            break;
          }
          if (found) break;
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  REQUIRE(found.has_value());
  const auto p = *found;
  CHECK(is_pentagon(snap, p));
  CHECK(is_pentagon(snap, {p[4], p[3], p[2], p[1], p[0]}));
  CHECK_FALSE(is_pentagon(snap, {p[0], p[2], p[1], p[3], p[4]}));

  CHECK(same_pentagon({1, 2, 3, 4, 5}, {3, 4, 5, 1, 2}));
  CHECK(same_pentagon({1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}));
  CHECK(same_pentagon({1, 2, 3, 4, 5}, {2, 1, 5, 4, 3}));
  CHECK_FALSE(same_pentagon({1, 2, 3, 4, 5}, {1, 3, 2, 4, 5}));
  CHECK_FALSE(same_pentagon({1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}));
}

TEST_CASE("simple pair witnesses") {
  const ComplexSnapshot& snap = cached("N1,5", 3);
  const Triangulation& tri = snap.triangulation();
  const auto pair = reference_arc_pair(tri, true);
  REQUIRE(pair.has_value());
  const auto alpha = snap.find(arc_neighborhood_curves(tri, (*pair)[0]).front());
  const auto beta = snap.find(arc_neighborhood_curves(tri, (*pair)[1]).front());
  REQUIRE(alpha.has_value());
  REQUIRE(beta.has_value());
  CHECK_FALSE(snap.adjacent(*alpha, *beta));

  const auto witness = find_simple_pair_witness(snap, *alpha, *beta);
  REQUIRE(witness.has_value());
  CHECK(witness->gammas.size() == 4);
  CHECK(check_simple_pair_witness(snap, *alpha, *beta, *witness).empty());
  CHECK(snap.vertex(witness->delta).one_sided());
  CHECK(is_pentagon(snap, {witness->gammas[0], witness->gammas[1], *alpha, witness->gammas[2], *beta}));

  SimplePairWitness broken = *witness;
  std::swap(broken.gammas[0], broken.gammas[2]);
  CHECK_FALSE(check_simple_pair_witness(snap, *alpha, *beta, broken).empty());
  broken = *witness;
  broken.gammas[3] = broken.gammas[0];
  CHECK_FALSE(check_simple_pair_witness(snap, *alpha, *beta, broken).empty());

  // Circles around arcs with no common endpoint are disjoint.
  const auto apart = reference_arc_pair(tri, false);
  REQUIRE(apart.has_value());
  const auto a2 = snap.find(arc_neighborhood_curves(tri, (*apart)[0]).front());
  const auto b2 = snap.find(arc_neighborhood_curves(tri, (*apart)[1]).front());
  REQUIRE((a2 && b2));
  CHECK(snap.adjacent(*a2, *b2));
  CHECK_FALSE(find_simple_pair_witness(snap, *a2, *b2).has_value());

  CHECK_THROWS(find_simple_pair_witness(cached("N1,4", 3), 0, 1));
}

TEST_CASE("sphere pentagon check") {
  const ComplexSnapshot& snap = cached("S0,5", 3);
  const Triangulation& tri = snap.triangulation();
  const auto pair = reference_arc_pair(tri, true);
  REQUIRE(pair.has_value());
  const int alpha = *snap.find(arc_neighborhood_curves(tri, (*pair)[0]).front());
  const int beta = *snap.find(arc_neighborhood_curves(tri, (*pair)[1]).front());
  const auto gammas = find_sphere_witness(snap, alpha, beta);
  REQUIRE(gammas.has_value());
  CHECK(sphere_pentagon_check(snap, alpha, beta, *gammas));
  auto swapped = *gammas;
  std::swap(swapped[0], swapped[1]);
  CHECK_FALSE(sphere_pentagon_check(snap, alpha, beta, swapped));
  CHECK_FALSE(sphere_pentagon_check(snap, beta, alpha, *gammas));
  CHECK_THROWS_AS(sphere_pentagon_check(snap, alpha, beta, {gammas->front()}), std::invalid_argument);
  CHECK_THROWS_AS(sphere_pentagon_check(cached("N1,5", 3), 0, 1, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("chains and good triangles") {
  const Triangulation tri = build_reference(sig("N1,5"));
  std::vector<int> proper;
  for (int e = 0; e < tri.edge_count(); ++e) {
    const auto p = tri.endpoints(e);
    if (p[0] != p[1]) {
      proper.push_back(e);
      CHECK(is_chain(tri, {e}));
    } else {
      CHECK_FALSE(is_chain(tri, {e}));
    }
  }
  CHECK_FALSE(is_chain(tri, {}));
  CHECK_THROWS_AS(is_chain(tri, {tri.edge_count()}), std::out_of_range);
  // Independent check on every ordered pair of proper arcs.
  for (int a : proper) {
    for (int b : proper) {
      if (a == b) continue;
      const auto pa = tri.endpoints(a);
      const auto pb = tri.endpoints(b);
      const std::set<int> ends = {pa[0], pa[1], pb[0], pb[1]};
      CHECK(is_chain(tri, {a, b}) == (ends.size() == 3));
    }
  }

  const Triangulation pants = build_reference(sig("S0,3"));
  CHECK(good_triangles(pants) == std::vector<int>{0, 1});
  for (const char* text : {"S0,3", "S0,5", "N1,5", "N3,1", "S1,1"}) {
    const Triangulation t = build_reference(sig(text));
    const auto good = good_triangles(t);
    for (int k = 0; k < t.triangle_count(); ++k) {
      std::set<int> corners, edges;
      for (int i = 0; i < 3; ++i) {
        corners.insert(t.corner_puncture(slot_of(k, i)));
        edges.insert(t.edge_of(slot_of(k, i)));
      }
      const bool expected = corners.size() == 3 && edges.size() == 3;
      CHECK((std::find(good.begin(), good.end(), k) != good.end()) == expected);
    }
    if (t.puncture_count() < 3) CHECK(good.empty());
  }
}
