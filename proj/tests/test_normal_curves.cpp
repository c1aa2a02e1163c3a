#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "curvecx/normal_curves.hpp"

using namespace curvecx;

namespace {

Triangulation ref(const char* text) { return build_reference(SurfaceSig::parse(text)); }

// Every vector with entries <= bound, visited in lexicographic order.
void for_each_vector(int length, int bound, const std::function<void(const Weights&)>& fn) {
  Weights w(length, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == length) {
      fn(w);
      return;
    }
    for (int x = 0; x <= bound; ++x) {
      w[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

// Brute-force reference for enumerate_vertices: scan the whole box.
std::vector<Weights> brute_vertices(const Triangulation& tri, int bound) {
  std::vector<Weights> out;
  for_each_vector(tri.edge_count(), bound, [&](const Weights& w) {
    if (!is_admissible(tri, w) || trace(tri, w).size() != 1) return;
    if (classify(tri, w).verdict == Triviality::Nontrivial) out.push_back(w);
  });
  return out;
}

std::vector<int> all_punctures(const std::vector<CutPiece>& pieces) {
  std::vector<int> labels;
  for (const auto& p : pieces) labels.insert(labels.end(), p.punctures.begin(), p.punctures.end());
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace

TEST_CASE("admissibility") {
  const Triangulation pants = ref("S0,3");
  CHECK(is_admissible(pants, {0, 0, 0}));
  CHECK_FALSE(is_admissible(pants, {1, 1, 1}));
  CHECK(is_admissible(pants, {1, 1, 2}));
  CHECK_FALSE(is_admissible(pants, {1, 1, 4}));
  CHECK_THROWS_AS(is_admissible(pants, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_admissible(pants, {1, -1, 0}), std::invalid_argument);

  const Triangulation tri = ref("N1,3");
  std::vector<Weights> admissible;
  for_each_vector(tri.edge_count(), 2, [&](const Weights& w) {
    if (is_admissible(tri, w)) admissible.push_back(w);
  });
  for (std::size_t i = 0; i < admissible.size(); i += 7) {
    for (std::size_t j = 0; j < admissible.size(); j += 11) {
      CHECK(is_admissible(tri, add(admissible[i], admissible[j])));
    }
  }
}

TEST_CASE("tracing") {
  const Triangulation tri = ref("N1,3");
  CHECK(trace(tri, Weights(tri.edge_count(), 0)).empty());

  const auto curves = enumerate_vertices(tri, 3);
  REQUIRE(curves.size() > 10);
  int disjoint_pairs = 0;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      const Weights sum = add(curves[i].coords, curves[j].coords);
      const auto parts = trace(tri, sum);
      Weights total(tri.edge_count(), 0);
      for (const auto& p : parts) total = add(total, p);
      CHECK(total == sum);
      std::vector<Weights> expected = {curves[i].coords, curves[j].coords};
      std::sort(expected.begin(), expected.end());
      if (parts == expected) ++disjoint_pairs;
    }
  }
  CHECK(disjoint_pairs > 0);

  for (const auto& c : enumerate_vertices(tri, 4)) {
    if (!c.one_sided()) continue;
    const auto doubled = trace_components(tri, scale(c.coords, 2));
    REQUIRE(doubled.size() == 1);
    CHECK_FALSE(doubled.front().one_sided);
    // The double is the boundary of the Mobius neighborhood.
    const auto verdict = classify(tri, doubled.front().weights).verdict;
    CHECK((verdict == Triviality::BoundsMobiusBand || verdict == Triviality::Nontrivial));
  }
}

TEST_CASE("cutting") {
  {
    const Triangulation tri = ref("N1,2");
    const auto curves = enumerate_vertices(tri, 6);
    REQUIRE(curves.size() == 2);
    for (const auto& c : curves) {
      const auto pieces = cut_along(tri, c.coords);
      REQUIRE(pieces.size() == 1);
      CHECK(pieces[0].orientable);
      CHECK(pieces[0].genus == 0);
      CHECK(pieces[0].punctures == std::vector<int>{0, 1});
      CHECK(pieces[0].boundary_count == 1);
    }
  }
  {
    // A 2-separating circle of N1,3 splits off a twice-punctured disc and
    // leaves a once-punctured Mobius band.
    const Triangulation tri = ref("N1,3");
    int seen = 0;
    for (const auto& c : enumerate_vertices(tri, 3)) {
      if (!c.is_k_separating(2)) continue;
      ++seen;
      REQUIRE(c.pieces.size() == 2);
      const CutPiece& disc = c.pieces[0].orientable ? c.pieces[0] : c.pieces[1];
      const CutPiece& band = c.pieces[0].orientable ? c.pieces[1] : c.pieces[0];
      CHECK(disc.is_punctured_disc(2));
      CHECK_FALSE(band.orientable);
      CHECK(band.genus == 1);
      CHECK(band.punctures.size() == 1);
      CHECK(band.boundary_count == 1);
    }
    CHECK(seen > 0);
  }
  {
    const Triangulation tri = ref("N1,4");
    const int chi = euler_char(tri.surface());
    for (const auto& c : enumerate_vertices(tri, 4)) {
      int sum = 0;
      int boundaries = 0;
      for (const auto& p : c.pieces) {
        sum += p.euler_char();
        boundaries += p.boundary_count;
      }
      CHECK(sum == chi);
      CHECK(boundaries == (c.one_sided() ? 1 : 2));
      CHECK(all_punctures(c.pieces) == std::vector<int>{0, 1, 2, 3});
    }
  }
  CHECK_THROWS(cut_along(ref("N1,3"), Weights(6, 0)));
}

TEST_CASE("classification") {
  for (const char* text : {"S0,3", "N1,3", "S1,2", "N3,1"}) {
    const Triangulation tri = ref(text);
    for (int p = 0; p < tri.puncture_count(); ++p) {
      const Classification cls = classify(tri, peripheral_curve(tri, p));
      CHECK(cls.verdict == Triviality::BoundsOncePuncturedDisc);
      CHECK_FALSE(cls.curve.has_value());
    }
  }
  // Thrice-punctured sphere: all connected curves are trivial.
  const Triangulation pants = ref("S0,3");
  int connected = 0;
  for_each_vector(3, 8, [&](const Weights& w) {
    if (!is_admissible(pants, w) || !is_connected_curve(pants, w)) return;
    ++connected;
    CHECK(classify(pants, w).verdict != Triviality::Nontrivial);
  });
  CHECK(connected == 3);

  const Triangulation n12 = ref("N1,2");
  for (const auto& c : enumerate_vertices(n12, 6)) {
    const auto cls = classify(n12, c.coords);
    REQUIRE(cls.curve.has_value());
    CHECK(cls.curve->kind == CurveKind::OneSided);
  }
  CHECK_THROWS_AS(classify(ref("N1,3"), scale(enumerate_vertices(ref("N1,3"), 2).front().coords, 3)), NotConnected);
}

TEST_CASE("enumeration matches a brute-force scan") {
  CHECK(enumerate_vertices(ref("S0,3"), 10).empty());
  CHECK(enumerate_vertices(ref("N1,2"), 6).size() == 2);
  CHECK(enumerate_vertices(ref("S0,4"), 4).size() < enumerate_vertices(ref("S0,4"), 8).size());
  for (auto [text, bound] : {std::pair{"N1,3", 3}, std::pair{"N3,1", 3}, std::pair{"S1,1", 4}, std::pair{"S0,4", 4},
                             std::pair{"N2,1", 4}}) {
    CAPTURE(text);
    const Triangulation tri = ref(text);
    const auto got = enumerate_vertices(tri, bound);
    std::vector<Weights> coords;
    for (const auto& c : got) coords.push_back(c.coords);
    CHECK(std::is_sorted(coords.begin(), coords.end()));
    CHECK(std::adjacent_find(coords.begin(), coords.end()) == coords.end());
    CHECK(coords == brute_vertices(tri, bound));
  }
}

TEST_CASE("disjointness") {
  const Triangulation tri = ref("N1,3");
  const auto curves = enumerate_vertices(tri, 3);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    CHECK_THROWS_AS(disjoint(tri, curves[i].coords, curves[i].coords), SameClass);
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      CHECK(disjoint(tri, curves[i].coords, curves[j].coords) == disjoint(tri, curves[j].coords, curves[i].coords));
    }
  }
  const Triangulation n12 = ref("N1,2");
  const auto two = enumerate_vertices(n12, 6);
  CHECK_FALSE(disjoint(n12, two[0].coords, two[1].coords));

  // Neighborhood circles of arcs: no common endpoint gives disjoint circles,
  // one common endpoint gives intersecting circles.
  const Triangulation n15 = ref("N1,5");
  int apart = 0;
  int touching = 0;
  for (int a = 0; a < n15.edge_count(); ++a) {
    for (int b = a + 1; b < n15.edge_count(); ++b) {
      const auto pa = n15.endpoints(a);
      const auto pb = n15.endpoints(b);
      if (pa[0] == pa[1] || pb[0] == pb[1]) continue;
      const std::set<int> ends = {pa[0], pa[1], pb[0], pb[1]};
      const Weights ca = arc_neighborhood_curves(n15, a).front();
      const Weights cb = arc_neighborhood_curves(n15, b).front();
      if (ca == cb) continue;
      if (ends.size() == 4) {
        CHECK(disjoint(n15, ca, cb));
        ++apart;
      } else if (ends.size() == 3) {
        CHECK_FALSE(disjoint(n15, ca, cb));
        ++touching;
      }
    }
  }
  CHECK(apart > 0);
  CHECK(touching > 0);
}

TEST_CASE("arc neighborhoods") {
  const Triangulation tri = ref("N1,5");
  int loops = 0;
  for (int e = 0; e < tri.edge_count(); ++e) {
    const auto ends = tri.endpoints(e);
    const auto circles = arc_neighborhood_curves(tri, e);
    if (ends[0] != ends[1]) {
      REQUIRE(circles.size() == 1);
      const auto cls = classify(tri, circles[0]);
      REQUIRE(cls.curve.has_value());
      CHECK(cls.curve->is_k_separating(2));
      const CutPiece& disc =
          cls.curve->pieces[0].is_punctured_disc(2) ? cls.curve->pieces[0] : cls.curve->pieces[1];
      std::vector<int> expected = {ends[0], ends[1]};
      std::sort(expected.begin(), expected.end());
      CHECK(disc.punctures == expected);
    } else {
      ++loops;
      // A loop at a puncture bounds a once-punctured Mobius band exactly
      // when its neighborhood has a single boundary circle.
      REQUIRE((circles.size() == 1 || circles.size() == 2));
      Weights total(tri.edge_count(), 0);
      for (const auto& c : circles) total = add(total, c);
      CHECK(total[e] == 0);
      if (circles.size() == 1) {
        const auto cut = cut_along(tri, circles[0]);
        const bool mobius_side = std::any_of(cut.begin(), cut.end(), [&](const CutPiece& p) {
          return !p.orientable && p.genus == 1 && p.punctures == std::vector<int>{ends[0]} && p.boundary_count == 1;
        });
        CHECK(mobius_side);
      }
    }
  }
  CHECK(loops > 0);
}

TEST_CASE("transport across flips") {
  std::mt19937_64 rng(7);
  for (const char* text : {"N1,3", "N1,4", "N2,2", "S0,5"}) {
    INFO(std::string(text));
    Triangulation tri = ref(text);
    int checked = 0;
    for (int sample = 0; sample < 150; ++sample) {
      // Random walk so that non-degenerate quadrilaterals also show up.
      if (sample % 10 == 0) {
        for (int step = 0; step < 3; ++step) {
          const auto edges = flippable_edges(tri);
          tri = flip(tri, edges[rng() % edges.size()]);
        }
      }
      const auto curves = enumerate_vertices(tri, 2);
      REQUIRE_FALSE(curves.empty());
      const auto edges = flippable_edges(tri);
      const CurveClass& c = curves[rng() % curves.size()];
      const int e = edges[rng() % edges.size()];
      Weights moved;
      try {
        moved = transport_flip(tri, c.coords, e);
      } catch (const Untransportable&) {
        continue;
      }
      const Triangulation other = flip(tri, e);
      CHECK(is_admissible(other, moved));
      CHECK(transport_flip(other, moved, e) == c.coords);
      const auto cls = classify(other, moved);
      REQUIRE(cls.curve.has_value());
      CHECK(cls.curve->kind == c.kind);
      CHECK(cls.curve->k_separating == c.k_separating);
      for (int f = 0; f < tri.edge_count(); ++f) {
        if (f != e) CHECK(moved[f] == c.coords[f]);
      }
      ++checked;
    }
    CHECK(checked > 10);
  }

  // Disjointness is independent of the triangulation used to test it.
  const Triangulation tri = ref("N1,4");
  const auto curves = enumerate_vertices(tri, 2);
  for (int e : flippable_edges(tri)) {
    const Triangulation other = flip(tri, e);
    for (std::size_t i = 0; i < curves.size(); i += 3) {
      for (std::size_t j = i + 1; j < curves.size(); j += 5) {
        try {
          const Weights a = transport_flip(tri, curves[i].coords, e);
          const Weights b = transport_flip(tri, curves[j].coords, e);
          CHECK(disjoint(tri, curves[i].coords, curves[j].coords) == disjoint(other, a, b));
        } catch (const Untransportable&) {
        }
      }
    }
  }

  // A weight vector supported away from the quadrilateral is unchanged.
  const Triangulation n14 = ref("N1,4");
  bool found_away = false;
  for (const auto& c : enumerate_vertices(n14, 3)) {
    for (int e : flippable_edges(n14)) {
      const FlipQuad quad = flip_quad(n14, e);
      const std::array<int, 5> around = {e, quad.side_a[0], quad.side_a[1], quad.side_b[0], quad.side_b[1]};
      if (std::any_of(around.begin(), around.end(), [&](int f) { return c.coords[f] != 0; })) continue;
      try {
        CHECK(transport_flip(n14, c.coords, e) == c.coords);
        found_away = true;
      } catch (const Untransportable&) {
      }
    }
  }
  CHECK(found_away);

  // Two triangles: every quadrilateral repeats edges.
  const Triangulation n12 = ref("N1,2");
  const auto two = enumerate_vertices(n12, 4);
  for (int e : flippable_edges(n12)) {
    try {
      transport_flip(n12, two.front().coords, e);
      FAIL("degenerate quadrilateral accepted");
    } catch (const Untransportable& err) {
      CHECK(std::string(err.what()).find("untransportable") != std::string::npos);
    }
  }
}
