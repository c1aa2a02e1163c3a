#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvecx/surface.hpp"

using namespace curvecx;

namespace {

SurfaceSig N(int g, int n) { return SurfaceSig::nonorientable_surface(g, n); }
SurfaceSig S(int g, int n) { return SurfaceSig::orientable_surface(g, n); }

// Closed-surface Euler characteristic minus punctures, from the connected
// sum decomposition rather than the library formula.
int euler_by_summands(const SurfaceSig& sig) {
  int chi = 2;
  for (int i = 0; i < sig.genus; ++i) chi += sig.orientable ? -2 : -1;
  return chi - sig.punctures;
}

}  // namespace

TEST_CASE("signature parsing") {
  CHECK(SurfaceSig::parse("N3,1") == N(3, 1));
  CHECK(SurfaceSig::parse("N{3,1}") == N(3, 1));
  CHECK(SurfaceSig::parse("S{0,5}") == S(0, 5));
  CHECK(SurfaceSig::parse("S12,0") == S(12, 0));
  CHECK(N(3, 1).to_string() == "N3,1");
  for (const char* bad : {"", "N", "X1,2", "N1", "N{1,2", "N1,x", "N0,3", "S-1,2", "N1,2,3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(SurfaceSig::parse(bad), std::invalid_argument);
  }
  CHECK_THROWS_AS(SurfaceSig::make(false, 0, 2), std::invalid_argument);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_char(S(0, 3)) == -1);
  CHECK(euler_char(N(1, 2)) == -1);
  CHECK(euler_char(N(3, 1)) == -2);
  for (int g = 0; g <= 5; ++g) {
    for (int n = 0; n <= 6; ++n) {
      CHECK(euler_char(S(g, n)) == euler_by_summands(S(g, n)));
      if (g > 0) CHECK(euler_char(N(g, n)) == euler_by_summands(N(g, n)));
    }
  }
}

TEST_CASE("complex dimension") {
  CHECK(complex_dimension(N(1, 6)) == 4);
  CHECK(complex_dimension(S(0, 6)) == 2);
  CHECK(complex_dimension(N(5, 2)) == 8);
  CHECK(complex_dimension(S(2, 1)) == 3);
  CHECK_FALSE(complex_dimension(S(0, 3)).has_value());
  CHECK_FALSE(complex_dimension(N(1, 1)).has_value());
  CHECK_FALSE(complex_dimension(S(1, 1)).has_value());
}

TEST_CASE("maximal simplex range") {
  CHECK(maximal_simplex_range(N(3, 1)) == SimplexDimRange{2, 3, false});
  CHECK(maximal_simplex_range(S(1, 2)) == SimplexDimRange{1, 1, false});
  CHECK(maximal_simplex_range(N(1, 5)) == SimplexDimRange{3, 3, false});
  const auto klein = maximal_simplex_range(N(2, 1));
  CHECK(klein.extrapolated);
  CHECK(klein.lo == 0);
  CHECK(klein.hi == 1);
  CHECK_FALSE(maximal_simplex_range(N(4, 1)).extrapolated);
  CHECK_THROWS_AS(maximal_simplex_range(S(1, 1)), HypothesisError);
  CHECK_THROWS_AS(maximal_simplex_range(N(1, 1)), HypothesisError);
  CHECK_THROWS_AS(maximal_simplex_range(N(2, 0)), HypothesisError);
}

TEST_CASE("one-sided count per dimension") {
  CHECK(onesided_count_for_dimension(N(3, 1), 2) == 1);
  CHECK(onesided_count_for_dimension(N(3, 1), 3) == 3);
  CHECK(onesided_count_for_dimension(N(1, 5), 3) == 1);
  CHECK_THROWS_AS(onesided_count_for_dimension(N(3, 1), 4), HypothesisError);
  CHECK_THROWS_AS(onesided_count_for_dimension(S(2, 1), 3), HypothesisError);
}

TEST_CASE("pants count") {
  CHECK(pants_count(N(3, 1)) == 2);
  CHECK(pants_count(N(1, 4)) == 3);
  CHECK(pants_count(S(1, 1)) == 1);
  CHECK_THROWS_AS(pants_count(N(1, 1)), HypothesisError);
  // Independent count: a pants decomposition has -chi pairs of pants.
  for (int g = 1; g <= 6; ++g) {
    for (int n = 0; n <= 5; ++n) {
      if (euler_char(N(g, n)) < 0) CHECK(pants_count(N(g, n)) == -euler_by_summands(N(g, n)));
    }
  }
}

TEST_CASE("small complexes") {
  CHECK(small_complex_table(S(0, 3)) == SmallComplexKind::Empty);
  CHECK(small_complex_table(S(0, 4)) == SmallComplexKind::InfiniteDiscrete);
  CHECK(small_complex_table(S(1, 1)) == SmallComplexKind::InfiniteDiscrete);
  CHECK(small_complex_table(N(1, 2)) == SmallComplexKind::TwoVertices);
  CHECK(small_complex_table(N(1, 1)) == SmallComplexKind::SingleVertex);
  CHECK(small_complex_table(N(1, 0)) == SmallComplexKind::SingleVertex);
  CHECK(small_complex_table(N(1, 3)) == SmallComplexKind::Generic);
  CHECK(to_string(SmallComplexKind::TwoVertices) == "TwoVertices");
}

TEST_CASE("ideal triangulation counts") {
  CHECK(ideal_triangulation_counts(N(1, 2)) == TriangulationCounts{2, 3});
  CHECK(ideal_triangulation_counts(N(3, 1)) == TriangulationCounts{4, 6});
  CHECK_THROWS_AS(ideal_triangulation_counts(N(1, 1)), HypothesisError);
  CHECK_THROWS_AS(ideal_triangulation_counts(S(2, 0)), HypothesisError);
}

TEST_CASE("cross-formula invariants") {
  for (int g = 0; g <= 7; ++g) {
    for (int n = 0; n <= 7; ++n) {
      for (bool orientable : {true, false}) {
        if (!orientable && g == 0) continue;
        const SurfaceSig sig = SurfaceSig::make(orientable, g, n);
        CAPTURE(sig.to_string());
        const auto dim = complex_dimension(sig);
        SimplexDimRange range;
        bool has_range = true;
        try {
          range = maximal_simplex_range(sig);
        } catch (const HypothesisError&) {
          has_range = false;
        }
        if (dim && has_range) CHECK(*dim == range.hi);
        if (has_range) {
          CHECK(range.lo <= range.hi);
          CHECK(range.degenerate() == (orientable || g == 1));
        }
        if (has_range && !orientable && g % 2 == 1) {
          const int k = pants_count(sig);
          for (int l = range.lo; l <= range.hi; ++l) {
            const int m = onesided_count_for_dimension(sig, l);
            CHECK(3 * k == n + m + 2 * (l + 1 - m));
            CHECK(m % 2 == 1);
          }
        }
        if (n >= 1) {
          bool counts = true;
          try {
            ideal_triangulation_counts(sig);
          } catch (const HypothesisError&) {
            counts = false;
          }
          CHECK(counts == (euler_char(sig) < 0));
        }
      }
    }
  }
}
