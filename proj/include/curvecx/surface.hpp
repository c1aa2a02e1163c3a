#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curvecx {

// Raised when a closed-form result is requested outside the range where it
// is known to hold. The message names the violated hypothesis.
class HypothesisError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Topological type of a punctured surface. Boundary components are counted
// as punctures. For nonorientable surfaces `genus` is the number of
// crosscaps.
struct SurfaceSig {
  bool orientable = true;
  int genus = 0;
  int punctures = 0;

  // Throws std::invalid_argument on negative counts or a nonorientable
  // surface of genus 0.
  static SurfaceSig make(bool orientable, int genus, int punctures);
  static SurfaceSig orientable_surface(int genus, int punctures) { return make(true, genus, punctures); }
  static SurfaceSig nonorientable_surface(int genus, int punctures) { return make(false, genus, punctures); }

  // Accepts "N3,1", "S0,4" and the braced forms "N{3,1}", "S{0,4}".
  static SurfaceSig parse(std::string_view text);

  // Shorthand string, e.g. "N3,1".
  std::string to_string() const;

  friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;
};

struct SimplexDimRange {
  int lo = 0;
  int hi = 0;
  // Set for nonorientable genus 2, where the even-genus formula is applied
  // below the genus it is stated for.
  bool extrapolated = false;

  bool degenerate() const { return lo == hi; }
  friend bool operator==(const SimplexDimRange&, const SimplexDimRange&) = default;
};

enum class SmallComplexKind { Empty, InfiniteDiscrete, SingleVertex, TwoVertices, Generic };

std::string_view to_string(SmallComplexKind kind);

int euler_char(const SurfaceSig& sig);

// Dimension of the complex of curves, or nullopt for the exceptional small
// surfaces (see small_complex_table).
std::optional<int> complex_dimension(const SurfaceSig& sig);

// Range of dimensions realized by maximal simplices.
SimplexDimRange maximal_simplex_range(const SurfaceSig& sig);

// Number m of one-sided curves in a maximal simplex of dimension `dim`.
int onesided_count_for_dimension(const SurfaceSig& sig, int dim);

// Number of pairs of pants in a pants decomposition.
int pants_count(const SurfaceSig& sig);

SmallComplexKind small_complex_table(const SurfaceSig& sig);

struct TriangulationCounts {
  int triangles = 0;
  int edges = 0;
  friend bool operator==(const TriangulationCounts&, const TriangulationCounts&) = default;
};

TriangulationCounts ideal_triangulation_counts(const SurfaceSig& sig);

}  // namespace curvecx
