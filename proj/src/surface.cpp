#include "curvecx/surface.hpp"

#include <charconv>
#include <sstream>

namespace curvecx {

SurfaceSig SurfaceSig::make(bool orientable, int genus, int punctures) {
  if (genus < 0 || punctures < 0) {
    throw std::invalid_argument("surface: genus and puncture count must be nonnegative");
  }
  if (!orientable && genus < 1) {
    throw std::invalid_argument("surface: a nonorientable surface has genus at least 1");
  }
  return SurfaceSig{orientable, genus, punctures};
}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("surface: cannot parse '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

SurfaceSig SurfaceSig::parse(std::string_view text) {
  const std::string_view whole = text;
  if (text.size() < 4 || (text[0] != 'N' && text[0] != 'S')) {
    throw std::invalid_argument("surface: expected N<g>,<n> or S<g>,<n>, got '" + std::string(whole) + "'");
  }
  const bool orientable = text[0] == 'S';
  text.remove_prefix(1);
  if (text.front() == '{') {
    if (text.back() != '}') {
      throw std::invalid_argument("surface: unbalanced braces in '" + std::string(whole) + "'");
    }
    text = text.substr(1, text.size() - 2);
  }
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("surface: missing ',' in '" + std::string(whole) + "'");
  }
  return make(orientable, parse_int(text.substr(0, comma), whole), parse_int(text.substr(comma + 1), whole));
}

std::string SurfaceSig::to_string() const {
  std::ostringstream out;
  out << (orientable ? 'S' : 'N') << genus << ',' << punctures;
  return out.str();
}

std::string_view to_string(SmallComplexKind kind) {
  switch (kind) {
    case SmallComplexKind::Empty: return "Empty";
    case SmallComplexKind::InfiniteDiscrete: return "InfiniteDiscrete";
    case SmallComplexKind::SingleVertex: return "SingleVertex";
    case SmallComplexKind::TwoVertices: return "TwoVertices";
    case SmallComplexKind::Generic: return "Generic";
  }
  return "?";
}

int euler_char(const SurfaceSig& sig) {
  return sig.orientable ? 2 - 2 * sig.genus - sig.punctures : 2 - sig.genus - sig.punctures;
}

std::optional<int> complex_dimension(const SurfaceSig& sig) {
  const int g = sig.genus;
  const int n = sig.punctures;
  if (sig.orientable) {
    if (2 * g + n >= 4) return 3 * g + n - 4;
    return std::nullopt;
  }
  if (g == 1) {
    if (n >= 2) return n - 2;
    return std::nullopt;
  }
  if (euler_char(sig) >= 0) return std::nullopt;
  if (g % 2 == 1) return 4 * ((g - 1) / 2) + n - 2;
  return 4 * ((g - 2) / 2) + n;
}

SimplexDimRange maximal_simplex_range(const SurfaceSig& sig) {
  const int g = sig.genus;
  const int n = sig.punctures;
  if (sig.orientable) {
    if (2 * g + n < 4) {
      throw HypothesisError("maximal_simplex_range: orientable surface needs 2g+n >= 4, got " + sig.to_string());
    }
    return {3 * g + n - 4, 3 * g + n - 4, false};
  }
  if (g == 1) {
    if (n < 2) {
      throw HypothesisError("maximal_simplex_range: projective plane needs n >= 2 punctures, got " + sig.to_string());
    }
    return {n - 2, n - 2, false};
  }
  if (euler_char(sig) >= 0) {
    throw HypothesisError("maximal_simplex_range: nonorientable surface needs negative Euler characteristic, got " +
                          sig.to_string());
  }
  if (g % 2 == 1) {
    const int r = (g - 1) / 2;
    return {3 * r + n - 2, 4 * r + n - 2, false};
  }
  const int r = g / 2;
  return {3 * r + n - 4, 4 * r + n - 4, g == 2};
}

int onesided_count_for_dimension(const SurfaceSig& sig, int dim) {
  if (sig.orientable) {
    throw HypothesisError("onesided_count_for_dimension: surface " + sig.to_string() + " is orientable");
  }
  const SimplexDimRange range = maximal_simplex_range(sig);
  if (dim < range.lo || dim > range.hi) {
    std::ostringstream msg;
    msg << "onesided_count_for_dimension: dimension " << dim << " outside [" << range.lo << ", " << range.hi
        << "] for " << sig.to_string();
    throw HypothesisError(msg.str());
  }
  if (sig.genus == 1) return 1;
  if (sig.genus % 2 == 1) return 2 * (dim - range.lo) + 1;
  return 2 * (dim - range.lo);
}

int pants_count(const SurfaceSig& sig) {
  if (euler_char(sig) >= 0) {
    throw HypothesisError("pants_count: needs negative Euler characteristic, got " + sig.to_string());
  }
  return sig.orientable ? 2 * sig.genus + sig.punctures - 2 : sig.genus + sig.punctures - 2;
}

SmallComplexKind small_complex_table(const SurfaceSig& sig) {
  const int g = sig.genus;
  const int n = sig.punctures;
  if (sig.orientable) {
    if (g == 0 && n <= 3) return SmallComplexKind::Empty;
    if (g == 0 && n == 4) return SmallComplexKind::InfiniteDiscrete;
    if (g == 1 && n <= 1) return SmallComplexKind::InfiniteDiscrete;
    return SmallComplexKind::Generic;
  }
  if (g == 1 && n <= 1) return SmallComplexKind::SingleVertex;
  if (g == 1 && n == 2) return SmallComplexKind::TwoVertices;
  return SmallComplexKind::Generic;
}

TriangulationCounts ideal_triangulation_counts(const SurfaceSig& sig) {
  const int chi = euler_char(sig);
  if (sig.punctures < 1 || chi >= 0) {
    throw HypothesisError("no ideal triangulation: needs at least one puncture and negative Euler characteristic, got " +
                          sig.to_string());
  }
  return {-2 * chi, -3 * chi};
}

}  // namespace curvecx
