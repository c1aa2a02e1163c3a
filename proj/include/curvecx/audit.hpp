#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curvecx/io.hpp"

namespace curvecx {

inline constexpr const char* kVersion = "0.1.0";

// mt19937_64 with a fixed multiply-shift reduction for bounded draws, so
// seeded samples agree across standard library implementations.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(below(items.size()))];
  }

private:
  std::mt19937_64 engine_;
};

enum class Provenance { Paper, Trivial, Derived };
std::string_view to_string(Provenance p);

struct CheckRecord {
  std::string name;
  std::string expected;
  Provenance provenance = Provenance::Derived;
  Json observed;
  bool pass = false;
};

struct AuditConfig {
  std::string suite;
  std::optional<SurfaceSig> surface;
  std::optional<int> bound;
  std::uint64_t seed = 7;
  int walks = 100;
  int len = 8;
  int samples = 1000;
  std::optional<int> max_depth;
  int radius = 2;
};

struct AuditReport {
  Json config;
  std::vector<CheckRecord> checks;

  int passed() const;
  bool ok() const { return passed() == static_cast<int>(checks.size()); }
  Json to_json() const;
};

const std::vector<std::string>& suite_names();

// Runs one named suite. Throws std::invalid_argument for an unknown suite.
AuditReport run_suite(const AuditConfig& config);

// Individual experiments, also used by the acceptance binary.
std::vector<CheckRecord> audit_small_surfaces();
std::vector<CheckRecord> audit_dims(const SurfaceSig& sig, int bound);
std::vector<CheckRecord> audit_eq1(const SurfaceSig& sig, int bound);
std::vector<CheckRecord> audit_duallink_connectivity(const SurfaceSig& sig, int bound);
std::vector<CheckRecord> audit_side_partitions(const SurfaceSig& sig, int bound);
std::vector<CheckRecord> audit_simple_pair(const SurfaceSig& sig, int start_bound, int max_bound);
std::vector<CheckRecord> audit_sphere_pentagon(const SurfaceSig& sig, int bound);
std::vector<CheckRecord> audit_flips(const SurfaceSig& sig, int walks, int len, int max_depth, int radius,
                                     std::uint64_t seed);
std::vector<CheckRecord> audit_transport(const SurfaceSig& sig, int bound, int samples, std::uint64_t seed);

// First pair of distinct non-loop reference edges sharing exactly one
// endpoint (with_common) or sharing none (!with_common).
std::optional<std::array<int, 2>> reference_arc_pair(const Triangulation& tri, bool with_common);

// Exhaustive search for gamma_1..gamma_{n-2} satisfying the sphere
// characterization for alpha, beta.
std::optional<std::vector<int>> find_sphere_witness(const ComplexSnapshot& snapshot, int alpha, int beta);

}  // namespace curvecx
