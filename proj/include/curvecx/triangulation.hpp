#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvecx/surface.hpp"

namespace curvecx {

// Side i of triangle k occupies slot 3k+i and runs from corner i to corner
// i+1 (mod 3). Corner i of triangle k is addressed by the same index 3k+i.
inline constexpr int slot_of(int triangle, int side) { return 3 * triangle + side; }
inline constexpr int triangle_of(int slot) { return slot / 3; }
inline constexpr int side_of(int slot) { return slot % 3; }

// Whether an identification of two sides sends start to start (Parallel) or
// start to end (Antiparallel).
enum class Gluing : std::uint8_t { Parallel, Antiparallel };

std::string_view to_string(Gluing flag);
Gluing parse_gluing(std::string_view text);
inline Gluing toggled(Gluing flag) { return flag == Gluing::Parallel ? Gluing::Antiparallel : Gluing::Parallel; }

struct GluedPair {
  int slot_a = 0;
  int slot_b = 0;
  Gluing flag = Gluing::Antiparallel;
  friend bool operator==(const GluedPair&, const GluedPair&) = default;
};

// Unchecked gluing description. The order of `pairs` fixes the edge indices.
struct GluingData {
  int triangles = 0;
  std::vector<GluedPair> pairs;
  friend bool operator==(const GluingData&, const GluingData&) = default;
};

class InvalidTriangulation : public std::runtime_error {
public:
  explicit InvalidTriangulation(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

private:
  std::vector<std::string> violations_;
};

struct ValidationReport {
  bool connected = false;
  int euler_char = 0;  // of the punctured surface
  bool orientable = false;
  int genus = 0;
  int punctures = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  SurfaceSig surface() const { return SurfaceSig{orientable, genus, punctures}; }
};

// Structural problems (slots out of range, fixed points, unmatched or doubly
// matched slots) throw InvalidTriangulation listing all of them. Semantic
// problems (disconnected gluing graph) are reported in `violations`.
ValidationReport validate(const GluingData& data);

struct Edge {
  int slot_a = 0;
  int slot_b = 0;
  Gluing flag = Gluing::Antiparallel;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Combinatorial ideal triangulation. Immutable once built; every instance
// is valid and connected.
class Triangulation {
public:
  static Triangulation from_gluing(const GluingData& data);

  int triangle_count() const { return triangles_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int puncture_count() const { return punctures_; }
  const SurfaceSig& surface() const { return sig_; }

  int partner(int slot) const { return partner_[slot]; }
  int edge_of(int slot) const { return edge_of_[slot]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  Gluing gluing_of_slot(int slot) const { return edges_[edge_of_[slot]].flag; }

  // Puncture label at a corner. Labels persist across flips.
  int corner_puncture(int corner) const { return corner_label_[corner]; }
  const std::vector<int>& corner_labels() const { return corner_label_; }

  // Puncture labels at the start and end of the edge, read along slot_a.
  std::array<int, 2> endpoints(int e) const;

  // Both slots of the edge lie in the same triangle.
  bool is_self_folded(int e) const { return triangle_of(edges_[e].slot_a) == triangle_of(edges_[e].slot_b); }

  ValidationReport report() const;
  GluingData gluing() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

private:
  friend class TriangulationAccess;
  Triangulation() = default;
  static Triangulation assemble(int triangles, std::vector<Edge> edges, const std::vector<int>* labels);

  int triangles_ = 0;
  std::vector<int> partner_;
  std::vector<int> edge_of_;
  std::vector<Edge> edges_;
  std::vector<int> corner_label_;
  int punctures_ = 0;
  SurfaceSig sig_;
};

class UnflippableEdge : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Deterministic reference triangulation: a crosscap or handle polygon coned
// to an interior puncture (or fanned when n = 1), then further punctures
// inserted by subdividing the newest triangle.
Triangulation build_reference(const SurfaceSig& sig);

// Replaces the diagonal of the quadrilateral around `e` by the other
// diagonal. Edge indices and puncture labels of all other edges are kept;
// the new diagonal reuses index `e`.
Triangulation flip(const Triangulation& tri, int e);

// Edge indices of the quadrilateral around a flippable edge. The pairs
// (side_a[0], side_b[0]) and (side_a[1], side_b[1]) are opposite sides.
struct FlipQuad {
  std::array<int, 2> side_a{};
  std::array<int, 2> side_b{};
};
FlipQuad flip_quad(const Triangulation& tri, int e);

std::vector<int> flippable_edges(const Triangulation& tri);

// Number of edge indices whose endpoints agree between two triangulations
// with the same triangle and edge counts.
int shared_edge_count(const Triangulation& lhs, const Triangulation& rhs);

// Relabeling-invariant encoding.
struct CanonicalForm {
  std::string bytes;

  std::string hex() const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Triangulation& tri);

// Applies a triangle permutation and per-triangle dihedral relabeling.
// `perm[k]` is the new index of triangle k, `rotation[k]` in 0..2 and
// `reflect[k]` describe how corners of triangle k are renamed. Edge order is
// preserved. Used for tests and by the relabeling-invariance checks.
Triangulation relabel(const Triangulation& tri, const std::vector<int>& perm, const std::vector<int>& rotation,
                      const std::vector<bool>& reflect);

struct FlipGraph {
  std::vector<CanonicalForm> nodes;           // sorted by (distance, form)
  std::vector<int> distance;                  // flips from the root
  std::vector<std::array<int, 2>> edges;      // node index pairs, i < j, sorted
};

// All combinatorial classes within `radius` flips of `tri`.
FlipGraph flip_bfs(const Triangulation& tri, int radius);

// Bidirectional search for a flip sequence carrying tri1 to the class of
// tri2. The returned edge indices are valid when replayed on tri1.
std::optional<std::vector<int>> flip_path(const Triangulation& tri1, const Triangulation& tri2, int max_depth);

// Applies a sequence of flips.
Triangulation apply_flips(const Triangulation& tri, const std::vector<int>& sequence);

}  // namespace curvecx
