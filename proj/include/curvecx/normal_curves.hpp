#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "curvecx/triangulation.hpp"

namespace curvecx {

// Normal coordinates: number of intersections of a multicurve with each edge
// of a fixed triangulation, indexed by edge.
using Weights = std::vector<int>;

class NotConnected : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class SameClass : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Untransportable : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Per-triangle parity and triangle inequalities. Throws std::invalid_argument
// on a length mismatch or a negative entry.
bool is_admissible(const Triangulation& tri, const Weights& w);

Weights add(const Weights& lhs, const Weights& rhs);
Weights scale(const Weights& w, int factor);

struct TracedComponent {
  Weights weights;
  bool one_sided = false;
};

// Components of the normal multicurve with coordinates `w`, sorted by weight
// vector. Requires an admissible vector.
std::vector<TracedComponent> trace_components(const Triangulation& tri, const Weights& w);
std::vector<Weights> trace(const Triangulation& tri, const Weights& w);

// True when `w` is nonzero and traces to a single component.
bool is_connected_curve(const Triangulation& tri, const Weights& w);

// One complementary piece after cutting along a curve. Boundary circles
// created by the cut are counted in `boundary_count`; original punctures are
// listed by label.
struct CutPiece {
  bool orientable = true;
  int genus = 0;
  std::vector<int> punctures;
  int boundary_count = 0;

  int euler_char() const;
  // The piece with its cut boundary turned into punctures.
  SurfaceSig as_surface() const;
  // Orientable genus 0 with one boundary circle and `k` punctures.
  bool is_punctured_disc(int k) const;
  friend bool operator==(const CutPiece&, const CutPiece&) = default;
};

std::vector<CutPiece> cut_along(const Triangulation& tri, const Weights& w);

// For each curve in `others`, the index (into cut_along(tri, curve)) of the
// piece containing it, or -1 when it is not disjoint from `curve`.
std::vector<int> locate_in_pieces(const Triangulation& tri, const Weights& curve, const std::vector<Weights>& others);

enum class CurveKind { OneSided, TwoSidedNonseparating, Separating };
enum class Triviality { Nontrivial, BoundsDisc, BoundsOncePuncturedDisc, BoundsMobiusBand };

std::string_view to_string(CurveKind kind);
std::string_view to_string(Triviality verdict);

struct CurveClass {
  Weights coords;
  CurveKind kind = CurveKind::OneSided;
  std::vector<CutPiece> pieces;
  // Smallest k such that a piece is a disc with k punctures.
  std::optional<int> k_separating;

  bool one_sided() const { return kind == CurveKind::OneSided; }
  bool separating() const { return kind == CurveKind::Separating; }
  // Some piece is a disc with exactly k punctures.
  bool is_k_separating(int k) const;
};

struct Classification {
  Triviality verdict = Triviality::Nontrivial;
  std::vector<CutPiece> pieces;
  std::optional<CurveClass> curve;
};

Classification classify(const Triangulation& tri, const Weights& w);

// Zero geometric intersection for two distinct nontrivial curves.
bool disjoint(const Triangulation& tri, const Weights& a, const Weights& b);

// Coordinates of the same multicurve on flip(tri, e).
Weights transport_flip(const Triangulation& tri, const Weights& w, int e);

// Every nontrivial connected curve with all coordinates <= bound, sorted by
// coordinate vector.
std::vector<CurveClass> enumerate_vertices(const Triangulation& tri, int bound);

// Boundary of a regular neighborhood of an edge together with its endpoint
// punctures: one circle for distinct endpoints, one or two for a loop.
std::vector<Weights> arc_neighborhood_curves(const Triangulation& tri, int e);

// Small circle around a puncture.
Weights peripheral_curve(const Triangulation& tri, int puncture);

}  // namespace curvecx
