#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvecx/normal_curves.hpp"

namespace curvecx {

// Vertices of the complex of curves with all coordinates <= bound on a
// fixed triangulation, joined when disjoint.
class ComplexSnapshot {
public:
  ComplexSnapshot(SurfaceSig surface, Triangulation triangulation, int bound, std::vector<CurveClass> vertices);

  const SurfaceSig& surface() const { return surface_; }
  const Triangulation& triangulation() const { return triangulation_; }
  int bound() const { return bound_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<CurveClass>& vertices() const { return vertices_; }
  const CurveClass& vertex(int v) const { return vertices_.at(v); }

  bool adjacent(int a, int b) const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::array<int, 2>> edge_list() const;
  std::size_t edge_count() const;
  std::optional<int> find(const Weights& coords) const;

  // Bitset row of the adjacency relation.
  const std::vector<std::uint64_t>& row(int v) const { return rows_.at(v); }

private:
  SurfaceSig surface_;
  Triangulation triangulation_;
  int bound_;
  std::vector<CurveClass> vertices_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

ComplexSnapshot build_snapshot(const SurfaceSig& sig, int bound);
ComplexSnapshot build_snapshot(const Triangulation& tri, int bound);

struct DualLinkView {
  int center = 0;
  std::vector<int> vertices;                // link vertices, ascending
  std::vector<std::array<int, 2>> edges;    // vertex ids, sorted
  std::vector<std::vector<int>> components;  // of (vertices, edges)

  bool connected() const { return components.size() <= 1; }
};

// Link: edges are disjoint pairs. Dual link: edges are intersecting pairs.
DualLinkView link(const ComplexSnapshot& snapshot, int v);
DualLinkView dual_link(const ComplexSnapshot& snapshot, int v);

struct SidePartition {
  int center = 0;
  std::vector<CutPiece> pieces;
  std::vector<int> link_vertices;  // ascending
  std::vector<int> side;           // piece index per link vertex
  int crossing_dual_edges = 0;     // intersecting pairs on different sides

  std::vector<int> members(int piece) const;
};

// Assigns each link vertex of a separating vertex to the complementary
// piece containing it.
SidePartition side_partition(const ComplexSnapshot& snapshot, int v);

struct CliqueAudit {
  std::vector<int> clique;
  int dimension = 0;
  int one_sided = 0;
  std::optional<bool> eq1_ok;  // absent when no pants count exists
  bool certified = false;
};

// All maximal cliques of the adjacency graph with dimension, one-sided
// count, the pants-count identity and whether the clique is certified
// maximal in the full complex.
std::vector<CliqueAudit> maximal_simplices(const ComplexSnapshot& snapshot);

bool is_clique(const ComplexSnapshot& snapshot, const std::vector<int>& vertices);

// Consecutive entries (cyclically) disjoint, all other pairs intersecting.
bool is_pentagon(const ComplexSnapshot& snapshot, const std::array<int, 5>& ids);

// Equality up to cyclic permutation and inversion.
bool same_pentagon(const std::array<int, 5>& lhs, const std::array<int, 5>& rhs);

struct SimplePairWitness {
  std::vector<int> gammas;  // gamma_1 .. gamma_{n-1}
  int delta = -1;
};

// Searches for gamma_1..gamma_{n-1} and a one-sided delta certifying that
// two 2-separating vertices of N{1,n} (n >= 5) form a simple pair.
std::optional<SimplePairWitness> find_simple_pair_witness(const ComplexSnapshot& snapshot, int alpha, int beta);

// Failed conditions for a claimed witness; empty when it is valid.
std::vector<std::string> check_simple_pair_witness(const ComplexSnapshot& snapshot, int alpha, int beta,
                                                   const SimplePairWitness& witness);

// Sphere version with gamma_1..gamma_{n-2} on S{0,n}, n >= 5.
bool sphere_pentagon_check(const ComplexSnapshot& snapshot, int alpha, int beta, const std::vector<int>& gammas);

// Consecutive arcs share exactly one endpoint and the endpoint sequence
// visits pairwise distinct punctures.
bool is_chain(const Triangulation& tri, const std::vector<int>& edges);

// Triangles with three distinct corner punctures and three distinct edges.
std::vector<int> good_triangles(const Triangulation& tri);

}  // namespace curvecx
