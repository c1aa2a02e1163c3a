#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "curvecx/triangulation.hpp"

namespace curvecx {

namespace {

void check_codimension_one(const Triangulation& before, const Triangulation& after) {
  if (shared_edge_count(before, after) < before.edge_count() - 1) {
    throw std::logic_error("flip changed more than one edge");
  }
}

}  // namespace

FlipGraph flip_bfs(const Triangulation& tri, int radius) {
  if (radius < 0) throw std::invalid_argument("flip_bfs: radius must be nonnegative");
  struct Node {
    Triangulation rep;
    CanonicalForm form;
    int distance;
  };
  std::vector<Node> nodes;
  std::map<CanonicalForm, int> index;
  std::vector<std::array<int, 2>> edges;

  nodes.push_back({tri, canonical_form(tri), 0});
  index.emplace(nodes.front().form, 0);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Triangulation rep = nodes[head].rep;
    const int dist = nodes[head].distance;
    for (int e : flippable_edges(rep)) {
      Triangulation next = flip(rep, e);
      check_codimension_one(rep, next);
      CanonicalForm form = canonical_form(next);
      auto it = index.find(form);
      int target;
      if (it != index.end()) {
        target = it->second;
      } else {
        // Nodes on the boundary sphere only contribute edges among known nodes.
        if (dist >= radius) continue;
        target = static_cast<int>(nodes.size());
        index.emplace(form, target);
        nodes.push_back({std::move(next), std::move(form), dist + 1});
      }
      const int i = static_cast<int>(head);
      if (i != target) edges.push_back({std::min(i, target), std::max(i, target)});
    }
  }

  std::vector<int> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (nodes[a].distance != nodes[b].distance) return nodes[a].distance < nodes[b].distance;
    return nodes[a].form < nodes[b].form;
  });
  std::vector<int> position(nodes.size());
  FlipGraph graph;
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = static_cast<int>(i);
    graph.nodes.push_back(nodes[order[i]].form);
    graph.distance.push_back(nodes[order[i]].distance);
  }
  for (auto& [a, b] : edges) {
    const int pa = position[a];
    const int pb = position[b];
    graph.edges.push_back({std::min(pa, pb), std::max(pa, pb)});
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
  return graph;
}

namespace {

struct SearchSide {
  std::map<CanonicalForm, CanonicalForm> parent;  // root maps to itself
  std::vector<std::pair<Triangulation, CanonicalForm>> frontier;
  int depth = 0;
};

// Expands one BFS level; returns a class also seen by the other side.
std::optional<CanonicalForm> expand(SearchSide& side, const SearchSide& other) {
  std::vector<std::pair<Triangulation, CanonicalForm>> next;
  std::optional<CanonicalForm> meet;
  for (const auto& [rep, form] : side.frontier) {
    for (int e : flippable_edges(rep)) {
      Triangulation child = flip(rep, e);
      CanonicalForm child_form = canonical_form(child);
      if (side.parent.count(child_form) != 0) continue;
      side.parent.emplace(child_form, form);
      if (!meet && other.parent.count(child_form) != 0) meet = child_form;
      next.emplace_back(std::move(child), std::move(child_form));
    }
  }
  side.frontier = std::move(next);
  ++side.depth;
  return meet;
}

std::vector<CanonicalForm> chain_to_root(const SearchSide& side, const CanonicalForm& from) {
  std::vector<CanonicalForm> chain{from};
  while (true) {
    const CanonicalForm& up = side.parent.at(chain.back());
    if (up == chain.back()) break;
    chain.push_back(up);
  }
  return chain;
}

}  // namespace

std::optional<std::vector<int>> flip_path(const Triangulation& tri1, const Triangulation& tri2, int max_depth) {
  if (!(tri1.surface() == tri2.surface())) {
    throw std::invalid_argument("flip_path: triangulations of different surfaces");
  }
  const CanonicalForm start = canonical_form(tri1);
  const CanonicalForm goal = canonical_form(tri2);
  if (start == goal) return std::vector<int>{};

  SearchSide forward, backward;
  forward.parent.emplace(start, start);
  forward.frontier.emplace_back(tri1, start);
  backward.parent.emplace(goal, goal);
  backward.frontier.emplace_back(tri2, goal);

  std::optional<CanonicalForm> meet;
  while (!meet && forward.depth + backward.depth < max_depth) {
    SearchSide& grow = forward.frontier.size() <= backward.frontier.size() ? forward : backward;
    SearchSide& other = &grow == &forward ? backward : forward;
    if (grow.frontier.empty()) break;
    meet = expand(grow, other);
  }
  if (!meet) return std::nullopt;

  // Class sequence start .. meet .. goal.
  std::vector<CanonicalForm> classes = chain_to_root(forward, *meet);
  std::reverse(classes.begin(), classes.end());
  const std::vector<CanonicalForm> tail = chain_to_root(backward, *meet);
  classes.insert(classes.end(), tail.begin() + 1, tail.end());

  // Replay on tri1, choosing at each step an edge whose flip lands in the
  // next class.
  std::vector<int> sequence;
  Triangulation current = tri1;
  for (std::size_t i = 1; i < classes.size(); ++i) {
    bool advanced = false;
    for (int e : flippable_edges(current)) {
      Triangulation next = flip(current, e);
      if (canonical_form(next) == classes[i]) {
        sequence.push_back(e);
        current = std::move(next);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("flip_path: class sequence cannot be replayed");
  }
  return sequence;
}

}  // namespace curvecx
