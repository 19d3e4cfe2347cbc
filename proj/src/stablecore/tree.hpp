#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stablecore/vertex_set.hpp"

namespace stablecore {

using Edge = std::pair<VertexId, VertexId>;

// A validated tree on vertices 0..n-1 with n >= 2. Immutable once built.
//
// Adjacency is stored in compressed form; every neighbor list is sorted.
// The edge list is normalized (first < second) and sorted.
class Tree {
 public:
  // Validates and builds. Throws Error with kTooSmall, kOutOfRange or
  // kNotATree.
  static Tree FromEdges(std::size_t n, std::span<const Edge> edges);
  static Tree FromEdges(std::size_t n, const std::vector<Edge>& edges) {
    return FromEdges(n, std::span<const Edge>(edges));
  }

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.edges_ == b.edges_ && a.order() == b.order();
  }

 private:
  Tree() = default;

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<Edge> edges_;
};

// Common tree shapes used throughout the tests and the CLI.
Tree Path(std::size_t n);
// Star K(1, leaves) centered at vertex 0.
Tree Star(std::size_t leaves);

// One connected piece of an induced subforest. `vertices` are labels of the
// original tree in increasing order; `tree` uses local labels (index into
// `vertices`) and is present only when the component has two or more
// vertices.
struct ForestComponent {
  std::vector<VertexId> vertices;
  std::vector<Tree> tree;  // empty for a singleton, else exactly one entry

  bool is_singleton() const noexcept { return vertices.size() == 1; }
  const Tree& as_tree() const { return tree.front(); }
};

struct Forest {
  std::size_t original_order = 0;
  std::vector<ForestComponent> components;  // ordered by smallest vertex
};

struct Bipartition {
  VertexSet a;  // the side containing vertex 0
  VertexSet b;

  const VertexSet& side_of(VertexId v) const {
    return a.contains(v) ? a : b;
  }
};

VertexSet PendantVertices(const Tree& t);

// Breadth-first 2-coloring from vertex 0.
Bipartition Bipartite(const Tree& t);

// Number of edges on the unique u-v path.
std::size_t Distance(const Tree& t, VertexId u, VertexId v);
// Distances from `source` to every vertex.
std::vector<std::size_t> DistancesFrom(const Tree& t, VertexId source);

bool IsStable(const Tree& t, const VertexSet& s);

// Components of t - w. Throws kEmptyResult when w covers every vertex.
Forest DeleteVertices(const Tree& t, const VertexSet& w);

// Canonical edge-list text: "n\n" followed by one "u v\n" per sorted edge.
std::string SerializeEdgeList(const Tree& t);

// Parses the edge-list format: '#' lines are comments, the first data line
// is n, then exactly n-1 lines "u v". Throws ParseError (with line number)
// or Error(kNotATree / kOutOfRange / kTooSmall).
Tree ParseEdgeList(std::string_view text);

}  // namespace stablecore
