#pragma once

#include <vector>

#include "oracle.hpp"
#include "stablecore/independence.hpp"
#include "stablecore/tree.hpp"

namespace fixtures {

using stablecore::Edge;
using stablecore::Tree;
using stablecore::VertexId;
using stablecore::VertexSet;

// Figure-1 graph: bottom path 0-1-2-3-4, top vertices 5 and 6.
inline const std::vector<Edge>& Fig1Edges() {
  static const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                   {0, 5}, {1, 5}, {2, 6}, {5, 6}};
  return e;
}

inline stablecore::SmallGraph Fig1() {
  return stablecore::SmallGraph(7, Fig1Edges());
}

// Figure-5 tree: u=0, x=1, c=2, v=3, y=4, d=5, e=6, f=7, g=8.
inline Tree Fig5() {
  return Tree::FromEdges(9, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}, {4, 5},
                                              {5, 6}, {6, 7}, {7, 8}, {2, 6}});
}

inline oracle::EdgeList ToEdgeList(const Tree& t) {
  oracle::EdgeList out;
  for (auto [u, v] : t.edges()) out.emplace_back(u, v);
  return out;
}

inline oracle::EdgeList ToEdgeList(const std::vector<Edge>& edges) {
  oracle::EdgeList out;
  for (auto [u, v] : edges) out.emplace_back(u, v);
  return out;
}

inline oracle::Set ToSet(const VertexSet& s) {
  const auto m = s.members();
  return oracle::Set(m.begin(), m.end());
}

inline VertexSet Make(std::size_t universe, std::vector<VertexId> members) {
  return VertexSet::FromMembers(universe, members);
}

}  // namespace fixtures
