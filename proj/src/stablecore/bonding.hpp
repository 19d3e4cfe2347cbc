#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stablecore/tree.hpp"

namespace stablecore {

// T1 * v * T2: the tree obtained by identifying v1 ∈ T1 with v2 ∈ T2.
//
// Labels: T1 keeps 0..n1-1 (so the bond vertex is v1), the vertices of T2
// other than v2 follow as n1, n1+1, ... in increasing order.
struct BondResult {
  Tree tree;
  VertexId bond_vertex;
  std::vector<VertexId> left_map;   // T1 label -> bonded label
  std::vector<VertexId> right_map;  // T2 label -> bonded label
};

BondResult VertexBond(const Tree& t1, VertexId v1, const Tree& t2, VertexId v2);

// Image of a factor-side set under one of the bond maps.
VertexSet MapSet(const VertexSet& s, const std::vector<VertexId>& map,
                 std::size_t universe);

// Spider with center 0, legs 0 - i - (i+k) for i = 1..k; 2k+1 vertices.
// Throws kTooSmall for k = 0.
Tree Spider(std::size_t k);

// Checks the vertex-bonding laws for one bond:
//   v ∈ core(T) iff v ∈ core(T1) and v ∈ core(T2);
//   if v ∈ core(T): α(T) = α(T1) + α(T2) - 1 and
//                   core(T) = image(core(T1)) ∪ image(core(T2)).
// Returns a description of the first violated law, or nullopt.
std::optional<std::string> CheckBondLaws(const Tree& t1, VertexId v1,
                                         const Tree& t2, VertexId v2);

// Same, for a bond whose factor data is already known.
struct BondFactor {
  const Tree* tree;
  std::size_t alpha;
  const VertexSet* core;
};
std::optional<std::string> CheckBondLaws(const BondFactor& left, VertexId v1,
                                         const BondFactor& right, VertexId v2);

}  // namespace stablecore
