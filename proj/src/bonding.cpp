#include "stablecore/bonding.hpp"

#include "stablecore/error.hpp"
#include "stablecore/independence.hpp"

namespace stablecore {

BondResult VertexBond(const Tree& t1, VertexId v1, const Tree& t2,
                      VertexId v2) {
  const std::size_t n1 = t1.order();
  const std::size_t n2 = t2.order();
  if (v1 >= n1 || v2 >= n2) {
    throw Error(ErrorCode::kOutOfRange, "bond vertex outside its tree");
  }
  std::vector<VertexId> left(n1);
  for (VertexId v = 0; v < n1; ++v) left[v] = v;
  std::vector<VertexId> right(n2);
  for (VertexId v = 0; v < n2; ++v) {
    if (v == v2) {
      right[v] = v1;
    } else {
      right[v] = static_cast<VertexId>(n1 + (v < v2 ? v : v - 1));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(n1 + n2 - 2);
  for (auto [a, b] : t1.edges()) edges.emplace_back(left[a], left[b]);
  for (auto [a, b] : t2.edges()) edges.emplace_back(right[a], right[b]);
  return {Tree::FromEdges(n1 + n2 - 1, edges), v1, std::move(left),
          std::move(right)};
}

VertexSet MapSet(const VertexSet& s, const std::vector<VertexId>& map,
                 std::size_t universe) {
  VertexSet out(universe);
  for (VertexId v : s.members()) out.insert(map.at(v));
  return out;
}

Tree Spider(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kTooSmall, "spider needs k >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= k; ++i) {
    edges.emplace_back(0, static_cast<VertexId>(i));
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + k));
  }
  return Tree::FromEdges(2 * k + 1, edges);
}

std::optional<std::string> CheckBondLaws(const BondFactor& left, VertexId v1,
                                         const BondFactor& right,
                                         VertexId v2) {
  const BondResult bond = VertexBond(*left.tree, v1, *right.tree, v2);
  const std::size_t n = bond.tree.order();
  const VertexSet core = Core(bond.tree);
  const bool in_both = left.core->contains(v1) && right.core->contains(v2);
  const bool in_bond = core.contains(bond.bond_vertex);
  if (in_both != in_bond) {
    return std::string("bond vertex in core of the bond is ") +
           (in_bond ? "true" : "false") + " but in core of both factors is " +
           (in_both ? "true" : "false");
  }
  if (!in_bond) return std::nullopt;
  const std::size_t alpha = Alpha(bond.tree);
  if (alpha + 1 != left.alpha + right.alpha) {
    return "alpha(T) = " + std::to_string(alpha) + " but alpha(T1) + alpha(T2) - 1 = " +
           std::to_string(left.alpha + right.alpha - 1);
  }
  VertexSet joined = MapSet(*left.core, bond.left_map, n);
  joined |= MapSet(*right.core, bond.right_map, n);
  if (!(joined == core)) {
    return "core(T) differs from core(T1) ∪ core(T2)";
  }
  return std::nullopt;
}

std::optional<std::string> CheckBondLaws(const Tree& t1, VertexId v1,
                                         const Tree& t2, VertexId v2) {
  const VertexSet c1 = Core(t1);
  const VertexSet c2 = Core(t2);
  return CheckBondLaws({&t1, Alpha(t1), &c1}, v1, {&t2, Alpha(t2), &c2}, v2);
}

}  // namespace stablecore
