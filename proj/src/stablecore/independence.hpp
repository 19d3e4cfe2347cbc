#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stablecore/tree.hpp"

namespace stablecore {

// |Ω(T)| can be exponential in n, so counts are arbitrary precision.
using StableSetCount = boost::multiprecision::cpp_int;

// Arbitrary simple graph on at most 30 vertices, adjacency as bitmasks.
// Used by the brute-force oracle and for non-tree fixtures.
class SmallGraph {
 public:
  static constexpr std::size_t kMaxOrder = 30;

  // Throws kTooLarge above kMaxOrder, kOutOfRange / kInvalidArgument for
  // bad endpoints or self-loops. Repeated edges are merged.
  SmallGraph(std::size_t n, const std::vector<Edge>& edges);
  static SmallGraph FromTree(const Tree& t);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::uint32_t neighbors(VertexId v) const { return adjacency_[v]; }
  bool is_stable(std::uint32_t mask) const;
  // Vertices of degree exactly one.
  std::uint32_t pendants() const;

 private:
  std::vector<std::uint32_t> adjacency_;
};

struct BruteForceResult {
  std::size_t alpha = 0;
  std::uint64_t count = 0;  // number of maximum stable sets
  VertexSet core;           // intersection of all maximum stable sets
  VertexSet witness;        // the canonically smallest maximum stable set
};

// Exhaustive scan over every vertex subset with a bitmask stability test.
BruteForceResult BruteForceStability(const SmallGraph& g);

std::size_t Alpha(const Tree& t);
// Maximum matching by repeatedly matching a leaf to its neighbor.
std::size_t Mu(const Tree& t);
bool HasPerfectMatching(const Tree& t);

// core(T) = { v : α(T - v) = α(T) - 1 }, by a two-pass rerooting DP.
VertexSet Core(const Tree& t);
// α(T - v) for every v, from the same rerooting sweep.
std::vector<std::size_t> AlphaAfterDeletion(const Tree& t);
// Same contract as Core(): n explicit deletions, summing α over the
// components of each T - v.
VertexSet CoreNaive(const Tree& t);
// α of a forest; singleton components count 1.
std::size_t ForestAlpha(const Forest& f);

// A maximum stable set of T among those avoiding `forbidden`, i.e. a maximum
// stable set of T - forbidden, expressed in T's labels.
VertexSet MaxStableSetAvoiding(const Tree& t, const VertexSet& forbidden);
// Some S ∈ Ω(T).
VertexSet MaximumStableSet(const Tree& t);

StableSetCount CountMaximumStableSets(const Tree& t);

// Ω(T) in canonical order. Throws LimitExceeded when |Ω(T)| > limit.
std::vector<VertexSet> EnumerateMaximumStableSets(const Tree& t,
                                                  std::size_t limit);

// All inclusion-maximal stable sets in canonical order (Bron–Kerbosch with
// pivoting on the complement). Throws kTooLarge above SmallGraph::kMaxOrder
// and LimitExceeded past `limit`.
std::vector<VertexSet> EnumerateMaximalStableSets(const Tree& t,
                                                  std::size_t limit);
std::vector<VertexSet> EnumerateMaximalStableSets(const SmallGraph& g,
                                                  std::size_t limit);

// Pendant exchange: starts from a maximum stable set and swaps each missing
// pendant of `a` in for its neighbor until a ⊆ S. Throws kNotStable or
// kNotPendant when `a` is not a stable set of pendant vertices.
VertexSet ExtendPendantSet(const Tree& t, const VertexSet& a);

// All pendant vertices on one side of the bipartition.
bool IsStrongUniqueIndependent(const Tree& t);
// |Ω(T)| = 1 and V - S is stable.
bool IsStrongUniqueByDefinition(const Tree& t);

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t alpha = 0;
  std::size_t mu = 0;
  std::size_t xi = 0;
  VertexSet core;
  VertexSet pendants;
  Bipartition bipartition;
  bool has_perfect_matching = false;
  StableSetCount num_maximum_stable_sets;
  bool strong_unique = false;
};

AnalysisReport Analyze(const Tree& t);

}  // namespace stablecore
