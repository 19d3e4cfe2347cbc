#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "stablecore/tree.hpp"

namespace stablecore {

using PruferCode = std::vector<VertexId>;

// Linear-time decode of a Prüfer sequence into the labeled tree on n
// vertices. The code must have length n-2 with entries < n.
Tree PruferDecode(const PruferCode& code, std::size_t n);
PruferCode PruferEncode(const Tree& t);

// Reproducible randomness.
//
// All sampling goes through std::mt19937_64, whose output sequence is fixed
// by the C++ standard, and UniformBelow(), which maps raw 64-bit outputs to
// [0, bound) by rejection sampling (discarding draws below 2^64 mod bound and
// reducing the rest modulo bound). std::uniform_int_distribution is not used
// because its mapping differs between standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t Next() { return engine_(); }
  std::uint64_t UniformBelow(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to derive independent per-item seeds.
std::uint64_t MixSeed(std::uint64_t a, std::uint64_t b);

// Uniform labeled tree: n-2 entries drawn with Rng(seed).UniformBelow(n),
// then decoded. Throws kTooSmall for n < 2.
Tree RandomTree(std::size_t n, std::uint64_t seed);
// Same, drawing the n-2 entries from an existing generator.
Tree RandomTree(std::size_t n, Rng& rng);

inline constexpr std::size_t kDefaultEnumerationCeiling = 9;

// n^(n-2). Throws kTooSmall for n < 2.
std::uint64_t LabeledTreeCount(std::size_t n);

// The index-th labeled tree on n vertices, where the Prüfer code is the
// base-n expansion of index (most significant digit first).
Tree LabeledTreeAt(std::size_t n, std::uint64_t index);

// Visits every labeled tree on n vertices once, in Prüfer-code lexicographic
// order. Throws kTooLarge above `ceiling`.
void EnumerateLabeledTrees(std::size_t n,
                           const std::function<void(const Tree&)>& visit,
                           std::size_t ceiling = kDefaultEnumerationCeiling);

// AHU encoding rooted at the center; for bicentral trees the smaller of the
// two rooted encodings. Equal iff the trees are isomorphic.
std::string CanonicalForm(const Tree& t);
// AHU encoding of t rooted at `root`. Equal iff there is an isomorphism
// mapping one root to the other.
std::string RootedCanonicalForm(const Tree& t, VertexId root);

// Applies a vertex relabeling: vertex v becomes perm[v].
Tree Relabel(const Tree& t, const std::vector<VertexId>& perm);

}  // namespace stablecore
