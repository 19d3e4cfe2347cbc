#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "stablecore/tree.hpp"

namespace stablecore {

using Json = nlohmann::ordered_json;

// Registry of checkable statements about trees.
//
//   C1   every stable S with 2|S| >= n meets pend(T)
//   C2   ... and if S - pend(T) != ∅, some v ∈ S ∩ pend(T), w ∈ S are at
//        distance 2
//   C3   every maximum stable set meets pend(T)
//   C4   α = n/2  =>  two pendants at odd distance
//   C5   strong unique independent <=> pendants on one side <=> all pendant
//        distances even
//   C6   stable S with |S| > min(|A|,|B|) meets pend(T) and has a
//        pendant-at-distance-2 pair
//   C7   α > n/2 <=> ξ >= 2,  and  α = n/2 <=> ξ = 0
//   C8   every stable set of pendants extends to a maximum stable set
//   C9   vertex-bonding laws over every split T = T1 * v * T2
//   C10  α > n/2  =>  |core ∩ pend| >= 2
//   C11  α > n/2, v ∈ core, deg(v) >= 2k  =>  |core ∩ pend| >= 2k
//   C12a α > n/2  =>  two vertices of core ∩ pend at even distance
//   C12b α > n/2, |core ∩ pend| = 2  =>  their distance is not 4
//   C13  ξ >= 1 + α - μ (logged only)
//   E1   measurement: intersection of all maximal stable sets of size k
enum class ClaimId {
  kC1,
  kC2,
  kC3,
  kC4,
  kC5,
  kC6,
  kC7,
  kC8,
  kC9,
  kC10,
  kC11,
  kC12a,
  kC12b,
  kC13,
  kE1,
};

const std::vector<ClaimId>& AllClaims();
std::string_view ClaimName(ClaimId id);
// Accepts "C1".."C13", "C12a", "C12b", "E1" (case-insensitive). "C12"
// expands to both sub-claims; "all" to the whole registry.
std::vector<ClaimId> ParseClaimList(std::string_view text);
// Report-only claims: refutations are recorded but do not count as a
// failed verification.
bool IsReportOnly(ClaimId id);

enum class ClaimStatus { kHolds, kRefuted, kNotApplicable, kSkipped, kMeasured };
std::string_view StatusName(ClaimStatus s);

struct ClaimResult {
  ClaimId claim;
  std::size_t n = 0;
  std::string tree;  // canonical edge-list serialization
  ClaimStatus status = ClaimStatus::kHolds;
  Json witness;      // null unless there is evidence to report
};

struct HarnessOptions {
  // Claims that scan every stable set (C1, C2, C6) skip larger trees.
  std::size_t stable_scan_ceiling = 16;
  std::size_t witness_limit = 16;
  std::size_t jobs = 1;
  // C8 tries every stable pendant subset up to this many pendants, and
  // `pendant_subset_samples` seeded subsets beyond it.
  std::size_t pendant_subset_exhaustive = 12;
  std::size_t pendant_subset_samples = 64;
  // C9 enumerates every split of N(v) up to this degree.
  std::size_t bond_split_degree = 12;
  std::size_t maximal_set_limit = std::size_t{1} << 20;
};

// Throws kScaleExceeded when the claim needs a scan beyond the configured
// ceiling (the suite runners count such trees as skipped instead).
ClaimResult CheckTree(ClaimId claim, const Tree& t,
                      const HarnessOptions& options = {});

enum class CorpusMode { kExhaustive, kRandom };

// Exhaustive: every labeled tree with n_min <= n <= n_max, ordered by n then
// Prüfer code. Random: sample_size trees; tree i draws from
// Rng(MixSeed(seed, i)), first its order uniformly in [n_min, n_max], then
// its n-2 Prüfer entries.
struct CorpusSpec {
  CorpusMode mode = CorpusMode::kExhaustive;
  std::size_t n_min = 2;
  std::size_t n_max = 2;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
  bool dedup_isomorphism = false;
  std::size_t enumeration_ceiling = 9;
};

// Throws kInvalidArgument / kTooLarge for malformed specs.
void ValidateCorpus(const CorpusSpec& spec);
std::vector<Tree> MaterializeCorpus(const CorpusSpec& spec);

struct Verdict {
  ClaimId claim;
  CorpusSpec corpus;
  std::size_t checked = 0;
  std::size_t held = 0;  // for E1: trees measured
  std::size_t refuted = 0;
  std::size_t skipped = 0;  // not applicable or beyond scan scale
  std::vector<ClaimResult> witnesses;  // canonical order, bounded
  // E1 only: per-tree measurements and aggregate summary.
  std::vector<Json> measurements;
  Json summary;
};

Verdict RunClaim(ClaimId claim, const CorpusSpec& corpus,
                 const HarnessOptions& options = {});
std::vector<Verdict> RunSuite(const std::vector<ClaimId>& claims,
                              const CorpusSpec& corpus,
                              const HarnessOptions& options = {});
// Runs over an already materialized corpus; `corpus` only labels output.
std::vector<Verdict> RunSuiteOn(const std::vector<ClaimId>& claims,
                                const CorpusSpec& corpus,
                                const std::vector<Tree>& trees,
                                const HarnessOptions& options = {});

}  // namespace stablecore
