#include "doctest.h"
#include "stablecore/bonding.hpp"
#include "stablecore/error.hpp"
#include "stablecore/generation.hpp"
#include "stablecore/harness.hpp"
#include "stablecore/independence.hpp"
#include "stablecore/report.hpp"
#include "support/fixtures.hpp"

using namespace stablecore;

namespace {

CorpusSpec Exhaustive(std::size_t lo, std::size_t hi) {
  CorpusSpec c;
  c.mode = CorpusMode::kExhaustive;
  c.n_min = lo;
  c.n_max = hi;
  return c;
}

CorpusSpec Random(std::size_t lo, std::size_t hi, std::size_t count,
                  std::uint64_t seed) {
  CorpusSpec c;
  c.mode = CorpusMode::kRandom;
  c.n_min = lo;
  c.n_max = hi;
  c.sample_size = count;
  c.seed = seed;
  return c;
}

ErrorCode CodeOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

}  // namespace

TEST_CASE("claim registry") {
  CHECK(AllClaims().size() == 15);
  CHECK(ClaimName(ClaimId::kC12b) == "C12b");
  CHECK(ParseClaimList("C1,c3") == std::vector<ClaimId>{ClaimId::kC1, ClaimId::kC3});
  CHECK(ParseClaimList("C12") == std::vector<ClaimId>{ClaimId::kC12a, ClaimId::kC12b});
  CHECK(ParseClaimList(" e1 , C12B ") == std::vector<ClaimId>{ClaimId::kE1, ClaimId::kC12b});
  CHECK(ParseClaimList("all") == AllClaims());
  CHECK(ParseClaimList("C3,C3") == std::vector<ClaimId>{ClaimId::kC3});
  CHECK(CodeOf([] { ParseClaimList("C14"); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { ParseClaimList("C1,,C2"); }) == ErrorCode::kInvalidArgument);
  CHECK(IsReportOnly(ClaimId::kC13));
  CHECK(IsReportOnly(ClaimId::kE1));
  CHECK_FALSE(IsReportOnly(ClaimId::kC12b));
  CHECK(StatusName(ClaimStatus::kNotApplicable) == "not-applicable");
}

TEST_CASE("check_tree examples") {
  CHECK(CheckTree(ClaimId::kC10, Path(5)).status == ClaimStatus::kHolds);
  CHECK(CheckTree(ClaimId::kC7, Path(4)).status == ClaimStatus::kHolds);
  CHECK(CheckTree(ClaimId::kC12a, Path(5)).status == ClaimStatus::kHolds);

  ClaimResult b = CheckTree(ClaimId::kC12b, Path(5));
  CHECK(b.status == ClaimStatus::kRefuted);
  CHECK(b.tree == SerializeEdgeList(Path(5)));
  CHECK(b.witness["core_pendants"] == Json::array({0, 4}));
  CHECK(b.witness["distance"] == 4);
}

TEST_CASE("check_tree on the Figure-5 tree") {
  const Tree t = fixtures::Fig5();
  CHECK(CheckTree(ClaimId::kC10, t).status == ClaimStatus::kHolds);
  CHECK(CheckTree(ClaimId::kC12a, t).status == ClaimStatus::kHolds);
  CHECK(CheckTree(ClaimId::kC12b, t).status == ClaimStatus::kHolds);  // distance 6
}

TEST_CASE("hypothesis filters") {
  // α(P4) = n/2: C4 applies, C10-C12 do not.
  CHECK(CheckTree(ClaimId::kC4, Path(4)).status == ClaimStatus::kHolds);
  CHECK(CheckTree(ClaimId::kC10, Path(4)).status == ClaimStatus::kNotApplicable);
  CHECK(CheckTree(ClaimId::kC11, Path(4)).status == ClaimStatus::kNotApplicable);
  CHECK(CheckTree(ClaimId::kC12a, Path(4)).status == ClaimStatus::kNotApplicable);
  CHECK(CheckTree(ClaimId::kC12b, Path(4)).status == ClaimStatus::kNotApplicable);
  // α(P5) > n/2: C4 does not apply.
  CHECK(CheckTree(ClaimId::kC4, Path(5)).status == ClaimStatus::kNotApplicable);
  // C12b needs exactly two core pendants; K(1,3) has three.
  CHECK(CheckTree(ClaimId::kC12b, Star(3)).status == ClaimStatus::kNotApplicable);
  // C9 needs a vertex of degree two.
  CHECK(CheckTree(ClaimId::kC9, Path(2)).status == ClaimStatus::kNotApplicable);
  CHECK(CheckTree(ClaimId::kC9, Path(3)).status == ClaimStatus::kHolds);
}

TEST_CASE("C11 on spiders") {
  // spider(4): center of degree 4 in the core, k = 2, four core pendants.
  CHECK(CheckTree(ClaimId::kC11, Spider(4)).status == ClaimStatus::kHolds);
  CHECK(CheckTree(ClaimId::kC11, Spider(3)).status == ClaimStatus::kNotApplicable);
  CHECK(CheckTree(ClaimId::kC11, Spider(9)).status == ClaimStatus::kHolds);
}

TEST_CASE("scan claims respect the ceiling") {
  const Tree big = RandomTree(20, 1);
  for (ClaimId c : {ClaimId::kC1, ClaimId::kC2, ClaimId::kC6}) {
    CHECK(CodeOf([&] { CheckTree(c, big); }) == ErrorCode::kScaleExceeded);
  }
  HarnessOptions wide;
  wide.stable_scan_ceiling = 20;
  CHECK(CheckTree(ClaimId::kC1, big, wide).status == ClaimStatus::kHolds);
  // Non-scan claims are unaffected.
  CHECK(CheckTree(ClaimId::kC3, big).status == ClaimStatus::kHolds);
}

TEST_CASE("scale exceeded surfaces as skipped") {
  Verdict v = RunClaim(ClaimId::kC1, Random(20, 20, 5, 3));
  CHECK(v.checked == 5);
  CHECK(v.skipped == 5);
  CHECK(v.held == 0);

  HarnessOptions narrow;
  narrow.stable_scan_ceiling = 5;
  v = RunClaim(ClaimId::kC1, Exhaustive(5, 6), narrow);
  CHECK(v.checked == 125 + 1296);
  CHECK(v.held == 125);
  CHECK(v.skipped == 1296);
}

TEST_CASE("C13 is logged on trees with a perfect matching") {
  ClaimResult r = CheckTree(ClaimId::kC13, Path(2));
  CHECK(r.status == ClaimStatus::kRefuted);
  CHECK(r.witness["xi"] == 0);
  CHECK(CheckTree(ClaimId::kC13, Path(5)).status == ClaimStatus::kHolds);
}

TEST_CASE("E1 measurement on P5") {
  ClaimResult r = CheckTree(ClaimId::kE1, Path(5));
  CHECK(r.status == ClaimStatus::kMeasured);
  const Json& sizes = r.witness["sizes"];
  REQUIRE(sizes.size() == 1);  // n odd: only k = min(|A|,|B|)
  CHECK(sizes[0]["kind"] == "min_side");
  CHECK(sizes[0]["k"] == 2);
  CHECK(sizes[0]["num_sets"] == 3);  // {0,3}, {1,3}, {1,4}
  CHECK(sizes[0]["intersection"] == Json::array());
  CHECK(sizes[0]["pendants_in_intersection"] == 0);
}

TEST_CASE("corpus validation") {
  CHECK(CodeOf([] { ValidateCorpus(Exhaustive(1, 3)); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { ValidateCorpus(Exhaustive(5, 4)); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { ValidateCorpus(Exhaustive(2, 10)); }) == ErrorCode::kTooLarge);
  CHECK(CodeOf([] { ValidateCorpus(Random(2, 10, 0, 1)); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { ValidateCorpus(Random(2, 1000, 4, 1)); }) == ErrorCode::kOk);
}

TEST_CASE("corpus materialization") {
  CHECK(MaterializeCorpus(Exhaustive(2, 6)).size() == 1441);
  CorpusSpec dedup = Exhaustive(2, 8);
  dedup.dedup_isomorphism = true;
  // Free trees on 2..8 vertices: 1, 1, 2, 3, 6, 11, 23.
  CHECK(MaterializeCorpus(dedup).size() == 47);

  auto a = MaterializeCorpus(Random(3, 30, 50, 9));
  auto b = MaterializeCorpus(Random(3, 30, 50, 9));
  REQUIRE(a.size() == 50);
  CHECK(a == b);
  bool sizes_vary = false;
  for (const auto& t : a) {
    CHECK(t.order() >= 3);
    CHECK(t.order() <= 30);
    if (t.order() != a.front().order()) sizes_vary = true;
  }
  CHECK(sizes_vary);
}

TEST_CASE("run_suite") {
  CHECK(RunSuite({}, Exhaustive(2, 6)).empty());
  auto verdicts = RunSuite(AllClaims(), Exhaustive(2, 6));
  REQUIRE(verdicts.size() == AllClaims().size());
  for (const auto& v : verdicts) {
    CHECK(v.checked == 1441);
    CHECK(v.checked == v.held + v.refuted + v.skipped);
  }
}

TEST_CASE("witness list is bounded and ordered") {
  HarnessOptions options;
  options.witness_limit = 3;
  Verdict v = RunClaim(ClaimId::kC13, Exhaustive(2, 6), options);
  CHECK(v.refuted > 3);
  REQUIRE(v.witnesses.size() == 3);
  CHECK(v.witnesses[0].n == 2);
  for (std::size_t i = 1; i < v.witnesses.size(); ++i) {
    const auto& p = v.witnesses[i - 1];
    const auto& q = v.witnesses[i];
    CHECK((p.n < q.n || (p.n == q.n && p.tree < q.tree)));
  }
}

TEST_CASE("verdicts do not depend on the worker count") {
  const auto claims = AllClaims();
  const CorpusSpec corpus = Exhaustive(2, 7);
  HarnessOptions one;
  one.witness_limit = 5;
  HarnessOptions many = one;
  many.jobs = 5;
  CHECK(DumpJson(VerdictsToJson(RunSuite(claims, corpus, one))) ==
        DumpJson(VerdictsToJson(RunSuite(claims, corpus, many))));
}

TEST_CASE("witnesses replay") {
  HarnessOptions options;
  options.witness_limit = 10000;
  Verdict v = RunClaim(ClaimId::kC12b, Exhaustive(2, 7), options);
  REQUIRE(v.refuted > 0);
  CHECK(v.witnesses.size() == v.refuted);
  for (const auto& w : v.witnesses) {
    ClaimResult again = CheckTree(ClaimId::kC12b, ParseEdgeList(w.tree));
    CHECK(again.status == ClaimStatus::kRefuted);
    CHECK(again.witness == w.witness);
  }
}
