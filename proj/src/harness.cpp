#include "stablecore/harness.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <thread>
#include <unordered_set>

#include "stablecore/bonding.hpp"
#include "stablecore/error.hpp"
#include "stablecore/generation.hpp"
#include "stablecore/independence.hpp"

namespace stablecore {

namespace {

struct ClaimInfo {
  ClaimId id;
  std::string_view name;
};

constexpr ClaimInfo kRegistry[] = {
    {ClaimId::kC1, "C1"},     {ClaimId::kC2, "C2"},
    {ClaimId::kC3, "C3"},     {ClaimId::kC4, "C4"},
    {ClaimId::kC5, "C5"},     {ClaimId::kC6, "C6"},
    {ClaimId::kC7, "C7"},     {ClaimId::kC8, "C8"},
    {ClaimId::kC9, "C9"},     {ClaimId::kC10, "C10"},
    {ClaimId::kC11, "C11"},   {ClaimId::kC12a, "C12a"},
    {ClaimId::kC12b, "C12b"}, {ClaimId::kC13, "C13"},
    {ClaimId::kE1, "E1"},
};

Json Members(const VertexSet& s) {
  Json out = Json::array();
  for (VertexId v : s.members()) out.push_back(v);
  return out;
}

Json MaskMembers(std::uint32_t mask) {
  Json out = Json::array();
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

// Everything the claims need about one tree, computed once.
struct TreeFacts {
  const Tree& tree;
  std::size_t n;
  std::size_t alpha;
  VertexSet pendants;
  VertexSet core;
  VertexSet core_pendants;
  Bipartition sides;

  explicit TreeFacts(const Tree& t)
      : tree(t),
        n(t.order()),
        alpha(Alpha(t)),
        pendants(PendantVertices(t)),
        core(Core(t)),
        core_pendants(core & pendants),
        sides(Bipartite(t)) {}

  bool alpha_above_half() const { return 2 * alpha > n; }
  bool alpha_is_half() const { return 2 * alpha == n; }
};

struct Outcome {
  ClaimStatus status;
  Json witness;
};

Outcome Holds() { return {ClaimStatus::kHolds, nullptr}; }
Outcome NotApplicable() { return {ClaimStatus::kNotApplicable, nullptr}; }
Outcome Refuted(Json witness) {
  return {ClaimStatus::kRefuted, std::move(witness)};
}

// ---------------------------------------------------------------------------
// Stable-set scans (C1, C2, C6).

// Visits every stable set of g until `visit` returns false.
void ForEachStableSet(const SmallGraph& g,
                      const std::function<bool(std::uint32_t)>& visit) {
  const std::size_t n = g.order();
  bool stop = false;
  std::function<void(std::size_t, std::uint32_t)> walk =
      [&](std::size_t v, std::uint32_t mask) {
        if (stop) return;
        if (v == n) {
          if (!visit(mask)) stop = true;
          return;
        }
        walk(v + 1, mask);
        if ((g.neighbors(static_cast<VertexId>(v)) & mask) == 0) {
          walk(v + 1, mask | (std::uint32_t{1} << v));
        }
      };
  walk(0, 0);
}

struct ScanContext {
  SmallGraph graph;
  std::uint32_t pendants;
  // For each pendant p, the vertices at distance exactly two from p.
  std::vector<std::uint32_t> second;

  explicit ScanContext(const Tree& t)
      : graph(SmallGraph::FromTree(t)),
        pendants(graph.pendants()),
        second(t.order(), 0) {
    for (std::uint32_t m = pendants; m != 0; m &= m - 1) {
      const auto p = static_cast<VertexId>(std::countr_zero(m));
      const auto hub = static_cast<VertexId>(std::countr_zero(graph.neighbors(p)));
      second[p] = graph.neighbors(hub) & ~(std::uint32_t{1} << p);
    }
  }

  bool HitsPendants(std::uint32_t s) const { return (s & pendants) != 0; }

  bool HasPendantAtDistanceTwo(std::uint32_t s) const {
    for (std::uint32_t m = s & pendants; m != 0; m &= m - 1) {
      if ((second[std::countr_zero(m)] & s) != 0) return true;
    }
    return false;
  }
};

Outcome ScanStableSets(
    const TreeFacts& f, const HarnessOptions& options,
    const std::function<bool(const ScanContext&, std::uint32_t)>& hypothesis,
    const std::function<bool(const ScanContext&, std::uint32_t)>& conclusion) {
  if (f.n > options.stable_scan_ceiling || f.n > SmallGraph::kMaxOrder) {
    return {ClaimStatus::kSkipped, nullptr};
  }
  const ScanContext ctx(f.tree);
  bool applicable = false;
  std::optional<std::uint32_t> offender;
  ForEachStableSet(ctx.graph, [&](std::uint32_t s) {
    if (!hypothesis(ctx, s)) return true;
    applicable = true;
    if (conclusion(ctx, s)) return true;
    offender = s;
    return false;
  });
  if (offender) {
    return Refuted(Json{{"stable_set", MaskMembers(*offender)},
                        {"pendants", MaskMembers(ctx.pendants)}});
  }
  return applicable ? Holds() : NotApplicable();
}

Outcome CheckC1(const TreeFacts& f, const HarnessOptions& options) {
  const int n = static_cast<int>(f.n);
  return ScanStableSets(
      f, options,
      [n](const ScanContext&, std::uint32_t s) {
        return 2 * std::popcount(s) >= n;
      },
      [](const ScanContext& ctx, std::uint32_t s) {
        return ctx.HitsPendants(s);
      });
}

Outcome CheckC2(const TreeFacts& f, const HarnessOptions& options) {
  const int n = static_cast<int>(f.n);
  return ScanStableSets(
      f, options,
      [n](const ScanContext& ctx, std::uint32_t s) {
        return 2 * std::popcount(s) >= n && (s & ~ctx.pendants) != 0;
      },
      [](const ScanContext& ctx, std::uint32_t s) {
        return ctx.HasPendantAtDistanceTwo(s);
      });
}

Outcome CheckC6(const TreeFacts& f, const HarnessOptions& options) {
  const int smaller =
      static_cast<int>(std::min(f.sides.a.size(), f.sides.b.size()));
  return ScanStableSets(
      f, options,
      [smaller](const ScanContext&, std::uint32_t s) {
        return std::popcount(s) > smaller;
      },
      [](const ScanContext& ctx, std::uint32_t s) {
        return ctx.HitsPendants(s) && ctx.HasPendantAtDistanceTwo(s);
      });
}

// ---------------------------------------------------------------------------
// Structural claims.

Outcome CheckC3(const TreeFacts& f) {
  // A maximum stable set avoiding pend(T) exists iff α(T - pend) = α(T).
  const VertexSet avoiding = MaxStableSetAvoiding(f.tree, f.pendants);
  if (avoiding.size() < f.alpha) return Holds();
  return Refuted(Json{{"maximum_stable_set", Members(avoiding)},
                      {"pendants", Members(f.pendants)}});
}

// Pendant pairs and their distances, by breadth-first search from each
// pendant.
struct PendantDistances {
  std::vector<VertexId> pendants;
  std::vector<std::vector<std::size_t>> from;  // from[i][v]

  PendantDistances(const Tree& t, const VertexSet& which)
      : pendants(which.members()) {
    from.reserve(pendants.size());
    for (VertexId p : pendants) from.push_back(DistancesFrom(t, p));
  }

  // First pair (in index order) whose distance satisfies `pred`.
  std::optional<std::pair<std::size_t, std::size_t>> FindPair(
      const std::function<bool(std::size_t)>& pred) const {
    for (std::size_t i = 0; i < pendants.size(); ++i) {
      for (std::size_t j = i + 1; j < pendants.size(); ++j) {
        if (pred(from[i][pendants[j]])) return std::make_pair(i, j);
      }
    }
    return std::nullopt;
  }
};

Outcome CheckC4(const TreeFacts& f) {
  if (!f.alpha_is_half()) return NotApplicable();
  const PendantDistances d(f.tree, f.pendants);
  if (d.FindPair([](std::size_t dist) { return dist % 2 == 1; })) {
    return Holds();
  }
  return Refuted(Json{{"pendants", Members(f.pendants)},
                      {"alpha", f.alpha}});
}

Outcome CheckC5(const TreeFacts& f) {
  const bool by_definition = IsStrongUniqueByDefinition(f.tree);
  const bool one_side = f.pendants.is_subset_of(f.sides.a) ||
                        f.pendants.is_subset_of(f.sides.b);
  const PendantDistances d(f.tree, f.pendants);
  const bool all_even =
      !d.FindPair([](std::size_t dist) { return dist % 2 == 1; });
  if (by_definition == one_side && one_side == all_even) return Holds();
  return Refuted(Json{{"strong_unique_by_definition", by_definition},
                      {"pendants_on_one_side", one_side},
                      {"pendant_distances_even", all_even}});
}

Outcome CheckC7(const TreeFacts& f) {
  const std::size_t xi = f.core.size();
  const bool part_i = f.alpha_above_half() == (xi >= 2);
  const bool part_ii = f.alpha_is_half() == (xi == 0);
  if (part_i && part_ii) return Holds();
  return Refuted(Json{{"alpha", f.alpha},
                      {"n", f.n},
                      {"xi", xi},
                      {"part_i_holds", part_i},
                      {"part_ii_holds", part_ii}});
}

// FNV-1a over the serialization; stable across platforms.
std::uint64_t TreeHash(const Tree& t) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : SerializeEdgeList(t)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Outcome CheckC8(const TreeFacts& f, const HarnessOptions& options) {
  const std::vector<VertexId> pend = f.pendants.members();
  std::vector<VertexSet> subsets;
  auto subset_from_bits = [&](auto&& pick) {
    VertexSet a(f.n);
    for (std::size_t i = 0; i < pend.size(); ++i) {
      if (pick(i)) a.insert(pend[i]);
    }
    return a;
  };
  if (pend.size() <= options.pendant_subset_exhaustive) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pend.size()); ++m) {
      subsets.push_back(subset_from_bits(
          [m](std::size_t i) { return ((m >> i) & 1U) != 0; }));
    }
  } else {
    subsets.push_back(f.pendants);
    Rng rng(TreeHash(f.tree));
    for (std::size_t k = 0; k < options.pendant_subset_samples; ++k) {
      subsets.push_back(
          subset_from_bits([&rng](std::size_t) { return rng.Next() & 1U; }));
    }
  }
  for (const VertexSet& a : subsets) {
    if (!IsStable(f.tree, a)) continue;  // only P2 has adjacent pendants
    const VertexSet s = ExtendPendantSet(f.tree, a);
    if (!IsStable(f.tree, s) || s.size() != f.alpha || !a.is_subset_of(s)) {
      return Refuted(Json{{"pendant_set", Members(a)},
                          {"extension", Members(s)},
                          {"alpha", f.alpha}});
    }
  }
  return Holds();
}

// Splits T at v into the part holding the branches through `left_branches`
// and the part holding the rest; both keep v. Factor vertices are relabeled
// in increasing original order.
struct Split {
  Tree left;
  VertexId left_bond;
  Tree right;
  VertexId right_bond;
};

Tree InducedFactor(const Tree& t, const std::vector<char>& keep,
                   VertexId bond, VertexId& local_bond) {
  std::vector<VertexId> local(t.order(), 0);
  std::size_t count = 0;
  for (VertexId v = 0; v < t.order(); ++v) {
    if (keep[v]) local[v] = static_cast<VertexId>(count++);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : t.edges()) {
    if (keep[a] && keep[b]) edges.emplace_back(local[a], local[b]);
  }
  local_bond = local[bond];
  return Tree::FromEdges(count, edges);
}

Outcome CheckC9(const TreeFacts& f, const HarnessOptions& options) {
  const Tree& t = f.tree;
  bool applicable = false;
  for (VertexId v = 0; v < f.n; ++v) {
    const auto nbrs = t.neighbors(v);
    const std::size_t d = nbrs.size();
    if (d < 2) continue;
    applicable = true;

    // branch[x] = index of the neighbor of v through which x is reached.
    std::vector<std::size_t> branch(f.n, d);
    {
      std::vector<VertexId> stack;
      for (std::size_t i = 0; i < d; ++i) {
        branch[nbrs[i]] = i;
        stack.push_back(nbrs[i]);
      }
      while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (VertexId y : t.neighbors(x)) {
          if (y != v && branch[y] == d) {
            branch[y] = branch[x];
            stack.push_back(y);
          }
        }
      }
    }

    // Left parts always contain neighbor 0, so each split is seen once.
    std::vector<std::vector<char>> left_parts;
    if (d <= options.bond_split_degree) {
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << d) - 1; m += 2) {
        std::vector<char> part(d);
        for (std::size_t i = 0; i < d; ++i) part[i] = (m >> i) & 1U;
        left_parts.push_back(std::move(part));
      }
    } else {
      for (std::size_t i = 0; i < d; ++i) {
        // Neighbor i alone on one side; neighbor 0 stays on the left.
        std::vector<char> part(d, i == 0 ? 0 : 1);
        part[i] = i == 0 ? 1 : 0;
        left_parts.push_back(std::move(part));
      }
      std::vector<char> half(d, 0);
      for (std::size_t i = 0; i < d / 2; ++i) half[i] = 1;
      left_parts.push_back(std::move(half));
    }

    for (const auto& part : left_parts) {
      std::vector<char> keep_left(f.n, 0), keep_right(f.n, 0);
      keep_left[v] = keep_right[v] = 1;
      for (VertexId x = 0; x < f.n; ++x) {
        if (x == v) continue;
        (part[branch[x]] ? keep_left : keep_right)[x] = 1;
      }
      VertexId v1 = 0, v2 = 0;
      const Tree left = InducedFactor(t, keep_left, v, v1);
      const Tree right = InducedFactor(t, keep_right, v, v2);
      if (auto violation = CheckBondLaws(left, v1, right, v2)) {
        Json left_part = Json::array();
        for (std::size_t i = 0; i < d; ++i) {
          if (part[i]) left_part.push_back(nbrs[i]);
        }
        return Refuted(Json{{"vertex", v},
                            {"left_neighbors", left_part},
                            {"violation", *violation}});
      }
    }
  }
  return applicable ? Holds() : NotApplicable();
}

Outcome CheckC10(const TreeFacts& f) {
  if (!f.alpha_above_half()) return NotApplicable();
  if (f.core_pendants.size() >= 2) return Holds();
  return Refuted(Json{{"core_pendants", Members(f.core_pendants)},
                      {"alpha", f.alpha}});
}

Outcome CheckC11(const TreeFacts& f) {
  if (!f.alpha_above_half()) return NotApplicable();
  VertexId hub = 0;
  std::size_t max_degree = 0;
  for (VertexId v : f.core.members()) {
    if (f.tree.degree(v) > max_degree) {
      max_degree = f.tree.degree(v);
      hub = v;
    }
  }
  const std::size_t k = max_degree / 2;
  if (k < 2) return NotApplicable();
  // The bound for the largest admissible k implies all smaller ones.
  if (f.core_pendants.size() >= 2 * k) return Holds();
  return Refuted(Json{{"core_vertex", hub},
                      {"degree", max_degree},
                      {"k", k},
                      {"core_pendants", Members(f.core_pendants)}});
}

Outcome CheckC12a(const TreeFacts& f) {
  if (!f.alpha_above_half()) return NotApplicable();
  const PendantDistances d(f.tree, f.core_pendants);
  if (d.FindPair([](std::size_t dist) { return dist % 2 == 0; })) {
    return Holds();
  }
  return Refuted(Json{{"core_pendants", Members(f.core_pendants)}});
}

Outcome CheckC12b(const TreeFacts& f) {
  if (!f.alpha_above_half() || f.core_pendants.size() != 2) {
    return NotApplicable();
  }
  const auto pair = f.core_pendants.members();
  const std::size_t dist = Distance(f.tree, pair[0], pair[1]);
  if (dist != 4) return Holds();
  return Refuted(Json{{"core_pendants", Members(f.core_pendants)},
                      {"distance", dist}});
}

Outcome CheckC13(const TreeFacts& f) {
  const std::size_t mu = Mu(f.tree);
  const std::size_t xi = f.core.size();
  // ξ >= 1 + α - μ, kept in unsigned arithmetic.
  if (xi + mu >= 1 + f.alpha) return Holds();
  return Refuted(Json{{"xi", xi}, {"alpha", f.alpha}, {"mu", mu}});
}

// E1: for k = min(|A|,|B|) and, when n is even, k = n/2, the intersection of
// all maximal stable sets of size k and how many pendants it holds.
Outcome MeasureE1(const TreeFacts& f, const HarnessOptions& options) {
  if (f.n > SmallGraph::kMaxOrder) return {ClaimStatus::kSkipped, nullptr};
  std::vector<VertexSet> maximal;
  try {
    maximal = EnumerateMaximalStableSets(f.tree, options.maximal_set_limit);
  } catch (const LimitExceeded&) {
    return {ClaimStatus::kSkipped, nullptr};
  }
  const std::size_t min_side = std::min(f.sides.a.size(), f.sides.b.size());
  std::vector<std::pair<std::string, std::size_t>> targets{
      {"min_side", min_side}};
  if (f.n % 2 == 0) targets.emplace_back("half", f.n / 2);

  Json sizes = Json::array();
  for (const auto& [kind, k] : targets) {
    std::size_t count = 0;
    VertexSet meet = VertexSet::Full(f.n);
    for (const auto& s : maximal) {
      if (s.size() != k) continue;
      ++count;
      meet &= s;
    }
    Json entry{{"kind", kind}, {"k", k}, {"num_sets", count}};
    if (count == 0) {
      entry["intersection"] = nullptr;
      entry["pendants_in_intersection"] = nullptr;
    } else {
      entry["intersection"] = Members(meet);
      entry["pendants_in_intersection"] = (meet & f.pendants).size();
    }
    sizes.push_back(std::move(entry));
  }
  const bool perfect = f.alpha_is_half();
  return {ClaimStatus::kMeasured,
          Json{{"n", f.n},
               {"tree", SerializeEdgeList(f.tree)},
               {"perfect_matching", perfect},
               {"beyond_question", perfect},
               {"sizes", std::move(sizes)}}};
}

Outcome Dispatch(ClaimId claim, const TreeFacts& f,
                 const HarnessOptions& options) {
  switch (claim) {
    case ClaimId::kC1: return CheckC1(f, options);
    case ClaimId::kC2: return CheckC2(f, options);
    case ClaimId::kC3: return CheckC3(f);
    case ClaimId::kC4: return CheckC4(f);
    case ClaimId::kC5: return CheckC5(f);
    case ClaimId::kC6: return CheckC6(f, options);
    case ClaimId::kC7: return CheckC7(f);
    case ClaimId::kC8: return CheckC8(f, options);
    case ClaimId::kC9: return CheckC9(f, options);
    case ClaimId::kC10: return CheckC10(f);
    case ClaimId::kC11: return CheckC11(f);
    case ClaimId::kC12a: return CheckC12a(f);
    case ClaimId::kC12b: return CheckC12b(f);
    case ClaimId::kC13: return CheckC13(f);
    case ClaimId::kE1: return MeasureE1(f, options);
  }
  throw Error(ErrorCode::kInternal, "unknown claim");
}

ClaimResult MakeResult(ClaimId claim, const TreeFacts& f, Outcome outcome,
                       const std::string& serialized) {
  ClaimResult r;
  r.claim = claim;
  r.n = f.n;
  r.tree = serialized;
  r.status = outcome.status;
  r.witness = std::move(outcome.witness);
  return r;
}

// ---------------------------------------------------------------------------
// Aggregation.

bool WitnessBefore(const ClaimResult& a, const ClaimResult& b) {
  if (a.n != b.n) return a.n < b.n;
  return a.tree < b.tree;
}

struct E1Tally {
  std::size_t trees = 0;
  std::size_t no_sets = 0;
  std::size_t fewer_than_two = 0;
  std::size_t at_least_two = 0;

  void Add(const Json& entry) {
    ++trees;
    if (entry["num_sets"].get<std::size_t>() == 0) {
      ++no_sets;
    } else if (entry["pendants_in_intersection"].get<std::size_t>() >= 2) {
      ++at_least_two;
    } else {
      ++fewer_than_two;
    }
  }
  void Merge(const E1Tally& o) {
    trees += o.trees;
    no_sets += o.no_sets;
    fewer_than_two += o.fewer_than_two;
    at_least_two += o.at_least_two;
  }
  Json ToJson() const {
    return Json{{"trees", trees},
                {"no_sets_of_size_k", no_sets},
                {"fewer_than_two_pendants", fewer_than_two},
                {"at_least_two_pendants", at_least_two}};
  }
};

struct Partial {
  std::size_t checked = 0;
  std::size_t held = 0;
  std::size_t refuted = 0;
  std::size_t skipped = 0;
  std::vector<ClaimResult> witnesses;
  std::vector<Json> measurements;
  E1Tally min_side, half, contrast_min_side, contrast_half;

  void TrimWitnesses(std::size_t limit) {
    std::sort(witnesses.begin(), witnesses.end(), WitnessBefore);
    if (witnesses.size() > limit) witnesses.resize(limit);
  }

  void Merge(Partial&& o, std::size_t limit) {
    checked += o.checked;
    held += o.held;
    refuted += o.refuted;
    skipped += o.skipped;
    for (auto& w : o.witnesses) witnesses.push_back(std::move(w));
    TrimWitnesses(limit);
    for (auto& m : o.measurements) measurements.push_back(std::move(m));
    min_side.Merge(o.min_side);
    half.Merge(o.half);
    contrast_min_side.Merge(o.contrast_min_side);
    contrast_half.Merge(o.contrast_half);
  }
};

void Record(Partial& p, ClaimResult&& r, std::size_t limit) {
  ++p.checked;
  switch (r.status) {
    case ClaimStatus::kHolds:
      ++p.held;
      break;
    case ClaimStatus::kRefuted:
      ++p.refuted;
      p.witnesses.push_back(std::move(r));
      if (p.witnesses.size() > 2 * limit + 16) p.TrimWitnesses(limit);
      break;
    case ClaimStatus::kNotApplicable:
    case ClaimStatus::kSkipped:
      ++p.skipped;
      break;
    case ClaimStatus::kMeasured: {
      ++p.held;
      const Json& m = r.witness;
      const bool perfect = m["perfect_matching"].get<bool>();
      for (const Json& entry : m["sizes"]) {
        const bool is_half = entry["kind"] == "half";
        E1Tally& tally = perfect ? (is_half ? p.contrast_half
                                            : p.contrast_min_side)
                                 : (is_half ? p.half : p.min_side);
        tally.Add(entry);
      }
      if (!perfect) p.measurements.push_back(std::move(r.witness));
      break;
    }
  }
}

}  // namespace

const std::vector<ClaimId>& AllClaims() {
  static const std::vector<ClaimId> all = [] {
    std::vector<ClaimId> ids;
    for (const auto& info : kRegistry) ids.push_back(info.id);
    return ids;
  }();
  return all;
}

std::string_view ClaimName(ClaimId id) {
  for (const auto& info : kRegistry) {
    if (info.id == id) return info.name;
  }
  return "?";
}

std::vector<ClaimId> ParseClaimList(std::string_view text) {
  std::vector<ClaimId> out;
  auto add = [&out](ClaimId id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string token(text.substr(pos, end - pos));
    pos = end + 1;
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                token.end());
    std::string upper;
    for (unsigned char c : token) upper += static_cast<char>(std::toupper(c));
    if (upper.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty claim name");
    }
    if (upper == "ALL") {
      for (ClaimId id : AllClaims()) add(id);
    } else if (upper == "C12") {
      add(ClaimId::kC12a);
      add(ClaimId::kC12b);
    } else {
      bool found = false;
      for (const auto& info : kRegistry) {
        std::string name;
        for (unsigned char c : info.name) name += static_cast<char>(std::toupper(c));
        if (name == upper) {
          add(info.id);
          found = true;
        }
      }
      if (!found) {
        throw Error(ErrorCode::kInvalidArgument,
                    "unknown claim '" + token + "'");
      }
    }
  }
  return out;
}

bool IsReportOnly(ClaimId id) {
  return id == ClaimId::kC13 || id == ClaimId::kE1;
}

std::string_view StatusName(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kHolds: return "holds";
    case ClaimStatus::kRefuted: return "refuted";
    case ClaimStatus::kNotApplicable: return "not-applicable";
    case ClaimStatus::kSkipped: return "skipped";
    case ClaimStatus::kMeasured: return "measured";
  }
  return "?";
}

ClaimResult CheckTree(ClaimId claim, const Tree& t,
                      const HarnessOptions& options) {
  const TreeFacts facts(t);
  Outcome outcome = Dispatch(claim, facts, options);
  if (outcome.status == ClaimStatus::kSkipped) {
    throw Error(ErrorCode::kScaleExceeded,
                std::string(ClaimName(claim)) + " needs an exhaustive scan; n = " +
                    std::to_string(t.order()) + " is beyond the scan ceiling");
  }
  return MakeResult(claim, facts, std::move(outcome), SerializeEdgeList(t));
}

void ValidateCorpus(const CorpusSpec& spec) {
  if (spec.n_min < 2) {
    throw Error(ErrorCode::kInvalidArgument, "corpus n_min must be >= 2");
  }
  if (spec.n_min > spec.n_max) {
    throw Error(ErrorCode::kInvalidArgument, "corpus n_min exceeds n_max");
  }
  if (spec.mode == CorpusMode::kExhaustive &&
      spec.n_max > spec.enumeration_ceiling) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive corpora are limited to n <= " +
                    std::to_string(spec.enumeration_ceiling));
  }
  if (spec.mode == CorpusMode::kRandom && spec.sample_size == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "random corpus needs a positive sample size");
  }
}

std::vector<Tree> MaterializeCorpus(const CorpusSpec& spec) {
  ValidateCorpus(spec);
  std::vector<Tree> trees;
  if (spec.mode == CorpusMode::kExhaustive) {
    for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
      EnumerateLabeledTrees(
          n, [&trees](const Tree& t) { trees.push_back(t); },
          spec.enumeration_ceiling);
    }
  } else {
    const std::uint64_t range = spec.n_max - spec.n_min + 1;
    trees.reserve(spec.sample_size);
    for (std::size_t i = 0; i < spec.sample_size; ++i) {
      Rng rng(MixSeed(spec.seed, i));
      const std::size_t n = spec.n_min + rng.UniformBelow(range);
      trees.push_back(RandomTree(n, rng));
    }
  }
  if (spec.dedup_isomorphism) {
    std::unordered_set<std::string> seen;
    std::vector<Tree> unique;
    for (auto& t : trees) {
      if (seen.insert(CanonicalForm(t)).second) unique.push_back(std::move(t));
    }
    trees = std::move(unique);
  }
  return trees;
}

std::vector<Verdict> RunSuiteOn(const std::vector<ClaimId>& claims,
                                const CorpusSpec& corpus,
                                const std::vector<Tree>& trees,
                                const HarnessOptions& options) {
  if (claims.empty()) return {};
  const std::size_t jobs =
      std::max<std::size_t>(1, std::min(options.jobs, trees.size()));
  const std::size_t limit = options.witness_limit;

  // Static contiguous partition; partials are merged in chunk order.
  std::vector<std::vector<Partial>> partials(
      jobs, std::vector<Partial>(claims.size()));
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](std::size_t job) {
    try {
      const std::size_t lo = trees.size() * job / jobs;
      const std::size_t hi = trees.size() * (job + 1) / jobs;
      for (std::size_t i = lo; i < hi; ++i) {
        const TreeFacts facts(trees[i]);
        const std::string serialized = SerializeEdgeList(trees[i]);
        for (std::size_t c = 0; c < claims.size(); ++c) {
          Record(partials[job][c],
                 MakeResult(claims[c], facts,
                            Dispatch(claims[c], facts, options), serialized),
                 limit);
        }
      }
    } catch (...) {
      errors[job] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t j = 0; j < jobs; ++j) workers.emplace_back(work, j);
    for (auto& w : workers) w.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<Verdict> verdicts;
  for (std::size_t c = 0; c < claims.size(); ++c) {
    Partial total;
    for (std::size_t j = 0; j < jobs; ++j) {
      total.Merge(std::move(partials[j][c]), limit);
    }
    total.TrimWitnesses(limit);
    Verdict v;
    v.claim = claims[c];
    v.corpus = corpus;
    v.checked = total.checked;
    v.held = total.held;
    v.refuted = total.refuted;
    v.skipped = total.skipped;
    v.witnesses = std::move(total.witnesses);
    if (claims[c] == ClaimId::kE1) {
      v.measurements = std::move(total.measurements);
      v.summary = Json{
          {"trees_without_perfect_matching", total.min_side.trees},
          {"min_side", total.min_side.ToJson()},
          {"half", total.half.ToJson()},
          {"perfect_matching_contrast",
           Json{{"beyond_question", true},
                {"min_side", total.contrast_min_side.ToJson()},
                {"half", total.contrast_half.ToJson()}}}};
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

std::vector<Verdict> RunSuite(const std::vector<ClaimId>& claims,
                              const CorpusSpec& corpus,
                              const HarnessOptions& options) {
  ValidateCorpus(corpus);
  if (claims.empty()) return {};
  return RunSuiteOn(claims, corpus, MaterializeCorpus(corpus), options);
}

Verdict RunClaim(ClaimId claim, const CorpusSpec& corpus,
                 const HarnessOptions& options) {
  return RunSuite({claim}, corpus, options).front();
}

}  // namespace stablecore
