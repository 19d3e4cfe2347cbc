#include "stablecore/independence.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "stablecore/error.hpp"

namespace stablecore {

namespace {

constexpr VertexId kNoParent = std::numeric_limits<VertexId>::max();
constexpr std::int64_t kForbidden = std::numeric_limits<std::int64_t>::min() / 4;

// BFS order from vertex 0 and the induced parent pointers.
struct RootedTree {
  std::vector<VertexId> order;
  std::vector<VertexId> parent;

  explicit RootedTree(const Tree& t) : parent(t.order(), kNoParent) {
    order.reserve(t.order());
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      VertexId v = order[head];
      for (VertexId w : t.neighbors(v)) {
        if (w != parent[v]) {
          parent[w] = v;
          order.push_back(w);
        }
      }
    }
  }
};

// Subtree optima with v in / out of the set. Vertices in `forbidden` may
// not be included.
struct SubtreeOptima {
  std::vector<std::int64_t> in;
  std::vector<std::int64_t> out;

  std::int64_t best(VertexId v) const { return std::max(in[v], out[v]); }
};

SubtreeOptima DownwardPass(const Tree& t, const RootedTree& rooted,
                           const VertexSet* forbidden) {
  const std::size_t n = t.order();
  SubtreeOptima dp{std::vector<std::int64_t>(n, 1),
                   std::vector<std::int64_t>(n, 0)};
  if (forbidden != nullptr) {
    for (VertexId v = 0; v < n; ++v) {
      if (forbidden->contains(v)) dp.in[v] = kForbidden;
    }
  }
  for (std::size_t i = n; i-- > 1;) {
    VertexId v = rooted.order[i];
    VertexId p = rooted.parent[v];
    dp.in[p] += dp.out[v];
    dp.out[p] += dp.best(v);
  }
  return dp;
}

VertexSet Reconstruct(const Tree& t, const RootedTree& rooted,
                      const SubtreeOptima& dp) {
  VertexSet s(t.order());
  for (VertexId v : rooted.order) {
    VertexId p = rooted.parent[v];
    bool parent_in = p != kNoParent && s.contains(p);
    if (!parent_in && dp.in[v] >= dp.out[v]) s.insert(v);
  }
  return s;
}

VertexSet MaskToSet(std::size_t n, std::uint32_t mask) {
  VertexSet s(n);
  while (mask != 0) {
    s.insert(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

}  // namespace

SmallGraph::SmallGraph(std::size_t n, const std::vector<Edge>& edges) {
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kTooLarge,
                "brute-force graphs are limited to " +
                    std::to_string(kMaxOrder) + " vertices, got " +
                    std::to_string(n));
  }
  adjacency_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kOutOfRange, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::kInvalidArgument, "self-loop");
    adjacency_[u] |= std::uint32_t{1} << v;
    adjacency_[v] |= std::uint32_t{1} << u;
  }
}

SmallGraph SmallGraph::FromTree(const Tree& t) {
  return SmallGraph(t.order(),
                    std::vector<Edge>(t.edges().begin(), t.edges().end()));
}

bool SmallGraph::is_stable(std::uint32_t mask) const {
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    if ((adjacency_[std::countr_zero(m)] & mask) != 0) return false;
  }
  return true;
}

std::uint32_t SmallGraph::pendants() const {
  std::uint32_t out = 0;
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    if (std::popcount(adjacency_[v]) == 1) out |= std::uint32_t{1} << v;
  }
  return out;
}

BruteForceResult BruteForceStability(const SmallGraph& g) {
  const std::size_t n = g.order();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::size_t alpha = 0;
  std::uint64_t count = 0;
  std::uint32_t core = 0;
  std::uint32_t witness = 0;
  for (std::uint64_t m = 0; m < subsets; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    if (!g.is_stable(mask)) continue;
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > alpha) {
      alpha = size;
      count = 1;
      core = mask;
      witness = mask;
    } else if (size == alpha) {
      ++count;
      core &= mask;
      // Equal sizes: the set holding the lowest differing vertex is
      // lexicographically smaller.
      std::uint32_t diff = mask ^ witness;
      if ((mask >> std::countr_zero(diff)) & 1U) witness = mask;
    }
  }
  return {alpha, count, MaskToSet(n, core), MaskToSet(n, witness)};
}

std::size_t Alpha(const Tree& t) {
  RootedTree rooted(t);
  auto dp = DownwardPass(t, rooted, nullptr);
  return static_cast<std::size_t>(dp.best(0));
}

std::size_t Mu(const Tree& t) {
  RootedTree rooted(t);
  std::vector<char> matched(t.order(), 0);
  std::size_t size = 0;
  // Deepest vertices first: an unmatched vertex whose children are all
  // handled is a leaf of what remains, so it matches its parent.
  for (std::size_t i = t.order(); i-- > 1;) {
    VertexId v = rooted.order[i];
    VertexId p = rooted.parent[v];
    if (!matched[v] && !matched[p]) {
      matched[v] = matched[p] = 1;
      ++size;
    }
  }
  return size;
}

bool HasPerfectMatching(const Tree& t) { return 2 * Mu(t) == t.order(); }

std::vector<std::size_t> AlphaAfterDeletion(const Tree& t) {
  const std::size_t n = t.order();
  RootedTree rooted(t);
  auto dp = DownwardPass(t, rooted, nullptr);

  std::vector<std::int64_t> sum_out(n, 0);
  std::vector<std::int64_t> sum_best(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    VertexId v = rooted.order[i];
    sum_out[rooted.parent[v]] += dp.out[v];
    sum_best[rooted.parent[v]] += dp.best(v);
  }

  // Optima of T minus subtree(v), rooted at parent(v), with parent(v)
  // included / excluded.
  std::vector<std::int64_t> up_in(n, 0);
  std::vector<std::int64_t> up_out(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    VertexId v = rooted.order[i];
    VertexId p = rooted.parent[v];
    up_in[v] = 1 + sum_out[p] - dp.out[v];
    up_out[v] = sum_best[p] - dp.best(v);
    if (p != 0) {
      up_in[v] += up_out[p];
      up_out[v] += std::max(up_in[p], up_out[p]);
    }
  }

  std::vector<std::size_t> result(n);
  for (VertexId v = 0; v < n; ++v) {
    std::int64_t without = sum_best[v];
    if (v != 0) without += std::max(up_in[v], up_out[v]);
    result[v] = static_cast<std::size_t>(without);
  }
  return result;
}

VertexSet Core(const Tree& t) {
  const std::size_t alpha = Alpha(t);
  const auto deleted = AlphaAfterDeletion(t);
  VertexSet core(t.order());
  for (VertexId v = 0; v < t.order(); ++v) {
    if (deleted[v] < alpha) core.insert(v);
  }
  return core;
}

std::size_t ForestAlpha(const Forest& f) {
  std::size_t total = 0;
  for (const auto& comp : f.components) {
    total += comp.is_singleton() ? 1 : Alpha(comp.as_tree());
  }
  return total;
}

VertexSet CoreNaive(const Tree& t) {
  const std::size_t n = t.order();
  const std::size_t alpha = Alpha(t);
  VertexSet core(n);
  for (VertexId v = 0; v < n; ++v) {
    VertexSet removed(n);
    removed.insert(v);
    if (ForestAlpha(DeleteVertices(t, removed)) + 1 == alpha) core.insert(v);
  }
  return core;
}

VertexSet MaxStableSetAvoiding(const Tree& t, const VertexSet& forbidden) {
  RootedTree rooted(t);
  auto dp = DownwardPass(t, rooted, &forbidden);
  return Reconstruct(t, rooted, dp);
}

VertexSet MaximumStableSet(const Tree& t) {
  RootedTree rooted(t);
  auto dp = DownwardPass(t, rooted, nullptr);
  return Reconstruct(t, rooted, dp);
}

StableSetCount CountMaximumStableSets(const Tree& t) {
  const std::size_t n = t.order();
  RootedTree rooted(t);
  auto dp = DownwardPass(t, rooted, nullptr);
  std::vector<StableSetCount> ways_in(n, 1);
  std::vector<StableSetCount> ways_out(n, 1);
  for (std::size_t i = n; i-- > 1;) {
    VertexId v = rooted.order[i];
    VertexId p = rooted.parent[v];
    StableSetCount best_ways = 0;
    if (dp.in[v] == dp.best(v)) best_ways += ways_in[v];
    if (dp.out[v] == dp.best(v)) best_ways += ways_out[v];
    ways_in[p] *= ways_out[v];
    ways_out[p] *= best_ways;
  }
  StableSetCount total = 0;
  if (dp.in[0] == dp.best(0)) total += ways_in[0];
  if (dp.out[0] == dp.best(0)) total += ways_out[0];
  return total;
}

namespace {

enum class Choice { kIn, kOut, kAnyOptimal };

struct Pending {
  VertexId vertex;
  Choice choice;
};

class OptimalSetEnumerator {
 public:
  explicit OptimalSetEnumerator(const Tree& t)
      : rooted_(t), dp_(DownwardPass(t, rooted_, nullptr)),
        current_(t.order()) {
    children_.resize(t.order());
    for (std::size_t i = 1; i < t.order(); ++i) {
      VertexId v = rooted_.order[i];
      children_[rooted_.parent[v]].push_back(v);
    }
  }

  std::vector<VertexSet> Run() {
    Expand({{0, Choice::kAnyOptimal}});
    return std::move(found_);
  }

 private:
  void Expand(std::vector<Pending> pending) {
    if (pending.empty()) {
      found_.push_back(current_);
      return;
    }
    Pending task = pending.back();
    pending.pop_back();
    const VertexId v = task.vertex;
    switch (task.choice) {
      case Choice::kAnyOptimal:
        if (dp_.in[v] == dp_.best(v)) {
          auto next = pending;
          next.push_back({v, Choice::kIn});
          Expand(std::move(next));
        }
        if (dp_.out[v] == dp_.best(v)) {
          pending.push_back({v, Choice::kOut});
          Expand(std::move(pending));
        }
        break;
      case Choice::kIn:
        current_.insert(v);
        for (VertexId c : children_[v]) pending.push_back({c, Choice::kOut});
        Expand(std::move(pending));
        current_.erase(v);
        break;
      case Choice::kOut:
        for (VertexId c : children_[v]) {
          pending.push_back({c, Choice::kAnyOptimal});
        }
        Expand(std::move(pending));
        break;
    }
  }

  RootedTree rooted_;
  SubtreeOptima dp_;
  std::vector<std::vector<VertexId>> children_;
  VertexSet current_;
  std::vector<VertexSet> found_;
};

void BronKerbosch(const SmallGraph& g, std::uint32_t chosen,
                  std::uint32_t candidates, std::uint32_t excluded,
                  std::vector<std::uint32_t>& out, std::size_t& count,
                  std::size_t limit) {
  if (candidates == 0 && excluded == 0) {
    if (count++ < limit) out.push_back(chosen);
    return;
  }
  auto closed = [&g](VertexId v) {
    return g.neighbors(v) | (std::uint32_t{1} << v);
  };
  // Every maximal stable set meets N[u] for any u, so branching on
  // candidates inside N[u] is complete. Pick u minimizing that branching.
  VertexId pivot = 0;
  int fewest = 33;
  for (std::uint32_t m = candidates | excluded; m != 0; m &= m - 1) {
    auto u = static_cast<VertexId>(std::countr_zero(m));
    int branches = std::popcount(candidates & closed(u));
    if (branches < fewest) {
      fewest = branches;
      pivot = u;
    }
  }
  for (std::uint32_t m = candidates & closed(pivot); m != 0; m &= m - 1) {
    auto v = static_cast<VertexId>(std::countr_zero(m));
    const std::uint32_t bit = std::uint32_t{1} << v;
    BronKerbosch(g, chosen | bit, candidates & ~closed(v),
                 excluded & ~closed(v), out, count, limit);
    candidates &= ~bit;
    excluded |= bit;
  }
}

}  // namespace

std::vector<VertexSet> EnumerateMaximumStableSets(const Tree& t,
                                                  std::size_t limit) {
  if (limit == 0) {
    throw Error(ErrorCode::kInvalidArgument, "limit must be at least 1");
  }
  StableSetCount count = CountMaximumStableSets(t);
  if (count > limit) {
    throw LimitExceeded(count.str(), "tree has " + count.str() +
                                         " maximum stable sets, limit " +
                                         std::to_string(limit));
  }
  auto sets = OptimalSetEnumerator(t).Run();
  std::sort(sets.begin(), sets.end(), CanonicalSetOrder{});
  return sets;
}

std::vector<VertexSet> EnumerateMaximalStableSets(const SmallGraph& g,
                                                  std::size_t limit) {
  if (limit == 0) {
    throw Error(ErrorCode::kInvalidArgument, "limit must be at least 1");
  }
  const std::size_t n = g.order();
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> masks;
  std::size_t count = 0;
  BronKerbosch(g, 0, all, 0, masks, count, limit);
  if (count > limit) {
    throw LimitExceeded(std::to_string(count),
                        "graph has " + std::to_string(count) +
                            " maximal stable sets, limit " +
                            std::to_string(limit));
  }
  std::vector<VertexSet> sets;
  sets.reserve(masks.size());
  for (auto m : masks) sets.push_back(MaskToSet(n, m));
  std::sort(sets.begin(), sets.end(), CanonicalSetOrder{});
  return sets;
}

std::vector<VertexSet> EnumerateMaximalStableSets(const Tree& t,
                                                  std::size_t limit) {
  return EnumerateMaximalStableSets(SmallGraph::FromTree(t), limit);
}

VertexSet ExtendPendantSet(const Tree& t, const VertexSet& a) {
  if (a.universe() != t.order()) {
    throw Error(ErrorCode::kInvalidArgument,
                "pendant set is over a different vertex universe");
  }
  if (!a.is_subset_of(PendantVertices(t))) {
    throw Error(ErrorCode::kNotPendant, "set contains a non-pendant vertex");
  }
  if (!IsStable(t, a)) {
    throw Error(ErrorCode::kNotStable, "pendant set is not stable");
  }
  VertexSet s = MaximumStableSet(t);
  for (VertexId u : a.members()) {
    if (s.contains(u)) continue;
    // u is missing, so its only neighbor must block it; otherwise S + u
    // would be a larger stable set. The neighbor is not in `a` since `a`
    // is stable, so earlier swaps are never undone.
    const VertexId w = t.neighbors(u).front();
    if (!s.contains(w)) {
      throw Error(ErrorCode::kInternal, "maximum stable set is not maximal");
    }
    s.erase(w);
    s.insert(u);
  }
  return s;
}

bool IsStrongUniqueIndependent(const Tree& t) {
  const VertexSet pend = PendantVertices(t);
  const Bipartition bp = Bipartite(t);
  return pend.is_subset_of(bp.a) || pend.is_subset_of(bp.b);
}

bool IsStrongUniqueByDefinition(const Tree& t) {
  if (CountMaximumStableSets(t) != 1) return false;
  return IsStable(t, MaximumStableSet(t).complement());
}

AnalysisReport Analyze(const Tree& t) {
  AnalysisReport r;
  r.n = t.order();
  r.alpha = Alpha(t);
  r.mu = Mu(t);
  r.core = Core(t);
  r.xi = r.core.size();
  r.pendants = PendantVertices(t);
  r.bipartition = Bipartite(t);
  r.has_perfect_matching = 2 * r.mu == r.n;
  r.num_maximum_stable_sets = CountMaximumStableSets(t);
  r.strong_unique = IsStrongUniqueIndependent(t);
  return r;
}

}  // namespace stablecore
