#include "stablecore/generation.hpp"

#include <algorithm>

#include "stablecore/error.hpp"

namespace stablecore {

Tree PruferDecode(const PruferCode& code, std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::kTooSmall,
                "a tree needs at least two vertices, got " + std::to_string(n));
  }
  if (code.size() != n - 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "Prüfer code for n = " + std::to_string(n) + " needs length " +
                    std::to_string(n - 2) + ", got " +
                    std::to_string(code.size()));
  }
  std::vector<std::size_t> degree(n, 1);
  for (VertexId x : code) {
    if (x >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  "Prüfer entry " + std::to_string(x) + " >= " +
                      std::to_string(n));
    }
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (VertexId x : code) {
    edges.emplace_back(static_cast<VertexId>(leaf), x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(static_cast<VertexId>(leaf), static_cast<VertexId>(n - 1));
  return Tree::FromEdges(n, edges);
}

PruferCode PruferEncode(const Tree& t) {
  const std::size_t n = t.order();
  // Parents with respect to the root n-1.
  std::vector<VertexId> parent(n, 0);
  std::vector<VertexId> stack{static_cast<VertexId>(n - 1)};
  std::vector<char> seen(n, 0);
  seen[n - 1] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : t.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::size_t> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = t.degree(v);

  PruferCode code;
  code.reserve(n - 2);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    VertexId next = parent[leaf];
    code.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return code;
}

std::uint64_t Rng::UniformBelow(std::uint64_t bound) {
  if (bound == 0) {
    throw Error(ErrorCode::kInvalidArgument, "UniformBelow(0)");
  }
  // 2^64 mod bound, computed without 128-bit arithmetic.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t MixSeed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Tree RandomTree(std::size_t n, std::uint64_t seed) {
  if (n < 2) {
    throw Error(ErrorCode::kTooSmall,
                "a tree needs at least two vertices, got " + std::to_string(n));
  }
  Rng rng(seed);
  return RandomTree(n, rng);
}

Tree RandomTree(std::size_t n, Rng& rng) {
  if (n < 2) {
    throw Error(ErrorCode::kTooSmall,
                "a tree needs at least two vertices, got " + std::to_string(n));
  }
  PruferCode code(n - 2);
  for (auto& x : code) x = static_cast<VertexId>(rng.UniformBelow(n));
  return PruferDecode(code, n);
}

std::uint64_t LabeledTreeCount(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::kTooSmall,
                "a tree needs at least two vertices, got " + std::to_string(n));
  }
  std::uint64_t count = 1;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (count > UINT64_MAX / n) {
      throw Error(ErrorCode::kTooLarge, "labeled tree count overflows");
    }
    count *= n;
  }
  return count;
}

Tree LabeledTreeAt(std::size_t n, std::uint64_t index) {
  const std::uint64_t total = LabeledTreeCount(n);
  if (index >= total) {
    throw Error(ErrorCode::kOutOfRange,
                "tree index " + std::to_string(index) + " >= " +
                    std::to_string(total));
  }
  PruferCode code(n - 2);
  for (std::size_t i = code.size(); i-- > 0;) {
    code[i] = static_cast<VertexId>(index % n);
    index /= n;
  }
  return PruferDecode(code, n);
}

void EnumerateLabeledTrees(std::size_t n,
                           const std::function<void(const Tree&)>& visit,
                           std::size_t ceiling) {
  if (n < 2) {
    throw Error(ErrorCode::kTooSmall,
                "a tree needs at least two vertices, got " + std::to_string(n));
  }
  if (n > ceiling) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive enumeration limited to n <= " +
                    std::to_string(ceiling));
  }
  PruferCode code(n - 2, 0);
  for (;;) {
    visit(PruferDecode(code, n));
    std::size_t i = code.size();
    while (i > 0 && code[i - 1] == n - 1) code[--i] = 0;
    if (i == 0) return;
    ++code[i - 1];
  }
}

namespace {

// Centers of the tree: the one or two vertices left after repeatedly
// stripping all leaves.
std::vector<VertexId> Centers(const Tree& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> degree(n);
  std::vector<VertexId> layer;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<VertexId> next;
    for (VertexId v : layer) {
      for (VertexId w : t.neighbors(v)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string RootedEncoding(const Tree& t, VertexId root) {
  const std::size_t n = t.order();
  std::vector<VertexId> order{root};
  std::vector<VertexId> parent(n, root);
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  order.reserve(n);
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId v = order[head];
    for (VertexId w : t.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> children(n);
  for (std::size_t i = order.size(); i-- > 0;) {
    VertexId v = order[i];
    auto& kids = children[v];
    std::sort(kids.begin(), kids.end());
    std::string enc = "(";
    for (auto& k : kids) enc += k;
    enc += ')';
    kids.clear();
    if (v != root) {
      children[parent[v]].push_back(std::move(enc));
    } else {
      return enc;
    }
  }
  return {};
}

}  // namespace

std::string CanonicalForm(const Tree& t) {
  auto centers = Centers(t);
  std::string best = RootedEncoding(t, centers.front());
  if (centers.size() == 2) {
    best = std::min(best, RootedEncoding(t, centers.back()));
  }
  return best;
}

std::string RootedCanonicalForm(const Tree& t, VertexId root) {
  if (root >= t.order()) {
    throw Error(ErrorCode::kOutOfRange, "root " + std::to_string(root) +
                                            " >= " + std::to_string(t.order()));
  }
  return RootedEncoding(t, root);
}

Tree Relabel(const Tree& t, const std::vector<VertexId>& perm) {
  if (perm.size() != t.order()) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  }
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (auto [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
  return Tree::FromEdges(t.order(), edges);
}

}  // namespace stablecore
