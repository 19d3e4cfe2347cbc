#include "stablecore/tree.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <optional>

#include "stablecore/error.hpp"

namespace stablecore {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void CheckVertex(const Tree& t, VertexId v) {
  if (v >= t.order()) {
    throw Error(ErrorCode::kOutOfRange,
                "vertex " + std::to_string(v) + " not in tree of order " +
                    std::to_string(t.order()));
  }
}

}  // namespace

Tree Tree::FromEdges(std::size_t n, std::span<const Edge> edges) {
  if (n < 2) {
    throw Error(ErrorCode::kTooSmall,
                "a tree needs at least two vertices, got " + std::to_string(n));
  }
  if (n > std::numeric_limits<VertexId>::max()) {
    throw Error(ErrorCode::kTooLarge, "vertex count exceeds 32-bit labels");
  }
  Tree t;
  t.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") has an endpoint >= " + std::to_string(n));
    }
    if (u == v) {
      throw Error(ErrorCode::kNotATree,
                  "self-loop at vertex " + std::to_string(u));
    }
    t.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (t.edges_.size() != n - 1) {
    throw Error(ErrorCode::kNotATree,
                "expected " + std::to_string(n - 1) + " edges, got " +
                    std::to_string(t.edges_.size()));
  }
  std::sort(t.edges_.begin(), t.edges_.end());
  auto dup = std::adjacent_find(t.edges_.begin(), t.edges_.end());
  if (dup != t.edges_.end()) {
    throw Error(ErrorCode::kNotATree,
                "duplicate edge (" + std::to_string(dup->first) + "," +
                    std::to_string(dup->second) + ")");
  }

  t.offsets_.assign(n + 1, 0);
  for (auto [u, v] : t.edges_) {
    ++t.offsets_[u + 1];
    ++t.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) t.offsets_[i + 1] += t.offsets_[i];
  t.neighbors_.resize(2 * (n - 1));
  std::vector<std::size_t> fill(t.offsets_.begin(), t.offsets_.end() - 1);
  // First pass appends smaller neighbors, second pass larger ones; both
  // arrive in ascending order because the edge list is sorted.
  for (auto [u, v] : t.edges_) t.neighbors_[fill[v]++] = u;
  for (auto [u, v] : t.edges_) t.neighbors_[fill[u]++] = v;

  // n-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : t.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::kNotATree, "graph is disconnected");
  }
  return t;
}

Tree Path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  }
  return Tree::FromEdges(n, edges);
}

Tree Star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) {
    edges.emplace_back(0, static_cast<VertexId>(i));
  }
  return Tree::FromEdges(leaves + 1, edges);
}

VertexSet PendantVertices(const Tree& t) {
  VertexSet out(t.order());
  for (VertexId v = 0; v < t.order(); ++v) {
    if (t.degree(v) == 1) out.insert(v);
  }
  return out;
}

Bipartition Bipartite(const Tree& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> dist = DistancesFrom(t, 0);
  Bipartition bp{VertexSet(n), VertexSet(n)};
  for (VertexId v = 0; v < n; ++v) {
    (dist[v] % 2 == 0 ? bp.a : bp.b).insert(v);
  }
  return bp;
}

std::vector<std::size_t> DistancesFrom(const Tree& t, VertexId source) {
  CheckVertex(t, source);
  std::vector<std::size_t> dist(t.order(), kUnreached);
  std::vector<VertexId> queue{source};
  queue.reserve(t.order());
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId v = queue[head];
    for (VertexId w : t.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t Distance(const Tree& t, VertexId u, VertexId v) {
  CheckVertex(t, v);
  return DistancesFrom(t, u)[v];
}

bool IsStable(const Tree& t, const VertexSet& s) {
  for (auto [u, v] : t.edges()) {
    if (s.contains(u) && s.contains(v)) return false;
  }
  return true;
}

Forest DeleteVertices(const Tree& t, const VertexSet& w) {
  const std::size_t n = t.order();
  if (w.universe() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "deleted set is over a different vertex universe");
  }
  if (w.size() == n) {
    throw Error(ErrorCode::kEmptyResult, "deleting every vertex");
  }
  Forest forest;
  forest.original_order = n;
  std::vector<VertexId> local(n, 0);
  std::vector<char> seen(n, 0);
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start] || w.contains(start)) continue;
    ForestComponent comp;
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.vertices.push_back(v);
      for (VertexId x : t.neighbors(v)) {
        if (!seen[x] && !w.contains(x)) {
          seen[x] = 1;
          stack.push_back(x);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    if (comp.vertices.size() >= 2) {
      for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
        local[comp.vertices[i]] = static_cast<VertexId>(i);
      }
      std::vector<Edge> edges;
      for (VertexId v : comp.vertices) {
        for (VertexId x : t.neighbors(v)) {
          if (v < x && !w.contains(x)) edges.emplace_back(local[v], local[x]);
        }
      }
      comp.tree.push_back(Tree::FromEdges(comp.vertices.size(), edges));
    }
    forest.components.push_back(std::move(comp));
  }
  return forest;
}

std::string SerializeEdgeList(const Tree& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (auto [u, v] : t.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

namespace {

// Splits a data line into unsigned integers; rejects anything else.
std::vector<std::uint64_t> ParseIntegers(std::string_view line,
                                         std::size_t line_no) {
  std::vector<std::uint64_t> values;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    std::uint64_t value = 0;
    auto token = line.substr(i, j - i);
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "expected a non-negative integer, got '" +
                                    std::string(token) + "'");
    }
    values.push_back(value);
    i = j;
  }
  return values;
}

}  // namespace

Tree ParseEdgeList(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::size_t last_line = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') continue;
    last_line = line_no;
    auto values = ParseIntegers(line, line_no);
    if (!n) {
      if (values.size() != 1) {
        throw ParseError(line_no, "first data line must hold the vertex count");
      }
      n = values[0];
      if (*n > std::numeric_limits<VertexId>::max()) {
        throw ParseError(line_no, "vertex count too large");
      }
      continue;
    }
    if (values.size() != 2) {
      throw ParseError(line_no, "edge line must hold exactly two integers");
    }
    if (*n >= 1 && edges.size() == *n - 1) {
      throw ParseError(line_no, "more than n-1 edge lines");
    }
    if (values[0] >= *n || values[1] >= *n) {
      throw ParseError(line_no, "edge endpoint out of range for n = " +
                                    std::to_string(*n));
    }
    edges.emplace_back(static_cast<VertexId>(values[0]),
                       static_cast<VertexId>(values[1]));
  }
  if (!n) throw ParseError(line_no + 1, "missing vertex count");
  if (*n < 2) {
    throw Error(ErrorCode::kTooSmall,
                "a tree needs at least two vertices, got " + std::to_string(*n));
  }
  if (edges.size() != *n - 1) {
    throw ParseError(std::max(last_line, std::size_t{1}),
                     "expected " + std::to_string(*n - 1) +
                         " edge lines, found " + std::to_string(edges.size()));
  }
  return Tree::FromEdges(static_cast<std::size_t>(*n), edges);
}

}  // namespace stablecore
