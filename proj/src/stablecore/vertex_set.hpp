#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace stablecore {

using VertexId = std::uint32_t;

// Dense bit-indexed subset of {0, ..., universe-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
  static VertexSet FromMembers(std::size_t universe,
                               const std::vector<VertexId>& members);
  static VertexSet Full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(VertexId v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(VertexId v);
  void erase(VertexId v);

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  // Members in increasing order.
  std::vector<VertexId> members() const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  // Set difference.
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

  // Canonical order: lexicographic on the sorted member lists.
  friend bool CanonicalLess(const VertexSet& a, const VertexSet& b);

 private:
  void CheckUniverse(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
inline VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
inline VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

struct CanonicalSetOrder {
  bool operator()(const VertexSet& a, const VertexSet& b) const {
    return CanonicalLess(a, b);
  }
};

}  // namespace stablecore
