#include "stablecore/vertex_set.hpp"

#include <algorithm>

#include "stablecore/error.hpp"

namespace stablecore {

VertexSet::VertexSet(std::size_t universe,
                     std::initializer_list<VertexId> members)
    : VertexSet(universe) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::FromMembers(std::size_t universe,
                                 const std::vector<VertexId>& members) {
  VertexSet s(universe);
  for (VertexId v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::Full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

void VertexSet::insert(VertexId v) {
  if (v >= universe_) {
    throw Error(ErrorCode::kOutOfRange,
                "vertex " + std::to_string(v) + " outside universe of size " +
                    std::to_string(universe_));
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(VertexId v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void VertexSet::CheckUniverse(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex sets over different universes");
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  CheckUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  CheckUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  CheckUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return Full(universe_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  CheckUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  CheckUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool CanonicalLess(const VertexSet& a, const VertexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

}  // namespace stablecore
