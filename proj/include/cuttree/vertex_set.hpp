#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace cuttree {

using VertexIndex = int;

/// Fixed-universe bitset over vertex indices 0..universe-1.
///
/// Ordering is the canonical encoding order: two sets compare like their
/// sorted member lists compared lexicographically.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexIndex> members)
      : VertexSet(universe) {
    for (auto v : members) set(v);
  }
  template <typename Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.set(static_cast<VertexIndex>(v));
    return s;
  }
  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool test(VertexIndex v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  void set(VertexIndex v) {
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void reset(VertexIndex v) {
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool is_full() const { return count() == universe_; }

  VertexSet complement() const {
    VertexSet r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  VertexIndex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i])
        return static_cast<VertexIndex>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  std::vector<VertexIndex> members() const {
    std::vector<VertexIndex> out;
    for_each([&](VertexIndex v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        f(static_cast<VertexIndex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    // Lexicographic on sorted member lists: at the lowest differing bit the
    // set holding that bit has the smaller next element, unless the other
    // set has already run out of elements.
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const auto diff = a.words_[i] ^ b.words_[i];
      if (!diff) continue;
      const auto bit = std::countr_zero(diff);
      const bool a_has = (a.words_[i] >> bit) & 1u;
      const auto& other = a_has ? b : a;
      // The holder's next element is `bit`; the other set's next element is
      // larger, or absent (then it is a proper prefix and sorts first).
      const bool other_has_more = other.has_member_at_or_after(i, bit);
      const bool a_smaller = a_has ? other_has_more : !other_has_more;
      return a_smaller ? std::strong_ordering::less
                       : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 1099511628211ull ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  bool has_member_at_or_after(std::size_t word, int bit) const {
    auto w = words_[word] & (~std::uint64_t{0} << bit);
    if (w) return true;
    for (std::size_t i = word + 1; i < words_.size(); ++i)
      if (words_[i]) return true;
    return false;
  }
  void trim() {
    if (universe_ % 64 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace cuttree
