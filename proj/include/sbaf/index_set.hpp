#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace sbaf {

/// Fixed-universe bitset over dense indices [0, universe).
///
/// The tag parameter keeps argument sets and sentence sets from being mixed
/// up. Sets over different universes never compare equal.
template <typename Tag>
class IndexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : IndexSet(universe) {
    for (auto i : members) insert(i);
  }

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  static IndexSet from_indices(std::size_t universe, const std::vector<std::size_t>& members) {
    IndexSet s(universe);
    for (auto i : members) s.insert(i);
    return s;
  }

  /// Low bits of `mask` become members 0..63.
  static IndexSet from_mask(std::size_t universe, Word mask) {
    IndexSet s(universe);
    if (!s.words_.empty()) {
      s.words_[0] = mask;
      s.trim();
    }
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t i) const {
    return i < universe_ && ((words_[i / kWordBits] >> (i % kWordBits)) & 1U);
  }
  void insert(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void erase(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const IndexSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.word(k)) return false;
    return true;
  }
  bool intersects(const IndexSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.word(k)) return true;
    return false;
  }

  IndexSet& operator|=(const IndexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.word(k);
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.word(k);
    return *this;
  }
  IndexSet& operator-=(const IndexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.word(k);
    return *this;
  }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  /// Smallest member >= from, or universe() if there is none.
  std::size_t next(std::size_t from) const {
    if (from >= universe_) return universe_;
    std::size_t k = from / kWordBits;
    Word w = words_[k] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) {
        std::size_t i = k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        return i < universe_ ? i : universe_;
      }
      if (++k == words_.size()) return universe_;
      w = words_[k];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = next(0); i < universe_; i = next(i + 1)) fn(i);
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Canonical order: lexicographic on the ascending member sequence.
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    std::size_t i = a.next(0);
    std::size_t j = b.next(0);
    while (i < a.universe_ && j < b.universe_) {
      if (i != j) return i <=> j;
      i = a.next(i + 1);
      j = b.next(j + 1);
    }
    bool a_done = i >= a.universe_;
    bool b_done = j >= b.universe_;
    if (a_done != b_done) return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.universe_ <=> b.universe_;
  }

 private:
  Word word(std::size_t k) const { return k < words_.size() ? words_[k] : 0; }
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

struct ArgumentTag {};
struct SentenceTag {};

using ArgSet = IndexSet<ArgumentTag>;
using SentSet = IndexSet<SentenceTag>;

}  // namespace sbaf
