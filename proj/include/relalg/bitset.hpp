#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace relalg {

// Fixed-size dynamic bitset. Atom sets and dense relation bitmaps are both
// built on this; the size is chosen at construction and never changes.
class Bitset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static Bitset full(std::size_t size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~word_type{0};
    b.trim();
    return b;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= word_type{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const noexcept {
    for (auto w : words_)
      if (w != 0) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  bool intersects(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  Bitset& operator-=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) noexcept { return a -= b; }

  Bitset complement() const {
    Bitset r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  // Index of the first set bit at or after `from`, or size() if there is none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t wi = from / kWordBits;
    word_type w = words_[wi] & (~word_type{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t first() const noexcept { return next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = first(); i < size_; i = next(i + 1)) f(i);
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  const std::vector<word_type>& words() const noexcept { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend auto operator<=>(const Bitset& a, const Bitset& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  void trim() noexcept {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (word_type{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

}  // namespace relalg

template <>
struct std::hash<relalg::Bitset> {
  std::size_t operator()(const relalg::Bitset& b) const noexcept {
    std::size_t h = b.size();
    for (auto w : b.words()) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }
};
