#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace antichain {

// Fixed-universe subset of {0, ..., universe-1} stored as 64-bit words.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const Subset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const Subset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  Subset& operator|=(const Subset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Subset& operator&=(const Subset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Subset& operator-=(const Subset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Subset operator|(Subset a, const Subset& b) noexcept { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) noexcept { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) noexcept { return a -= b; }

  friend bool operator==(const Subset&, const Subset&) = default;

  // Lexicographic order on the sorted member lists: the set holding the
  // smallest element of the symmetric difference comes first. Only
  // meaningful for subsets of equal cardinality.
  bool lex_less(const Subset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t diff = words_[i] ^ other.words_[i];
      if (diff) {
        const std::uint64_t low = diff & (~diff + 1);
        return (words_[i] & low) != 0;
      }
    }
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

}  // namespace antichain
