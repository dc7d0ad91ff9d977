#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "antichain/subset.hpp"

namespace antichain {

using Cover = std::pair<std::size_t, std::size_t>;  // (lower, upper)

// Finite poset on elements 0..n-1. Immutable after construction; the order
// relation is kept as precomputed principal downsets and upsets.
class Poset {
 public:
  Poset() = default;

  // Builds the poset generated by the given relations u < v. Redundant
  // (transitively implied) pairs are allowed and dropped from covers().
  // Throws InvalidArgument on cycles or out-of-range labels.
  static Poset from_relations(std::size_t n, const std::vector<Cover>& relations);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Cover>& covers() const noexcept { return covers_; }

  bool leq(std::size_t a, std::size_t b) const noexcept { return down_[b].contains(a); }
  bool less(std::size_t a, std::size_t b) const noexcept { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const noexcept { return leq(a, b) || leq(b, a); }

  // Elements <= x (resp. >= x), including x.
  const Subset& down(std::size_t x) const noexcept { return down_[x]; }
  const Subset& up(std::size_t x) const noexcept { return up_[x]; }

  // Elements covered by x.
  const std::vector<std::size_t>& lower_covers(std::size_t x) const noexcept { return lower_[x]; }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const noexcept { return upper_[x]; }

  bool is_graded() const noexcept { return rank_.has_value(); }
  bool is_connected() const;

  // Rank with minimal elements at 1. Throws NotGraded.
  int rank(std::size_t x) const;
  const std::vector<int>& ranks() const;
  // Maximum rank d. Throws NotGraded.
  int max_rank() const;
  // Sizes |Q_1|, ..., |Q_d|. Throws NotGraded.
  std::vector<std::size_t> rank_levels() const;

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

  // Downward closure of an arbitrary subset.
  Subset down_closure(const Subset& s) const;

 private:
  void derive_rank();

  std::size_t n_ = 0;
  std::vector<Cover> covers_;
  std::vector<Subset> down_, up_;
  std::vector<std::vector<std::size_t>> lower_, upper_;
  std::optional<std::vector<int>> rank_;
};

// Constructors. Numbering of each result is documented per function.

// 0 < 1 < ... < n-1.
Poset chain(std::size_t n);
// (a, b) -> a * |Q| + b, componentwise order.
Poset product(const Poset& p, const Poset& q);
// Elements of p first, then q shifted by |p|; all of p below all of q.
Poset ordinal_sum(const Poset& p, const Poset& q);
// Elements of p first, then q shifted by |p|; no relations across.
Poset disjoint_union(const Poset& p, const Poset& q);
// H_n: pairs (i, j), 1 <= i <= j <= n, in lexicographic order.
Poset symmetric_square_quotient(std::size_t n);
// K_n = [n] + ([1] | [1]) + [n].
Poset k_poset(std::size_t n);
// J(P): one element per ideal of P in canonical ideal order, ordered by
// inclusion. Throws ExplosionError above max_ideals.
Poset ideal_poset(const Poset& p, std::size_t max_ideals = 1'000'000);

// Whether [k] x p has exactly one rank level of largest size, decided by the
// window-sum criterion. Throws NotGraded / NotRankUnimodal.
bool unique_largest_rank_level(const Poset& p, std::size_t k);

bool is_rank_unimodal_levels(const std::vector<std::size_t>& levels);

}  // namespace antichain
