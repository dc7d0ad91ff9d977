#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "antichain/int_poly.hpp"
#include "antichain/poly_props.hpp"

namespace antichain {

// Two-row fillings 0 <= a_1 <= ... <= a_n <= k, 0 <= b_1 <= ... <= b_m <= k
// with a_i <= b_i, each weighted by x^(#{a_i : a_i > 0} + #{b_j : b_j > a_j}),
// both counts taken over distinct values.
struct TableauWeightPoly {
  std::size_t n = 0, m = 0, k = 0;
  IntPoly poly;
};

// Column DP over (last a, last b, whether the current run of equal b-values
// has been counted). Throws InvalidArgument if m > n.
IntPoly f_direct(std::size_t n, std::size_t m, std::size_t k);

// f_{n',m'}^{k'} for m' <= n' <= n_max, k' <= k_max, filled layer by layer
// from f^0 = 1 by splitting off the cells equal to the top value.
class TableauRecursion {
 public:
  TableauRecursion(std::size_t n_max, std::size_t k_max);

  const IntPoly& at(std::size_t n, std::size_t m, std::size_t k) const;
  std::size_t n_max() const noexcept { return n_max_; }
  std::size_t k_max() const noexcept { return k_max_; }

 private:
  std::size_t index(std::size_t n, std::size_t m, std::size_t k) const;

  std::size_t n_max_, k_max_;
  std::vector<IntPoly> table_;
};

// f_{n,n}^k. The diagonal uses
//   f_{n,n}^{k+1} = f_{n,n}^k + x sum_{s=1..n} f_{n,n-s}^k
//                 + sum_{l=1..n} (x f_{n-l,n-l}^k + x^2 sum_{s=1..n-l} f_{n-l,n-l-s}^k).
IntPoly f_recursive(std::size_t n, std::size_t k);

// N of [2] x [n] x [n+1] through the transfer engine on C(2) x C(n) with
// k = n+1, and its gamma expansion. Throws InvalidArgument for n == 0.
std::pair<IntPoly, GammaExpansion> family_2_n_np1(std::size_t n);

}  // namespace antichain
