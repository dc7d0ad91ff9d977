#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antichain/int_poly.hpp"
#include "antichain/poset.hpp"
#include "antichain/poset_expr.hpp"
#include "antichain/subset.hpp"
#include "antichain/transfer.hpp"

namespace antichain {

// The connected minuscule posets: [m] x [n], H_n, K_n, J^2([2]x[3]) and
// J^3([2]x[3]).
struct MinusculeFamily {
  enum class Kind { Grid, H, K, J2, J3 };

  Kind kind = Kind::Grid;
  std::size_t m = 1, n = 1;  // Grid uses both, H and K use n

  static MinusculeFamily grid(std::size_t m, std::size_t n) { return {Kind::Grid, m, n}; }
  static MinusculeFamily h(std::size_t n) { return {Kind::H, 0, n}; }
  static MinusculeFamily k(std::size_t n) { return {Kind::K, 0, n}; }
  static MinusculeFamily j2() { return {Kind::J2, 0, 0}; }
  static MinusculeFamily j3() { return {Kind::J3, 0, 0}; }

  std::string name() const;
  std::size_t expected_size() const;
  Poset realize() const;
};

// Recognizes C(n), C(m) x C(n), H(n), K(n) and J^2 / J^3 of C(2) x C(3) or
// C(3) x C(2).
std::optional<MinusculeFamily> classify_minuscule(const PosetExpr& expr);

// Closed forms of N_P: sum C(m,i) C(n,i) x^i for grids, sum C(n+1,2i) x^i for
// H_n, 1 + (2n+2)x + x^2 for K_n, 1 + 27x + 27x^2 + x^3 for J^3. Throws
// InvalidArgument for J^2, which has no closed form here.
IntPoly closed_form_N(const MinusculeFamily& family);

mpz_class binomial(unsigned long n, unsigned long k);
// n! / (a! b! c!) with a + b + c == n.
mpz_class multinomial(unsigned long n, unsigned long a, unsigned long b, unsigned long c);
mpz_class catalan(unsigned long n);

// Cat(B_n, x) = sum_i (n; i, i, n-2i) x^i (1+x)^(n-2i), n >= 1.
IntPoly narayana_B(std::size_t n);
// Cat(D_m, x) for even m >= 4, m = 2n+2:
// sum_i (m-1-i)/(m-1) (m; i, i, m-2i) x^i (1+x)^(m-2i). Throws InvalidArgument
// for other m or if a term is not integral.
IntPoly narayana_D(std::size_t m);

// M_{[k] x P}(x) = prod_{a in P} (1 - x^{r(a)+k}) / (1 - x^{r(a)}) after
// cancelling common factors. Throws NotGraded, or InvalidArgument when the
// division is inexact.
IntPoly M_product_formula(const Poset& p, std::size_t k);

// Whether N_{[k] x P} is monic, from the classification of monic cases.
bool monic_classification(const MinusculeFamily& family, std::size_t k);

// Ideal of J^2([2]x[3]) as a 4-tuple.
struct J2IdealCode {
  int a = 0, b = 0, c = 0, d = 0;

  bool operator==(const J2IdealCode&) const = default;
  bool valid() const;
  bool below_or_equal(const J2IdealCode& o) const {
    return a <= o.a && b <= o.b && c <= o.c && d <= o.d;
  }
};

// All valid codes ordered by coordinate sum, then lexicographically (a linear
// extension of the componentwise order).
std::vector<J2IdealCode> enumerate_J2_ideal_codes();
// #max(I): number of strict inequalities among a >= min(b,4), b >= c,
// c >= min(6,d), d >= 0. Throws InvalidArgument for invalid codes.
int j2_max_count(const J2IdealCode& code);
// #(max(I) \ J) for J <= I: nonzero entries of (a-a1)(a-min(b,4)),
// (b-b1)(b-c), (c-c1)(c-min(6,d)), (d-d1)d.
int j2_relative_max_count(const J2IdealCode& ideal, const J2IdealCode& sub);

// Transfer matrix and V^(1) of J^2([2]x[3]) built from the 4-tuple codes
// alone, in the order of enumerate_J2_ideal_codes().
std::pair<TransferMatrix, StateVector> j2_transfer_from_codes();

// For Q = C(2) x C(n) as numbered by product(): the pair (a, b), a <= b,
// where a counts the ideal's elements in the upper row and b in the lower.
std::pair<std::size_t, std::size_t> grid2_ideal_code(const Subset& ideal, std::size_t n);

}  // namespace antichain
