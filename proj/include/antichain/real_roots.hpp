#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "antichain/int_poly.hpp"

namespace antichain {

// Sign of f at a rational point, computed on integers.
int sign_at(const IntPoly& f, const mpq_class& x);

// Primitive integer polynomial with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);
// Monic-up-to-content gcd over Q, returned primitive with positive leading
// coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
// Yun's square-free decomposition: f = c * prod a_i^i with the a_i
// square-free and pairwise coprime. Returns (a_i, i) for nonconstant a_i.
std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& f);
IntPoly square_free_part(const IntPoly& f);

// Sturm chain of a square-free polynomial of degree >= 1.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& square_free);

  int variations(const mpq_class& x) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;
  // Distinct roots in (lo, hi]; lo must not be a root.
  int count_roots(const mpq_class& lo, const mpq_class& hi) const;
  int count_real_roots() const;

 private:
  std::vector<IntPoly> chain_;
};

// One distinct real root: exactly lo when lo == hi, otherwise the unique root
// of the square-free part strictly inside (lo, hi).
struct RootInterval {
  mpq_class lo, hi;
  int multiplicity = 1;

  bool exact() const { return lo == hi; }
};

struct RootIsolation {
  std::vector<RootInterval> roots;  // ascending, pairwise disjoint
  int real_root_count = 0;          // with multiplicity
};

// Throws ZeroPolynomial.
RootIsolation isolate_roots(const IntPoly& f);
// Bisects every inexact interval until hi - lo <= width.
void refine_roots(RootIsolation& iso, const IntPoly& f, const mpq_class& width);

std::size_t count_distinct_real_roots(const IntPoly& f);
// True iff every complex root is real; constants are real-rooted.
// Throws ZeroPolynomial.
bool is_real_rooted(const IntPoly& f);

enum class InterlaceVerdict { Interlaces, DoesNotInterlace, DegreeMismatch };

struct InterlaceResult {
  InterlaceVerdict verdict = InterlaceVerdict::DoesNotInterlace;
  std::string diagnostic;

  bool holds() const noexcept { return verdict == InterlaceVerdict::Interlaces; }
};

// f interlaces g: deg f <= deg g <= deg f + 1 and the roots alternate as
// ... <= x_2 <= xi_2 <= x_1 <= xi_1 (ties allowed), where x are the roots of f
// and xi those of g, both in decreasing order. Throws ZeroPolynomial.
InterlaceResult interlaces(const IntPoly& f, const IntPoly& g);

using Combination = std::pair<mpq_class, mpq_class>;

// Fixed battery mixing signs and magnitudes.
std::vector<Combination> default_combinations();

// True iff every c1 f + c2 g in the list is real-rooted. A combination that
// vanishes identically is skipped.
bool obreschkoff_combination_test(const IntPoly& f, const IntPoly& g,
                                  const std::vector<Combination>& combinations);

enum class InterleaverKind { Certified, Refuted, Unknown };

struct InterleaverResult {
  InterleaverKind kind = InterleaverKind::Unknown;
  IntPoly interleaver;         // when Certified
  mpq_class c1 = 0, c2 = 0;    // when Refuted; c1 + c2 == 1
  std::string diagnostic;
};

// Three-valued search for h with f <= h and g <= h. Certificates are checked
// with interlaces(); refutations come from a non-real-rooted nonnegative
// combination a f + b g over the grid 0 <= a, b <= grid. Throws
// InvalidArgument unless f and g are real-rooted with positive leading
// coefficients.
InterleaverResult common_interleaver_check(const IntPoly& f, const IntPoly& g,
                                           unsigned grid = 16);

}  // namespace antichain
