#pragma once

#include <vector>

#include "antichain/int_poly.hpp"

namespace antichain {

// a_i == a_{n-i} for n = deg f. The zero polynomial counts as palindromic.
bool is_palindromic(const IntPoly& f);
// Leading coefficient equals 1.
bool is_monic(const IntPoly& f);
// a_0 <= ... <= a_j >= ... >= a_n for some j (zeros included).
bool is_unimodal(const IntPoly& f);
// a_i^2 >= a_{i-1} a_{i+1} for 1 <= i <= n-1.
bool is_log_concave(const IntPoly& f);
// Every coefficient up to the degree is strictly positive.
bool has_positive_coefficients(const IntPoly& f);

enum class GammaStatus { Exact, NotPalindromic };

// f = sum_i gamma_i x^i (1+x)^(n-2i), n = deg f.
struct GammaExpansion {
  GammaStatus status = GammaStatus::NotPalindromic;
  std::vector<mpz_class> gamma;

  bool exact() const noexcept { return status == GammaStatus::Exact; }
  bool all_positive() const;
  bool all_nonnegative() const;
};

GammaExpansion gamma_expand(const IntPoly& f);
// Rebuilds sum_i gamma_i x^i (1+x)^(degree-2i).
IntPoly gamma_reconstruct(const std::vector<mpz_class>& gamma, int degree);

// Exact expansion with strictly positive entries.
bool is_gamma_positive(const IntPoly& f);
// Exact expansion with nonnegative entries.
bool is_gamma_nonnegative(const IntPoly& f);

// E2(x^m) = x^(m/2) for even m and 0 for odd m.
IntPoly even_index_extraction(const IntPoly& f);

}  // namespace antichain
