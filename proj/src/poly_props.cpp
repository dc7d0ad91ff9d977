#include "antichain/poly_props.hpp"

#include <algorithm>

namespace antichain {

bool is_palindromic(const IntPoly& f) {
  const auto c = f.coeffs();
  for (std::size_t i = 0, j = c.size(); i < j--; ++i)
    if (c[i] != c[j]) return false;
  return true;
}

bool is_monic(const IntPoly& f) { return !f.is_zero() && f.leading() == 1; }

bool is_unimodal(const IntPoly& f) {
  const auto c = f.coeffs();
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

bool is_log_concave(const IntPoly& f) {
  const auto c = f.coeffs();
  for (std::size_t i = 1; i + 1 < c.size(); ++i)
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
  return true;
}

bool has_positive_coefficients(const IntPoly& f) {
  const auto c = f.coeffs();
  return !c.empty() && std::all_of(c.begin(), c.end(), [](const mpz_class& v) { return v > 0; });
}

bool GammaExpansion::all_positive() const {
  return exact() && std::all_of(gamma.begin(), gamma.end(), [](const mpz_class& g) { return g > 0; });
}

bool GammaExpansion::all_nonnegative() const {
  return exact() && std::all_of(gamma.begin(), gamma.end(), [](const mpz_class& g) { return g >= 0; });
}

IntPoly gamma_reconstruct(const std::vector<mpz_class>& gamma, int degree) {
  IntPoly out;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const int power = degree - 2 * static_cast<int>(i);
    if (power < 0) break;
    out.add_shifted(IntPoly::one_plus_x_pow(static_cast<std::size_t>(power)), i, gamma[i]);
  }
  return out;
}

GammaExpansion gamma_expand(const IntPoly& f) {
  GammaExpansion out;
  if (!is_palindromic(f)) return out;
  if (f.is_zero()) {
    out.status = GammaStatus::Exact;
    return out;
  }
  const int n = f.degree();
  IntPoly residual = f;
  // gamma_i is the x^i coefficient once lower terms are peeled off
  for (int i = 0; 2 * i <= n; ++i) {
    mpz_class g = residual[static_cast<std::size_t>(i)];
    residual.add_shifted(IntPoly::one_plus_x_pow(static_cast<std::size_t>(n - 2 * i)),
                         static_cast<std::size_t>(i), -g);
    out.gamma.push_back(std::move(g));
  }
  out.status = residual.is_zero() ? GammaStatus::Exact : GammaStatus::NotPalindromic;
  return out;
}

bool is_gamma_positive(const IntPoly& f) {
  return !f.is_zero() && gamma_expand(f).all_positive();
}

bool is_gamma_nonnegative(const IntPoly& f) {
  return !f.is_zero() && gamma_expand(f).all_nonnegative();
}

IntPoly even_index_extraction(const IntPoly& f) {
  const auto c = f.coeffs();
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < c.size(); i += 2) out.push_back(c[i]);
  return IntPoly(std::move(out));
}

}  // namespace antichain
