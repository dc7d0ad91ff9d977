#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antichain {

// Dense univariate polynomial with arbitrary-precision integer coefficients;
// index = exponent. Never stores trailing zeros, so the zero polynomial has
// no coefficients and degree() == kZeroDegree.
class IntPoly {
 public:
  static constexpr int kZeroDegree = -1;  // stands for -infinity

  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(std::size_t exponent, mpz_class coeff = 1);
  // (1 + x)^n
  static IntPoly one_plus_x_pow(std::size_t n);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::span<const mpz_class> coeffs() const noexcept { return c_; }
  // Coefficient of x^i; zero beyond the degree.
  mpz_class operator[](std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  const mpz_class& leading() const { return c_.back(); }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& s);
  // this += coeff * x^shift * o
  void add_shifted(const IntPoly& o, std::size_t shift, const mpz_class& coeff = 1);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
  friend IntPoly operator*(const mpz_class& s, IntPoly a) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  // x^e * this
  IntPoly shifted(std::size_t e) const;
  IntPoly derivative() const;

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;

  // Exact division; throws InvalidArgument if the remainder is nonzero.
  IntPoly divide_exact(const IntPoly& divisor) const;

  // "1 + 6x + 3x^2"
  std::string pretty() const;
  // "1,6,3" (constant term first); "0" for the zero polynomial
  std::string csv() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Parses a comma-separated coefficient list, constant term first.
// Throws ParseError.
IntPoly parse_coefficients(std::string_view text);

}  // namespace antichain
