#include "antichain/int_poly.hpp"

#include <algorithm>
#include <cctype>

#include "antichain/errors.hpp"

namespace antichain {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::monomial(std::size_t exponent, mpz_class coeff) {
  std::vector<mpz_class> c(exponent + 1, 0);
  c[exponent] = std::move(coeff);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::one_plus_x_pow(std::size_t n) {
  std::vector<mpz_class> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) mpz_bin_uiui(c[i].get_mpz_t(), n, i);
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

void IntPoly::add_shifted(const IntPoly& o, std::size_t shift, const mpz_class& coeff) {
  if (o.is_zero() || coeff == 0) return;
  const std::size_t need = o.c_.size() + shift;
  if (need > c_.size()) c_.resize(need, 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    mpz_addmul(c_[i + shift].get_mpz_t(), o.c_[i].get_mpz_t(), coeff.get_mpz_t());
  trim();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::shifted(std::size_t e) const {
  if (is_zero()) return {};
  std::vector<mpz_class> c(e, 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(c));
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
  // Horner on numerator with denominator powers kept separately.
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0, den_pow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  // acc = den^deg * f(x) after the loop, den_pow = den^(deg+1)
  mpq_class out(acc * den, den_pow);
  out.canonicalize();
  return out;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw ZeroPolynomial();
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw InvalidArgument("inexact polynomial division");
  std::vector<mpz_class> rem = c_;
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  std::vector<mpz_class> q(c_.size() - dd, 0);
  const mpz_class& lead = divisor.leading();
  for (std::size_t i = q.size(); i-- > 0;) {
    mpz_class& top = rem[i + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw InvalidArgument("inexact polynomial division");
    q[i] = top / lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q[i] * divisor.c_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw InvalidArgument("inexact polynomial division");
  return IntPoly(std::move(q));
}

std::string IntPoly::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class mag = abs(c_[i]);
    if (out.empty()) {
      if (c_[i] < 0) out += "-";
    } else {
      out += c_[i] < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string IntPoly::csv() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += c_[i].get_str();
  }
  return out;
}

IntPoly parse_coefficients(std::string_view text) {
  std::vector<mpz_class> c;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_space();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected integer coefficient", start);
    std::string token(text.substr(start, pos - start));
    if (token.front() == '+') token.erase(0, 1);
    c.emplace_back(token, 10);
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return IntPoly(std::move(c));
}

}  // namespace antichain
