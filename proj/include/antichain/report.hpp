#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "antichain/int_poly.hpp"

namespace antichain {

struct PropertyReport {
  IntPoly polynomial;
  int degree = IntPoly::kZeroDegree;
  bool palindromic = false;
  bool monic = false;
  bool unimodal = false;
  bool log_concave = false;
  std::optional<std::vector<mpz_class>> gamma;  // only for palindromic input
  bool gamma_positive = false;
  bool real_rooted = false;
  mpz_class evaluation_at_1;

  // Throws ZeroPolynomial.
  static PropertyReport of(const IntPoly& f);

  // Big integers are written as decimal strings.
  nlohmann::json to_json() const;

  // Columns: coefficients,degree,palindromic,monic,unimodal,log_concave,
  // gamma,gamma_positive,real_rooted,evaluation_at_1. Lists are
  // ';'-separated, an absent gamma is empty.
  static std::string csv_header();
  std::string csv_row() const;
};

std::vector<std::string> to_strings(const std::vector<mpz_class>& v);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace antichain
