#include "antichain/report.hpp"

#include "antichain/errors.hpp"
#include "antichain/poly_props.hpp"
#include "antichain/real_roots.hpp"

namespace antichain {

std::vector<std::string> to_strings(const std::vector<mpz_class>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c.get_str());
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

PropertyReport PropertyReport::of(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  PropertyReport r;
  r.polynomial = f;
  r.degree = f.degree();
  r.palindromic = is_palindromic(f);
  r.monic = is_monic(f);
  r.unimodal = is_unimodal(f);
  r.log_concave = is_log_concave(f);
  const GammaExpansion g = gamma_expand(f);
  if (g.exact()) {
    r.gamma = g.gamma;
    r.gamma_positive = g.all_positive();
  }
  r.real_rooted = is_real_rooted(f);
  r.evaluation_at_1 = f.evaluate(mpz_class(1));
  return r;
}

nlohmann::json PropertyReport::to_json() const {
  const std::vector<mpz_class> coeffs(polynomial.coeffs().begin(), polynomial.coeffs().end());
  nlohmann::json j;
  j["polynomial"] = to_strings(coeffs);
  j["degree"] = degree;
  j["palindromic"] = palindromic;
  j["monic"] = monic;
  j["unimodal"] = unimodal;
  j["log_concave"] = log_concave;
  j["gamma"] = gamma ? nlohmann::json(to_strings(*gamma)) : nlohmann::json(nullptr);
  j["gamma_positive"] = gamma_positive;
  j["real_rooted"] = real_rooted;
  j["evaluation_at_1"] = evaluation_at_1.get_str();
  return j;
}

std::string PropertyReport::csv_header() {
  return "coefficients,degree,palindromic,monic,unimodal,log_concave,gamma,gamma_positive,real_rooted,"
         "evaluation_at_1";
}

std::string PropertyReport::csv_row() const {
  const std::vector<mpz_class> coeffs(polynomial.coeffs().begin(), polynomial.coeffs().end());
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  return join({join(to_strings(coeffs), ";"), std::to_string(degree), b(palindromic), b(monic), b(unimodal),
               b(log_concave), gamma ? join(to_strings(*gamma), ";") : "", b(gamma_positive), b(real_rooted),
               evaluation_at_1.get_str()},
              ",");
}

}  // namespace antichain
