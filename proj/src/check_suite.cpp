#include "antichain/check_suite.hpp"

#include "antichain/errors.hpp"
#include "antichain/ideals.hpp"
#include "antichain/minuscule.hpp"
#include "antichain/poly_props.hpp"
#include "antichain/poset_expr.hpp"
#include "antichain/real_roots.hpp"
#include "antichain/sperner.hpp"
#include "antichain/tableaux.hpp"
#include "antichain/transfer.hpp"

namespace antichain {

namespace {

std::vector<mpz_class> nums(std::initializer_list<const char*> v) {
  std::vector<mpz_class> out;
  for (const char* s : v) out.emplace_back(s);
  return out;
}

std::vector<mpz_class> coeffs(const IntPoly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

std::vector<mpz_class> flag(bool b) { return {mpz_class(b ? 1 : 0)}; }

std::vector<mpz_class> gammas(const IntPoly& f) {
  const GammaExpansion g = gamma_expand(f);
  if (!g.exact()) throw Error("not palindromic");
  return g.gamma;
}

// Coefficients at the given exponents.
std::vector<mpz_class> pick(const IntPoly& f, std::initializer_list<std::size_t> at) {
  std::vector<mpz_class> out;
  for (std::size_t i : at) out.push_back(f[i]);
  return out;
}

IntPoly n_of(const char* expr, std::size_t k) { return antichain_poly_k(build(expr), k); }

// Per-ideal polynomials of [2] x [3] at k = 4, addressed by (upper, lower).
IntPoly grid23_entry(std::size_t a, std::size_t b) {
  const Poset q = product(chain(2), chain(3));
  for (const auto& [ideal, poly] : per_ideal_polys(q, 4))
    if (grid2_ideal_code(ideal, 3) == std::pair{a, b}) return poly;
  throw Error("no such ideal");
}

IntPoly grid23_sum(std::initializer_list<std::pair<std::size_t, std::size_t>> codes) {
  IntPoly s;
  for (const auto& [a, b] : codes) s += grid23_entry(a, b);
  return s;
}

}  // namespace

std::vector<CheckVector> builtin_check_vectors() {
  std::vector<CheckVector> v;
  v.push_back({"grid23_ideal_count", [] {
                 return std::vector<mpz_class>{mpz_class(enumerate_ideals(product(chain(2), chain(3))).size())};
               },
               nums({"10"})});
  v.push_back({"grid23_N", [] { return coeffs(antichain_poly_direct(product(chain(2), chain(3)))); },
               nums({"1", "6", "3"})});
  v.push_back({"grid23_V1", [] {
                 std::vector<mpz_class> out;
                 for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{
                          {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}) {
                   const Poset q = product(chain(2), chain(3));
                   for (const auto& [ideal, poly] : per_ideal_polys(q, 1))
                     if (grid2_ideal_code(ideal, 3) == std::pair{a, b}) out.push_back(poly.degree());
                 }
                 return out;
               },
               nums({"0", "1", "1", "1", "1", "2", "2", "1", "2", "1"})});
  v.push_back({"grid23_V4_entry_13", [] { return coeffs(grid23_entry(1, 3)); }, nums({"0", "0", "16", "38", "11"})});
  v.push_back({"grid23_V4_entry_33", [] { return coeffs(grid23_entry(3, 3)); },
               nums({"0", "4", "30", "70", "55", "15", "1"})});
  v.push_back({"k4_x_grid23", [] { return coeffs(n_of("C(2) x C(3)", 4)); },
               nums({"1", "24", "120", "200", "120", "24", "1"})});
  v.push_back({"interlace_1", [] {
                 return flag(interlaces(grid23_sum({{0, 0}, {0, 1}}), grid23_entry(0, 2)).holds());
               },
               nums({"1"})});
  v.push_back({"interlace_2", [] {
                 return flag(interlaces(grid23_sum({{0, 0}, {0, 1}, {0, 2}}), grid23_entry(0, 3)).holds());
               },
               nums({"1"})});
  v.push_back({"interlace_3", [] {
                 return flag(interlaces(grid23_sum({{1, 1}, {1, 2}}), grid23_entry(1, 3)).holds());
               },
               nums({"1"})});
  v.push_back({"interlace_4", [] {
                 return flag(interlaces(grid23_sum({{0, 0}, {0, 1}, {0, 2}, {0, 3}}),
                                        grid23_sum({{1, 1}, {1, 2}, {1, 3}}))
                                 .holds());
               },
               nums({"1"})});
  v.push_back({"interlace_5", [] {
                 return flag(interlaces(grid23_sum({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2},
                                                    {2, 3}}),
                                        grid23_entry(3, 3))
                                 .holds());
               },
               nums({"1"})});
  v.push_back({"grid_n_n_closed_form_n4", [] { return coeffs(antichain_poly_k(chain(4), 4)); },
               nums({"1", "16", "36", "16", "1"})});
  v.push_back({"H3_closed_form", [] { return coeffs(antichain_poly_k(symmetric_square_quotient(3), 1)); },
               nums({"1", "6", "1"})});
  v.push_back({"K3_closed_form", [] { return coeffs(antichain_poly_k(k_poset(3), 1)); }, nums({"1", "8", "1"})});
  v.push_back({"J3_closed_form", [] { return coeffs(antichain_poly_k(MinusculeFamily::j3().realize(), 1)); },
               nums({"1", "27", "27", "1"})});
  v.push_back({"K_gamma_n3", [] { return gammas(antichain_poly_k(k_poset(3), 1)); }, nums({"1", "6"})});
  v.push_back({"catalan_B_equals_grid_n5", [] { return flag(narayana_B(5) == antichain_poly_k(chain(5), 5)); },
               nums({"1"})});
  v.push_back({"catalan_D_equals_K", [] {
                 bool ok = true;
                 for (std::size_t n = 1; n <= 3; ++n) ok = ok && narayana_D(2 * n + 2) == antichain_poly_k(k_poset(n), 2 * n + 1);
                 return flag(ok);
               },
               nums({"1"})});
  v.push_back({"J2_k5_gamma", [] { return gammas(antichain_poly_k(MinusculeFamily::j2().realize(), 5)); },
               nums({"1", "70", "745", "1850", "1025", "62"})});
  v.push_back({"J2_k11_gamma", [] { return gammas(antichain_poly_k(MinusculeFamily::j2().realize(), 11)); },
               nums({"1", "160", "4900", "49280", "194810", "314720", "193760", "35840", "860"})});
  v.push_back({"J2_log_concave_k1_to_11", [] {
                 const Poset q = MinusculeFamily::j2().realize();
                 bool ok = true;
                 for (std::size_t k = 1; k <= 11; ++k) ok = ok && is_log_concave(antichain_poly_k(q, k));
                 return flag(ok);
               },
               nums({"1"})});
  v.push_back({"J3_k17_coefficients", [] {
                 const IntPoly f = antichain_poly_k(MinusculeFamily::j3().realize(), 17);
                 auto out = pick(f, {0, 1, 2, 12, 13, 14, 15, 25, 26, 27});
                 out.insert(out.begin(), mpz_class(f.degree()));
                 return out;
               },
               nums({"27", "1", "459", "51867", "20564929719672", "26728302338920", "26743721449352",
                     "20605116728504", "55461", "483", "1"})});
  v.push_back({"J3_not_palindromic_k9_k17", [] {
                 const Poset q = MinusculeFamily::j3().realize();
                 return flag(!is_palindromic(antichain_poly_k(q, 9)) && !is_palindromic(antichain_poly_k(q, 17)));
               },
               nums({"1"})});
  v.push_back({"J3_log_concave_k1_to_17", [] {
                 const Poset q = MinusculeFamily::j3().realize();
                 bool ok = true;
                 for (std::size_t k = 1; k <= 17; ++k) ok = ok && is_log_concave(antichain_poly_k(q, k));
                 return flag(ok);
               },
               nums({"1"})});
  v.push_back({"example_a", [] { return coeffs(n_of("C(3) x C(3)", 3)); },
               nums({"1", "27", "162", "350", "310", "114", "15", "1"})});
  v.push_back({"example_b", [] { return coeffs(n_of("C(3) x C(5)", 3)); },
               nums({"1", "45", "495", "2155", "4360", "4360", "2141", "505", "49", "1"})});
  v.push_back({"example_c", [] { return coeffs(n_of("C(3) x C(4)", 4)); },
               nums({"1", "48", "576", "2800", "6525", "7848", "4957", "1644", "274", "22", "1"})});
  v.push_back({"example_d", [] { return pick(n_of("C(3) x C(6)", 4), {0, 1, 2, 5, 6, 7, 10, 11, 12}); },
               nums({"1", "72", "1368", "103200", "134806", "102912", "1510", "86", "1"})});
  v.push_back({"example_e", [] { return pick(n_of("C(3) x C(7)", 5), {0, 1, 2, 7, 8, 13, 14, 15}); },
               nums({"1", "105", "3045", "4080285", "4078275", "3692", "137", "1"})});
  v.push_back({"example_f", [] { return coeffs(n_of("H(6)", 3)); },
               nums({"1", "63", "840", "4088", "8736", "8736", "4060", "862", "69", "1"})});
  v.push_back({"example_g", [] { return pick(n_of("H(5)", 9), {0, 1, 2, 7, 8, 13, 14, 15}); },
               nums({"1", "135", "4455", "7209048", "7206012", "4745", "145", "1"})});
  v.push_back({"examples_log_concave_not_palindromic", [] {
                 const std::vector<IntPoly> fs = {n_of("C(3) x C(3)", 3), n_of("C(3) x C(5)", 3),
                                                  n_of("C(3) x C(4)", 4), n_of("C(3) x C(6)", 4),
                                                  n_of("C(3) x C(7)", 5), n_of("H(6)", 3), n_of("H(5)", 9)};
                 bool ok = true;
                 for (const auto& f : fs) ok = ok && is_log_concave(f) && !is_palindromic(f);
                 return flag(ok);
               },
               nums({"1"})});
  v.push_back({"grid333_not_real_rooted", [] { return flag(is_real_rooted(n_of("C(3) x C(3)", 3))); },
               nums({"0"})});
  const std::vector<std::vector<mpz_class>> table = {
      nums({"1", "2"}),
      nums({"1", "8", "2"}),
      nums({"1", "18", "33", "6"}),
      nums({"1", "32", "150", "144", "12"}),
      nums({"1", "50", "440", "1040", "580", "40"}),
      nums({"1", "72", "1020", "4480", "6300", "2400", "100"}),
      nums({"1", "98", "2037", "14350", "37730", "35700", "9625", "350"}),
      nums({"1", "128", "3668", "37856", "160020", "282240", "191100", "39200", "980"}),
      nums({"1", "162", "6120", "87024", "539532", "1528632", "1933344", "987840", "156996", "3528"}),
      nums({"1", "200", "9630", "180480", "1542660", "6408864", "13028400", "12418560", "4948020", "635040",
            "10584"}),
  };
  for (std::size_t n = 1; n <= 10; ++n)
    v.push_back({"gamma_2_n_np1_n" + std::to_string(n), [n] { return family_2_n_np1(n).second.gamma; },
                 table[n - 1]});
  v.push_back({"evaluation_2_n_np1_catalan", [] {
                 bool ok = true;
                 for (unsigned long n = 1; n <= 8; ++n)
                   ok = ok && family_2_n_np1(n).first.evaluate(mpz_class(1)) ==
                                  (2 * n + 1) * catalan(n) * catalan(n + 1);
                 return flag(ok);
               },
               nums({"1"})});
  v.push_back({"tableau_f_2_1_1", [] { return coeffs(f_direct(2, 1, 1)); }, nums({"1", "3", "1"})});
  v.push_back({"tableau_matches_2_n_np1", [] {
                 bool ok = true;
                 for (std::size_t n = 1; n <= 5; ++n) ok = ok && f_recursive(n, n + 1) == family_2_n_np1(n).first;
                 return flag(ok);
               },
               nums({"1"})});
  v.push_back({"monic_grid23_k2_k3", [] {
                 const Poset q = product(chain(2), chain(3));
                 return std::vector<mpz_class>{flag(is_monic(antichain_poly_k(q, 2)))[0],
                                               flag(is_monic(antichain_poly_k(q, 3)))[0]};
               },
               nums({"1", "0"})});
  v.push_back({"monic_J2_k5_k11", [] {
                 const Poset q = MinusculeFamily::j2().realize();
                 return std::vector<mpz_class>{flag(is_monic(antichain_poly_k(q, 5)))[0],
                                               flag(is_monic(antichain_poly_k(q, 11)))[0]};
               },
               nums({"1", "1"})});
  v.push_back({"J3_width", [] {
                 return std::vector<mpz_class>{mpz_class(max_antichain_size(MinusculeFamily::j3().realize()))};
               },
               nums({"3"})});
  v.push_back({"minuscule_peck", [] {
                 bool ok = true;
                 for (const char* e : {"C(3) x C(4)", "H(4)", "K(3)", "J(J(C(2) x C(3)))", "J(J(J(C(2) x C(3))))"})
                   ok = ok && is_peck(build(e));
                 return flag(ok);
               },
               nums({"1"})});
  return v;
}

std::vector<CheckOutcome> run_check_suite(const std::optional<std::string>& corrupt) {
  auto vectors = builtin_check_vectors();
  if (corrupt) {
    bool found = false;
    for (auto& v : vectors)
      if (v.name == *corrupt) {
        v.expected.back() += 1;
        found = true;
      }
    if (!found) throw InvalidArgument("no check vector named '" + *corrupt + "'");
  }
  std::vector<CheckOutcome> out;
  for (const auto& v : vectors) {
    CheckOutcome o;
    o.name = v.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto got = v.compute();
      o.passed = got == v.expected;
      if (!o.passed) {
        for (std::size_t i = 0; i < std::max(got.size(), v.expected.size()); ++i) {
          const std::string g = i < got.size() ? got[i].get_str() : "-";
          const std::string e = i < v.expected.size() ? v.expected[i].get_str() : "-";
          if (g != e) {
            o.detail = "entry " + std::to_string(i) + ": got " + g + ", expected " + e;
            break;
          }
        }
      }
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = e.what();
    }
    o.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace antichain
