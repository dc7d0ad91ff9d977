#include "antichain/minuscule.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "antichain/errors.hpp"

namespace antichain {

std::string MinusculeFamily::name() const {
  switch (kind) {
    case Kind::Grid: return "[" + std::to_string(m) + "]x[" + std::to_string(n) + "]";
    case Kind::H: return "H" + std::to_string(n);
    case Kind::K: return "K" + std::to_string(n);
    case Kind::J2: return "J2([2]x[3])";
    case Kind::J3: return "J3([2]x[3])";
  }
  return {};
}

std::size_t MinusculeFamily::expected_size() const {
  switch (kind) {
    case Kind::Grid: return m * n;
    case Kind::H: return n * (n + 1) / 2;
    case Kind::K: return 2 * n + 2;
    case Kind::J2: return 16;
    case Kind::J3: return 27;
  }
  return 0;
}

Poset MinusculeFamily::realize() const {
  switch (kind) {
    case Kind::Grid: return product(chain(m), chain(n));
    case Kind::H: return symmetric_square_quotient(n);
    case Kind::K: return k_poset(n);
    case Kind::J2: return build("J(J(C(2) x C(3)))");
    case Kind::J3: return build("J(J(J(C(2) x C(3))))");
  }
  throw InvalidArgument("unknown minuscule family");
}

namespace {

bool is_2x3(const PosetExpr& e) {
  if (e.kind != PosetExpr::Kind::Product) return false;
  const auto& l = e.children[0];
  const auto& r = e.children[1];
  if (l.kind != PosetExpr::Kind::Chain || r.kind != PosetExpr::Kind::Chain) return false;
  return (l.n == 2 && r.n == 3) || (l.n == 3 && r.n == 2);
}

}  // namespace

std::optional<MinusculeFamily> classify_minuscule(const PosetExpr& e) {
  using K = PosetExpr::Kind;
  switch (e.kind) {
    case K::Chain: return MinusculeFamily::grid(1, e.n);
    case K::H: return MinusculeFamily::h(e.n);
    case K::K: return MinusculeFamily::k(e.n);
    case K::Product:
      if (e.children[0].kind == K::Chain && e.children[1].kind == K::Chain)
        return MinusculeFamily::grid(e.children[0].n, e.children[1].n);
      return std::nullopt;
    case K::J: {
      const PosetExpr* inner = &e;
      int depth = 0;
      while (inner->kind == K::J) {
        inner = &inner->children[0];
        ++depth;
      }
      if (!is_2x3(*inner)) return std::nullopt;
      if (depth == 2) return MinusculeFamily::j2();
      if (depth == 3) return MinusculeFamily::j3();
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class multinomial(unsigned long n, unsigned long a, unsigned long b, unsigned long c) {
  if (a + b + c != n) throw InvalidArgument("multinomial parts must sum to n");
  return binomial(n, a) * binomial(n - a, b);
}

mpz_class catalan(unsigned long n) { return binomial(2 * n, n) / (n + 1); }

IntPoly closed_form_N(const MinusculeFamily& f) {
  using K = MinusculeFamily::Kind;
  std::vector<mpz_class> c;
  switch (f.kind) {
    case K::Grid:
      for (unsigned long i = 0; i <= std::min(f.m, f.n); ++i) c.push_back(binomial(f.m, i) * binomial(f.n, i));
      return IntPoly(std::move(c));
    case K::H:
      for (unsigned long i = 0; 2 * i <= f.n + 1; ++i) c.push_back(binomial(f.n + 1, 2 * i));
      return IntPoly(std::move(c));
    case K::K: return IntPoly{1, static_cast<long>(2 * f.n + 2), 1};
    case K::J3: return IntPoly{1, 27, 27, 1};
    case K::J2: break;
  }
  throw InvalidArgument("no closed form for " + f.name());
}

IntPoly narayana_B(std::size_t n) {
  if (n == 0) throw InvalidArgument("Cat(B_n, x) needs n >= 1");
  IntPoly out;
  for (std::size_t i = 0; 2 * i <= n; ++i)
    out.add_shifted(IntPoly::one_plus_x_pow(n - 2 * i), i, multinomial(n, i, i, n - 2 * i));
  return out;
}

IntPoly narayana_D(std::size_t m) {
  if (m < 4 || m % 2 != 0) throw InvalidArgument("Cat(D_m, x) is implemented for even m >= 4");
  const unsigned long q = m - 1;
  IntPoly out;
  for (std::size_t i = 0; 2 * i <= m; ++i) {
    const mpz_class scaled = multinomial(m, i, i, m - 2 * i) * (q - i);
    if (!mpz_divisible_ui_p(scaled.get_mpz_t(), q))
      throw InvalidArgument("non-integral gamma coefficient in Cat(D_" + std::to_string(m) + ")");
    out.add_shifted(IntPoly::one_plus_x_pow(m - 2 * i), i, scaled / q);
  }
  return out;
}

IntPoly M_product_formula(const Poset& p, std::size_t k) {
  // balance[e] > 0 means (1 - x^e) is left in the numerator that many times.
  std::map<std::size_t, long> balance;
  for (int r : p.ranks()) {
    ++balance[static_cast<std::size_t>(r) + k];
    --balance[static_cast<std::size_t>(r)];
  }
  IntPoly num{1}, den{1};
  for (const auto& [e, mult] : balance) {
    const IntPoly factor = IntPoly{1} - IntPoly::monomial(e);
    for (long t = 0; t < std::abs(mult); ++t) {
      if (mult > 0)
        num = num * factor;
      else
        den = den * factor;
    }
  }
  return num.divide_exact(den);
}

bool monic_classification(const MinusculeFamily& f, std::size_t k) {
  using K = MinusculeFamily::Kind;
  if (k == 0) return false;
  switch (f.kind) {
    case K::Grid: {
      const std::size_t lo = std::min(f.m, f.n), hi = std::max(f.m, f.n);
      const std::size_t first = hi - lo + 1;
      return k >= first && k <= hi + lo - 1 && (k - first) % 2 == 0;
    }
    case K::H: {
      const std::size_t residue = f.n % 2 == 1 ? 1 : 3;
      return k <= 2 * f.n - 1 && k % 4 == residue;
    }
    case K::K: return k == 1 || k == 2 * f.n + 1;
    case K::J2: return k == 5 || k == 11;
    case K::J3: return k == 1 || k == 9 || k == 17;
  }
  return false;
}

bool J2IdealCode::valid() const {
  auto in_tail = [](int v, int lo, int hi) { return v == 0 || (v >= lo && v <= hi); };
  if (a < 0 || a > 4) return false;
  if (!in_tail(b, 3, 6) || !in_tail(c, 3, 6) || !in_tail(d, 5, 8)) return false;
  return a >= std::min(b, 4) && b >= c && c >= std::min(6, d) && d >= 0;
}

std::vector<J2IdealCode> enumerate_J2_ideal_codes() {
  std::vector<J2IdealCode> out;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c)
        for (int d = 0; d <= 8; ++d) {
          const J2IdealCode code{a, b, c, d};
          if (code.valid()) out.push_back(code);
        }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.a + x.b + x.c + x.d < y.a + y.b + y.c + y.d;
  });
  return out;
}

int j2_max_count(const J2IdealCode& x) {
  if (!x.valid()) throw InvalidArgument("invalid J2 ideal code");
  return (x.a > std::min(x.b, 4)) + (x.b > x.c) + (x.c > std::min(6, x.d)) + (x.d > 0);
}

int j2_relative_max_count(const J2IdealCode& x, const J2IdealCode& y) {
  if (!x.valid() || !y.valid() || !y.below_or_equal(x)) throw InvalidArgument("invalid J2 code pair");
  return ((x.a - y.a) * (x.a - std::min(x.b, 4)) != 0) + ((x.b - y.b) * (x.b - x.c) != 0) +
         ((x.c - y.c) * (x.c - std::min(6, x.d)) != 0) + ((x.d - y.d) * x.d != 0);
}

std::pair<TransferMatrix, StateVector> j2_transfer_from_codes() {
  const auto codes = enumerate_J2_ideal_codes();
  std::vector<std::vector<TransferEntry>> rows(codes.size());
  StateVector v;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j)
      if (codes[j].below_or_equal(codes[i]))
        rows[i].push_back({j, static_cast<unsigned>(j2_relative_max_count(codes[i], codes[j]))});
    v.entries.push_back(IntPoly::monomial(static_cast<std::size_t>(j2_max_count(codes[i]))));
  }
  return {TransferMatrix(std::move(rows)), std::move(v)};
}

std::pair<std::size_t, std::size_t> grid2_ideal_code(const Subset& ideal, std::size_t n) {
  std::size_t lower = 0, upper = 0;
  ideal.for_each([&](std::size_t e) { (e < n ? lower : upper) += 1; });
  return {upper, lower};
}

}  // namespace antichain
