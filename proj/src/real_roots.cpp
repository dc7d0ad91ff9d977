#include "antichain/real_roots.hpp"

#include <algorithm>
#include <numeric>

#include "antichain/errors.hpp"

namespace antichain {

namespace {

// Rational polynomial used only for Euclidean steps.
using QCoeffs = std::vector<mpq_class>;

QCoeffs to_rational(const IntPoly& f) {
  QCoeffs out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.emplace_back(c);
  return out;
}

void trim(QCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Clears denominators and content; the scale factor is positive, so signs
// are preserved.
IntPoly to_primitive_same_sign(const QCoeffs& c) {
  mpz_class den = 1;
  for (const auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  z.reserve(c.size());
  mpz_class content = 0;
  for (const auto& v : c) {
    mpz_class scaled = v.get_num() * (den / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    z.push_back(std::move(scaled));
  }
  if (content > 1)
    for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return IntPoly(std::move(z));
}

IntPoly positive_leading(IntPoly f) {
  if (!f.is_zero() && f.leading() < 0) f *= mpz_class(-1);
  return f;
}

// a mod b over Q.
QCoeffs rational_remainder(QCoeffs a, const QCoeffs& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const std::size_t shift = a.size() - 1 - db;
    const mpq_class q = a.back() / b.back();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= q * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

IntPoly remainder(const IntPoly& a, const IntPoly& b) {
  QCoeffs r = rational_remainder(to_rational(a), to_rational(b));
  trim(r);
  return to_primitive_same_sign(r);
}

// Exact quotient over Q, normalized to a primitive polynomial.
IntPoly quotient(const IntPoly& a, const IntPoly& b) {
  QCoeffs rem = to_rational(a);
  const QCoeffs den = to_rational(b);
  const std::size_t db = den.size() - 1;
  QCoeffs q(rem.size() - db, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = rem[i + db] / den.back();
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q[i] * den[j];
  }
  trim(q);
  return to_primitive_same_sign(q);
}

mpq_class cauchy_bound(const IntPoly& f) {
  const auto c = f.coeffs();
  mpq_class best = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    mpq_class r(abs(c[i]), abs(c.back()));
    r.canonicalize();
    if (r > best) best = r;
  }
  return best + 1;
}

// Distinct real roots of a square-free polynomial, ascending.
std::vector<RootInterval> isolate_square_free(const IntPoly& h) {
  std::vector<RootInterval> out;
  if (h.degree() < 1) return out;
  const SturmSequence sturm(h);
  const mpq_class bound = cauchy_bound(h);

  struct Work {
    mpq_class lo, hi;
    int count;
  };
  std::vector<Work> stack;
  stack.push_back({-bound, bound, sturm.count_roots(-bound, bound)});
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    if (w.count == 0) continue;
    if (w.count == 1) {
      out.push_back({w.lo, w.hi, 1});
      continue;
    }
    mpq_class mid = (w.lo + w.hi) / 2;
    if (sign_at(h, mid) != 0) {
      stack.push_back({w.lo, mid, sturm.count_roots(w.lo, mid)});
      stack.push_back({mid, w.hi, sturm.count_roots(mid, w.hi)});
      continue;
    }
    out.push_back({mid, mid, 1});
    mpq_class delta = (w.hi - w.lo) / 4;
    while (true) {
      const mpq_class a = mid - delta, b = mid + delta;
      if (sign_at(h, a) != 0 && sign_at(h, b) != 0 && sturm.count_roots(a, b) == 1) {
        stack.push_back({w.lo, a, sturm.count_roots(w.lo, a)});
        stack.push_back({b, w.hi, sturm.count_roots(b, w.hi)});
        break;
      }
      delta /= 2;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  return out;
}

bool root_of(const IntPoly& factor, const RootInterval& r) {
  if (factor.degree() < 1) return false;
  if (r.exact()) return sign_at(factor, r.lo) == 0;
  return sign_at(factor, r.lo) != sign_at(factor, r.hi);
}

int multiplicity_in(const std::vector<std::pair<IntPoly, int>>& parts, const RootInterval& r) {
  for (const auto& [factor, mult] : parts)
    if (root_of(factor, r)) return mult;
  return 0;
}

void bisect_once(RootInterval& r, const IntPoly& h) {
  const mpq_class mid = (r.lo + r.hi) / 2;
  const int s = sign_at(h, mid);
  if (s == 0) {
    r.lo = r.hi = mid;
  } else if (s == sign_at(h, r.lo)) {
    r.lo = mid;
  } else {
    r.hi = mid;
  }
}

// Distinct roots of f * g with their multiplicities in each factor.
struct JointRoot {
  RootInterval where;
  int in_f = 0, in_g = 0;
};

std::vector<JointRoot> joint_roots(const IntPoly& f, const IntPoly& g) {
  const auto pf = square_free_decomposition(f);
  const auto pg = square_free_decomposition(g);
  const IntPoly h = square_free_part(f * g);
  std::vector<JointRoot> out;
  for (const auto& r : isolate_square_free(h))
    out.push_back({r, multiplicity_in(pf, r), multiplicity_in(pg, r)});
  return out;
}

// Root indices (into joint roots) in decreasing order of value, repeated by
// multiplicity. Larger index means larger value.
std::vector<std::size_t> descending(const std::vector<JointRoot>& roots, bool of_f) {
  std::vector<std::size_t> out;
  for (std::size_t i = roots.size(); i-- > 0;) {
    const int m = of_f ? roots[i].in_f : roots[i].in_g;
    for (int t = 0; t < m; ++t) out.push_back(i);
  }
  return out;
}

IntPoly combine(const IntPoly& f, const IntPoly& g, const mpq_class& c1, const mpq_class& c2) {
  // scaled by den(c1) * den(c2) > 0
  const mpz_class a = c1.get_num() * c2.get_den();
  const mpz_class b = c2.get_num() * c1.get_den();
  IntPoly out = f * a;
  out.add_shifted(g, 0, b);
  return out;
}

}  // namespace

int sign_at(const IntPoly& f, const mpq_class& x) {
  const auto c = f.coeffs();
  if (c.empty()) return 0;
  // sum_i c_i p^i q^(n-i), which has the sign of f(p/q) since q > 0
  const mpz_class& p = x.get_num();
  const mpz_class& q = x.get_den();
  mpz_class acc = 0, qpow = 1;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * p + c[i] * qpow;
    qpow *= q;
  }
  return sgn(acc);
}

IntPoly primitive_part(const IntPoly& f) {
  return positive_leading(to_primitive_same_sign(to_rational(f)));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a), y = primitive_part(b);
  while (!y.is_zero()) {
    IntPoly r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, int>> out;
  if (f.degree() < 1) return out;
  // layers[k] is the square-free product of the roots of multiplicity > k
  std::vector<IntPoly> layers;
  IntPoly current = primitive_part(f);
  while (current.degree() >= 1) {
    IntPoly reduced = gcd(current, current.derivative());
    layers.push_back(quotient(current, reduced));
    current = std::move(reduced);
  }
  for (std::size_t k = 0; k < layers.size(); ++k) {
    IntPoly part = k + 1 < layers.size() ? quotient(layers[k], layers[k + 1]) : layers[k];
    if (part.degree() >= 1) out.emplace_back(primitive_part(part), static_cast<int>(k + 1));
  }
  return out;
}

IntPoly square_free_part(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (f.degree() < 1) return IntPoly{1};
  const IntPoly fp = primitive_part(f);
  return primitive_part(quotient(fp, gcd(fp, fp.derivative())));
}

SturmSequence::SturmSequence(const IntPoly& square_free) {
  chain_.push_back(square_free);
  chain_.push_back(to_primitive_same_sign(to_rational(square_free.derivative())));
  while (chain_.back().degree() >= 1) {
    IntPoly r = remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    r *= mpz_class(-1);
    chain_.push_back(std::move(r));
  }
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int SturmSequence::variations(const mpq_class& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(sign_at(p, x));
  return count_changes(s);
}

int SturmSequence::variations_at_neg_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) {
    if (p.is_zero()) continue;
    const int lead = sgn(p.leading());
    s.push_back(p.degree() % 2 == 0 ? lead : -lead);
  }
  return count_changes(s);
}

int SturmSequence::variations_at_pos_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_)
    if (!p.is_zero()) s.push_back(sgn(p.leading()));
  return count_changes(s);
}

int SturmSequence::count_roots(const mpq_class& lo, const mpq_class& hi) const {
  return variations(lo) - variations(hi);
}

int SturmSequence::count_real_roots() const {
  return variations_at_neg_infinity() - variations_at_pos_infinity();
}

RootIsolation isolate_roots(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  RootIsolation iso;
  if (f.degree() < 1) return iso;
  const auto parts = square_free_decomposition(f);
  for (auto r : isolate_square_free(square_free_part(f))) {
    r.multiplicity = multiplicity_in(parts, r);
    iso.real_root_count += r.multiplicity;
    iso.roots.push_back(std::move(r));
  }
  return iso;
}

void refine_roots(RootIsolation& iso, const IntPoly& f, const mpq_class& width) {
  if (iso.roots.empty()) return;
  const IntPoly h = square_free_part(f);
  for (auto& r : iso.roots)
    while (!r.exact() && r.hi - r.lo > width) bisect_once(r, h);
}

std::size_t count_distinct_real_roots(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (f.degree() < 1) return 0;
  return static_cast<std::size_t>(SturmSequence(square_free_part(f)).count_real_roots());
}

bool is_real_rooted(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (f.degree() < 1) return true;
  const IntPoly h = square_free_part(f);
  return SturmSequence(h).count_real_roots() == h.degree();
}

InterlaceResult interlaces(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial();
  const int df = f.degree(), dg = g.degree();
  if (!(df <= dg && dg <= df + 1))
    return {InterlaceVerdict::DegreeMismatch,
            "deg f = " + std::to_string(df) + ", deg g = " + std::to_string(dg)};
  if (!is_real_rooted(f)) return {InterlaceVerdict::DoesNotInterlace, "f is not real-rooted"};
  if (!is_real_rooted(g)) return {InterlaceVerdict::DoesNotInterlace, "g is not real-rooted"};
  if (df == 0) return {InterlaceVerdict::Interlaces, {}};

  const auto roots = joint_roots(f, g);
  const auto x = descending(roots, true);
  const auto xi = descending(roots, false);
  // value order equals index order in the joint root list
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (xi[i] < x[i])
      return {InterlaceVerdict::DoesNotInterlace,
              "root " + std::to_string(i + 1) + " of g lies below root " + std::to_string(i + 1) + " of f"};
    if (i + 1 < xi.size() && x[i] < xi[i + 1])
      return {InterlaceVerdict::DoesNotInterlace,
              "root " + std::to_string(i + 1) + " of f lies below root " + std::to_string(i + 2) + " of g"};
  }
  return {InterlaceVerdict::Interlaces, {}};
}

std::vector<Combination> default_combinations() {
  std::vector<Combination> out;
  const long pairs[][2] = {{1, 0},  {0, 1},  {1, 1},   {1, -1}, {2, 1},  {1, 2},   {-3, 1},
                           {1, -5}, {7, 3},  {3, -7},  {1, 10}, {10, -1}, {-1, 100}, {100, 1}};
  for (const auto& p : pairs) out.emplace_back(mpq_class(p[0]), mpq_class(p[1]));
  out.emplace_back(mpq_class(1, 3), mpq_class(-2, 7));
  out.emplace_back(mpq_class(-5, 2), mpq_class(9, 4));
  return out;
}

bool obreschkoff_combination_test(const IntPoly& f, const IntPoly& g,
                                  const std::vector<Combination>& combinations) {
  for (const auto& [c1, c2] : combinations) {
    const IntPoly h = combine(f, g, c1, c2);
    if (h.is_zero()) continue;
    if (!is_real_rooted(h)) return false;
  }
  return true;
}

namespace {

// Tries to build h of degree `degree` with f <= h and g <= h from exact root
// comparisons. Returns the zero polynomial when the slots are infeasible or a
// forced root is irrational.
IntPoly candidate_interleaver(const std::vector<JointRoot>& roots, const std::vector<std::size_t>& x,
                              const std::vector<std::size_t>& y, int degree) {
  std::vector<mpq_class> chosen;
  for (int j = 0; j < degree; ++j) {
    const std::size_t J = static_cast<std::size_t>(j);
    // lower bound: x_j, y_j; upper bound: x_{j-1}, y_{j-1} (0-based)
    bool has_lower = false, has_upper = false;
    std::size_t lower = 0, upper = 0;
    auto raise = [&](std::size_t idx) {
      if (!has_lower || idx > lower) lower = idx;
      has_lower = true;
    };
    auto cap = [&](std::size_t idx) {
      if (!has_upper || idx < upper) upper = idx;
      has_upper = true;
    };
    if (J < x.size()) raise(x[J]);
    if (J < y.size()) raise(y[J]);
    if (J >= 1 && J - 1 < x.size()) cap(x[J - 1]);
    if (J >= 1 && J - 1 < y.size()) cap(y[J - 1]);
    if (has_lower && has_upper) {
      if (lower > upper) return {};
      if (lower == upper) {
        const auto& r = roots[lower].where;
        if (!r.exact()) return {};
        chosen.push_back(r.lo);
      } else {
        chosen.push_back(roots[lower].where.hi);
      }
    } else if (has_lower) {
      chosen.push_back(roots[lower].where.hi + 1);
    } else if (has_upper) {
      chosen.push_back(roots[upper].where.lo - 1);
    } else {
      chosen.push_back(0);
    }
  }
  IntPoly h{1};
  for (const auto& r : chosen) {
    std::vector<mpz_class> lin = {-r.get_num(), r.get_den()};
    h = h * IntPoly(std::move(lin));
  }
  return h;
}

}  // namespace

InterleaverResult common_interleaver_check(const IntPoly& f, const IntPoly& g, unsigned grid) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial();
  if (f.leading() <= 0 || g.leading() <= 0)
    throw InvalidArgument("common interleaver check needs positive leading coefficients");
  if (!is_real_rooted(f) || !is_real_rooted(g))
    throw InvalidArgument("common interleaver check needs real-rooted inputs");

  InterleaverResult out;
  if (interlaces(f, g).holds()) {
    out.kind = InterleaverKind::Certified;
    out.interleaver = g;
    return out;
  }
  if (interlaces(g, f).holds()) {
    out.kind = InterleaverKind::Certified;
    out.interleaver = f;
    return out;
  }

  const int df = f.degree(), dg = g.degree();
  if (df >= 1 || dg >= 1) {
    const auto roots = joint_roots(f, g);
    const auto x = descending(roots, true);
    const auto y = descending(roots, false);
    const int top = std::max(df, dg);
    for (int degree : {top + 1, top}) {
      if (degree < std::max(df, dg) || degree > std::min(df, dg) + 1) continue;
      IntPoly h = candidate_interleaver(roots, x, y, degree);
      if (h.is_zero()) continue;
      if (interlaces(f, h).holds() && interlaces(g, h).holds()) {
        out.kind = InterleaverKind::Certified;
        out.interleaver = std::move(h);
        return out;
      }
    }
  }

  for (unsigned a = 0; a <= grid; ++a)
    for (unsigned b = 0; b <= grid; ++b) {
      if ((a == 0 && b == 0) || std::gcd(a, b) != 1) continue;
      IntPoly h = f * mpz_class(a);
      h.add_shifted(g, 0, mpz_class(b));
      if (!is_real_rooted(h)) {
        out.kind = InterleaverKind::Refuted;
        out.c1 = mpq_class(a, a + b);
        out.c2 = mpq_class(b, a + b);
        out.c1.canonicalize();
        out.c2.canonicalize();
        out.diagnostic = "non-real-rooted combination " + h.pretty();
        return out;
      }
    }
  out.diagnostic = "no certificate and no refuting combination on the grid";
  return out;
}

}  // namespace antichain
