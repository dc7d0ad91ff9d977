#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "antichain/check_suite.hpp"
#include "antichain/corpus.hpp"
#include "antichain/errors.hpp"
#include "antichain/poly_props.hpp"
#include "antichain/poset_expr.hpp"
#include "antichain/report.hpp"
#include "antichain/scan.hpp"
#include "antichain/transfer.hpp"

#include "oracles.hpp"

namespace antichain {
namespace {

TEST(Template, AffineTerms) {
  EXPECT_EQ(substitute_n("C(n)", 4), "C(4)");
  EXPECT_EQ(substitute_n("C(2) x C(n) x C(n+1)", 3), "C(2) x C(3) x C(4)");
  EXPECT_EQ(substitute_n("C(2n+1) x K(n)", 2), "C(5) x K(2)");
  EXPECT_EQ(substitute_n("H(3*n-2)", 3), "H(7)");
  EXPECT_EQ(substitute_n("J(J(C(2) x C(3)))", 9), "J(J(C(2) x C(3)))");
  EXPECT_THROW(substitute_n("C(n-5)", 2), InvalidArgument);
  EXPECT_THROW(substitute_n("C(n+)", 2), ParseError);
}

TEST(Template, KRange) {
  EXPECT_EQ(KRange::parse("3").values(9), (std::vector<std::size_t>{3}));
  EXPECT_EQ(KRange::parse("2:4").values(9), (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_EQ(KRange::parse("n").values(5), (std::vector<std::size_t>{5}));
  EXPECT_EQ(KRange::parse("n+1").values(5), (std::vector<std::size_t>{6}));
  EXPECT_EQ(KRange::parse("n-2").values(5), (std::vector<std::size_t>{3}));
  EXPECT_THROW(KRange::parse("n-2").values(2), InvalidArgument);
  EXPECT_THROW(KRange::parse("0"), ParseError);
  EXPECT_THROW(KRange::parse("4:2"), ParseError);
  EXPECT_THROW(KRange::parse("x"), ParseError);
}

TEST(Checks, NamesRoundTrip) {
  for (Check c : kAllChecks) EXPECT_EQ(parse_check(check_name(c)), c);
  EXPECT_FALSE(parse_check("4.5").has_value());
  EXPECT_EQ(verdict_name(Verdict::Verified), "VERIFIED");
  EXPECT_EQ(verdict_name(Verdict::NotApplicable), "NA");
}

IntPoly from_gamma(const std::vector<mpz_class>& g, int d) {
  IntPoly f;
  for (std::size_t i = 0; i < g.size(); ++i) {
    IntPoly t = IntPoly::monomial(i, g[i]);
    for (int e = 0; e < d - 2 * static_cast<int>(i); ++e) t = t * IntPoly{1, 1};
    f += t;
  }
  return f;
}

void expect_consistent(const PropertyReport& r) {
  const auto c = r.polynomial.coeffs();
  ASSERT_EQ(r.degree, r.polynomial.degree());
  EXPECT_EQ(r.gamma.has_value(), r.palindromic);
  if (r.gamma_positive) ASSERT_TRUE(r.gamma.has_value());
  if (r.gamma) {
    EXPECT_EQ(from_gamma(*r.gamma, r.degree), r.polynomial);
    EXPECT_EQ(r.gamma_positive, std::all_of(r.gamma->begin(), r.gamma->end(), [](auto& g) { return g > 0; }));
  }
  const bool positive = std::all_of(c.begin(), c.end(), [](auto& a) { return a > 0; });
  if (positive && r.log_concave) EXPECT_TRUE(r.unimodal);
  if (positive && r.real_rooted) EXPECT_TRUE(r.log_concave);
  // nonnegative, not strict: (1+x)^2 has gamma (1, 0)
  if (positive && r.real_rooted && r.palindromic)
    EXPECT_TRUE(std::all_of(r.gamma->begin(), r.gamma->end(), [](auto& g) { return g >= 0; }));
  EXPECT_EQ(r.monic, c.back() == 1);
  EXPECT_EQ(r.evaluation_at_1, std::accumulate(c.begin(), c.end(), mpz_class(0)));
}

TEST(Report, InvariantsOverCorpusProducts) {
  std::size_t n = 0;
  for (const Poset& p : connected_graded_posets(6))
    for (std::size_t k = 1; k <= 3; ++k) {
      expect_consistent(PropertyReport::of(antichain_poly_k(p, k)));
      ++n;
    }
  EXPECT_GT(n, 100u);
}

TEST(Report, HandPicked) {
  for (const IntPoly& f : {IntPoly{1, 24, 120, 200, 120, 24, 1}, IntPoly{1, 27, 162, 350, 310, 114, 15, 1},
                           IntPoly{1, 2}, IntPoly{3}, IntPoly{1, 0, 1}, IntPoly{-1, 3, -1}, IntPoly{1, 1, 1}, IntPoly{1, 2, 1}})
    expect_consistent(PropertyReport::of(f));
  EXPECT_THROW(PropertyReport::of(IntPoly{}), ZeroPolynomial);

  const auto r = PropertyReport::of(IntPoly{1, 4, 1});
  EXPECT_EQ(*r.gamma, (std::vector<mpz_class>{1, 2}));
  EXPECT_TRUE(r.real_rooted);
  EXPECT_FALSE(PropertyReport::of(IntPoly{1, 2, 1}).gamma_positive);
  const auto cube = PropertyReport::of(IntPoly{1, 27, 162, 350, 310, 114, 15, 1});
  EXPECT_FALSE(cube.real_rooted);
  EXPECT_FALSE(cube.palindromic);
  EXPECT_TRUE(cube.log_concave);
}

TEST(Report, JsonAndCsv) {
  const auto r = PropertyReport::of(IntPoly{1, 4, 1});
  const auto j = r.to_json();
  EXPECT_EQ(j["polynomial"], nlohmann::json({"1", "4", "1"}));
  EXPECT_EQ(j["gamma"], nlohmann::json({"1", "2"}));
  EXPECT_EQ(j["evaluation_at_1"], "6");
  EXPECT_TRUE(PropertyReport::of(IntPoly{1, 2}).to_json()["gamma"].is_null());

  const auto cols = [](const std::string& s) { return std::count(s.begin(), s.end(), ',') + 1; };
  EXPECT_EQ(cols(PropertyReport::csv_header()), 10);
  EXPECT_EQ(cols(r.csv_row()), 10);
  EXPECT_EQ(r.csv_row(), "1;4;1,2,true,true,true,true,1;2,true,true,6");
  EXPECT_EQ(cols(ScanRow::csv_header()), cols(PropertyReport::csv_header()) + 9);
}

ScanJob grid_job(std::size_t n_max, std::string_view k, std::vector<Check> checks) {
  ScanJob job;
  for (std::size_t n = 1; n <= n_max; ++n) job.subjects.push_back(subject_from_expression(substitute_n("C(2) x C(n)", n), n));
  job.k = KRange::parse(k);
  job.checks = std::move(checks);
  return job;
}

TEST(Scan, RowsInJobOrderAndThreadIndependent) {
  const ScanJob job = grid_job(4, "1:4", {Check::B, Check::Interleavers, Check::RealRooted});
  ScanOptions one, many;
  many.threads = 8;
  const ScanResult a = run_scan(job, one), b = run_scan(job, many);
  ASSERT_EQ(a.rows.size(), 16u);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_EQ(a.to_csv(), b.to_csv());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].n, i / 4 + 1);
    EXPECT_EQ(a.rows[i].k, i % 4 + 1);
  }
}

TEST(Scan, VerdictsMatchDirectComputation) {
  const ScanResult r = run_scan(grid_job(5, "1:7", {Check::RealRooted, Check::C, Check::Family2nnp1}));
  ASSERT_EQ(r.rows.size(), 35u);
  for (const auto& row : r.rows) {
    const IntPoly f = antichain_poly_k(product(chain(2), chain(row.n)), row.k);
    EXPECT_EQ(row.report.polynomial, f);
    EXPECT_EQ(row.verdict(Check::RealRooted), Verdict::Verified);
    std::vector<std::size_t> dims{2, row.n, row.k};
    std::sort(dims.begin(), dims.end());
    bool family = false;
    do family = family || (dims[0] == 2 && dims[2] == dims[1] + 1);
    while (std::next_permutation(dims.begin(), dims.end()));
    EXPECT_EQ(row.verdict(Check::Family2nnp1), family ? Verdict::Verified : Verdict::NotApplicable)
        << row.subject << " k=" << row.k;
    expect_consistent(row.report);
  }
  EXPECT_FALSE(r.any_refuted());
  EXPECT_EQ(r.count(Check::RealRooted, Verdict::Verified), 35u);
}

TEST(Scan, NonGridSubjectsAreNotApplicable) {
  ScanJob job;
  job.subjects.push_back(subject_from_expression("H(3)"));
  job.subjects.push_back({"vee", Poset::from_relations(3, {{0, 1}, {0, 2}}), std::nullopt, 0});
  job.k = KRange::parse("1:2");
  job.checks = {kAllChecks.begin(), kAllChecks.end()};
  const ScanResult r = run_scan(job);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.verdict(Check::Interleavers), Verdict::NotApplicable);
    EXPECT_EQ(row.verdict(Check::RealRooted), Verdict::NotApplicable);
    EXPECT_EQ(row.verdict(Check::Family2nnp1), Verdict::NotApplicable);
  }
  EXPECT_NE(r.rows[0].verdict(Check::B), Verdict::NotApplicable);
  EXPECT_EQ(r.rows[2].verdict(Check::B), Verdict::NotApplicable);
}

TEST(Scan, ZeroWallClockSkipsEverything) {
  ScanOptions o;
  o.wall_clock = std::chrono::milliseconds(0);
  const ScanResult r = run_scan(grid_job(3, "1:3", {Check::RealRooted}), o);
  EXPECT_EQ(r.rows.size() + r.skipped, 9u);
  EXPECT_GT(r.skipped, 0u);
  EXPECT_EQ(r.to_json()["skipped"], r.skipped);
}

TEST(Scan, ExplosionPropagates) {
  ScanOptions o;
  o.max_ideals = 5;
  o.threads = 4;
  EXPECT_THROW(run_scan(grid_job(4, "1:2", {Check::RealRooted}), o), ExplosionError);
}

TEST(Scan, DefaultJobsCoverTheStatedRanges) {
  const auto jobs = default_scan_jobs();
  std::map<Check, std::size_t> instances;
  for (const auto& job : jobs)
    for (const auto& s : job.subjects)
      for (Check c : job.checks) instances[c] += job.k.values(s.n).size();
  EXPECT_EQ(instances[Check::RealRooted], 35u);
  EXPECT_EQ(instances[Check::Family2nnp1], 10u);
  EXPECT_EQ(instances[Check::Interleavers], 24u);
  EXPECT_GT(instances[Check::C], 500u);
}

TEST(CheckSuite, AllPassAndCorruptionIsolated) {
  const auto clean = run_check_suite();
  ASSERT_GT(clean.size(), 40u);
  for (const auto& o : clean) EXPECT_TRUE(o.passed) << o.name << ": " << o.detail;

  std::set<std::string> names;
  for (const auto& v : builtin_check_vectors()) EXPECT_TRUE(names.insert(v.name).second) << v.name;

  for (const std::string target : {"grid23_N", "J3_k17_coefficients", "gamma_2_n_np1_n7"}) {
    const auto bad = run_check_suite(target);
    std::vector<std::string> failed;
    for (const auto& o : bad)
      if (!o.passed) failed.push_back(o.name);
    EXPECT_EQ(failed, std::vector<std::string>{target});
  }
  EXPECT_THROW(run_check_suite(std::string("no_such_vector")), InvalidArgument);
}

// Independent corpus oracle: every naturally labeled strict order on n
// points, filtered by the same gradedness and connectivity rules, reduced to
// isomorphism classes by minimizing the relation bit string over all
// relabelings.
using Rel = std::vector<std::vector<bool>>;

bool graded_and_connected(const Rel& lt, std::size_t n) {
  std::vector<int> rank(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    int below = 0;
    std::size_t covers = 0;
    for (std::size_t u = 0; u < v; ++u) {
      if (!lt[u][v]) continue;
      bool cover = true;
      for (std::size_t w = u + 1; w < v && cover; ++w) cover = !(lt[u][w] && lt[w][v]);
      if (!cover) continue;
      if (covers++ && rank[u] != below) return false;
      below = rank[u];
    }
    rank[v] = covers ? below + 1 : 1;
  }
  int top = -1;
  for (std::size_t v = 0; v < n; ++v) {
    bool maximal = true;
    for (std::size_t w = v + 1; w < n; ++w) maximal = maximal && !lt[v][w];
    if (!maximal) continue;
    if (top >= 0 && rank[v] != top) return false;
    top = rank[v];
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w)
      if (!seen[w] && (lt[v][w] || lt[w][v])) seen[w] = true, stack.push_back(w);
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<bool> canonical(const Rel& lt, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    code.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) code.push_back(lt[perm[a]][perm[b]]);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::set<std::vector<bool>> brute_force_classes(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::set<std::vector<bool>> classes;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Rel lt(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) lt[pairs[i].first][pairs[i].second] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = a + 1; b < n && transitive; ++b)
        for (std::size_t c = b + 1; c < n && transitive; ++c)
          if (lt[a][b] && lt[b][c] && !lt[a][c]) transitive = false;
    if (transitive && graded_and_connected(lt, n)) classes.insert(canonical(lt, n));
  }
  return classes;
}

TEST(Corpus, MatchesBruteForceUpToSix) {
  const auto corpus = connected_graded_posets(6);
  std::map<std::size_t, std::set<std::vector<bool>>> ours;
  for (const Poset& p : corpus) {
    Rel lt(p.size(), std::vector<bool>(p.size(), false));
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) lt[a][b] = p.less(a, b);
    EXPECT_TRUE(ours[p.size()].insert(canonical(lt, p.size())).second) << "duplicate class";
  }
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(ours[n], brute_force_classes(n)) << "size " << n;
}

}  // namespace
}  // namespace antichain
