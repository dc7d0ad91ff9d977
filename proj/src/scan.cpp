#include "antichain/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <exception>
#include <map>
#include <thread>

#include "antichain/corpus.hpp"
#include "antichain/poly_props.hpp"
#include "antichain/poset_expr.hpp"
#include "antichain/real_roots.hpp"
#include "antichain/sperner.hpp"
#include "antichain/transfer.hpp"

namespace antichain {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "VERIFIED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Unknown: return "UNKNOWN";
    case Verdict::NotApplicable: return "NA";
  }
  return "NA";
}

std::string_view check_name(Check c) {
  switch (c) {
    case Check::B: return "B";
    case Check::C: return "C";
    case Check::Interleavers: return "4.2";
    case Check::RealRooted: return "4.3";
    case Check::Family2nnp1: return "4.4";
  }
  return "?";
}

std::optional<Check> parse_check(std::string_view name) {
  for (Check c : kAllChecks)
    if (check_name(c) == name) return c;
  return std::nullopt;
}

namespace {

bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// One affine term in n: "3", "n", "2n", "2*n".
long long eval_term(std::string_view t, long long n, std::string_view whole) {
  const auto bad = [&] { return ParseError("bad affine term '" + std::string(whole) + "'", 0); };
  if (t.empty()) throw bad();
  const auto pos = t.find('n');
  if (pos == std::string_view::npos) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) throw bad();
    return v;
  }
  if (pos + 1 != t.size()) throw bad();
  std::string_view coef = t.substr(0, pos);
  if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
  if (coef.empty()) return n;
  return eval_term(coef, n, whole) * n;
}

long long eval_affine(std::string_view e, long long n) {
  long long total = 0;
  int sign = 1;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= e.size(); ++i) {
    if (i == e.size() || ((e[i] == '+' || e[i] == '-') && i > begin)) {
      total += sign * eval_term(e.substr(begin, i - begin), n, e);
      if (i < e.size()) sign = e[i] == '+' ? 1 : -1;
      begin = i + 1;
    }
  }
  return total;
}

}  // namespace

std::string substitute_n(std::string_view tmpl, std::size_t n) {
  // Maximal runs over [0-9n+-*] that contain a standalone n are evaluated.
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    const auto in_run = [&](std::size_t j) {
      const char c = tmpl[j];
      return std::isdigit(static_cast<unsigned char>(c)) || c == 'n' || c == '+' || c == '-' || c == '*';
    };
    if (!in_run(i) || (i > 0 && is_word(tmpl[i - 1]) && tmpl[i] == 'n')) {
      out += tmpl[i++];
      continue;
    }
    std::size_t j = i;
    while (j < tmpl.size() && in_run(j)) ++j;
    if (j < tmpl.size() && is_word(tmpl[j])) {  // e.g. the n of a longer word
      out.append(tmpl.substr(i, j - i));
      i = j;
      continue;
    }
    const std::string_view run = tmpl.substr(i, j - i);
    if (run.find('n') == std::string_view::npos) {
      out.append(run);
    } else {
      const long long v = eval_affine(run, static_cast<long long>(n));
      if (v < 0) throw InvalidArgument("template '" + std::string(tmpl) + "' is negative at n = " + std::to_string(n));
      out += std::to_string(v);
    }
    i = j;
  }
  return out;
}

ScanSubject subject_from_expression(std::string_view text, std::size_t n, std::size_t max_ideals) {
  const PosetExpr expr = parse_poset_expr(text);
  return {std::string(text), build(expr, max_ideals), classify_minuscule(expr), n};
}

namespace {

std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("bad k range '" + std::string(whole) + "'", 0);
  return v;
}

}  // namespace

KRange KRange::parse(std::string_view text) {
  KRange r;
  if (!text.empty() && text[0] == 'n') {
    r.relative = true;
    if (text.size() == 1) return r;
    if (text[1] != '+' && text[1] != '-') throw ParseError("bad k range '" + std::string(text) + "'", 1);
    const long v = static_cast<long>(parse_size(text.substr(2), text));
    r.offset = text[1] == '+' ? v : -v;
    return r;
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    r.lo = r.hi = parse_size(text, text);
  } else {
    r.lo = parse_size(text.substr(0, colon), text);
    r.hi = parse_size(text.substr(colon + 1), text);
  }
  if (r.lo == 0 || r.lo > r.hi) throw ParseError("k range must satisfy 1 <= a <= b", 0);
  return r;
}

std::vector<std::size_t> KRange::values(std::size_t n) const {
  if (relative) {
    const long k = static_cast<long>(n) + offset;
    if (k < 1) throw InvalidArgument("k = n" + std::to_string(offset) + " is below 1");
    return {static_cast<std::size_t>(k)};
  }
  std::vector<std::size_t> out;
  for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

namespace {

// The other side when the family is a grid with a side of length 2.
std::optional<std::size_t> grid_with_side_two(const std::optional<MinusculeFamily>& f) {
  if (!f || f->kind != MinusculeFamily::Kind::Grid) return std::nullopt;
  if (f->m == 2) return f->n;
  if (f->n == 2) return f->m;
  return std::nullopt;
}

// Whether {k, a, b} equals {2, t, t+1} as multisets for some t >= 1.
bool is_2_t_t1(std::size_t k, std::size_t a, std::size_t b) {
  std::array<std::size_t, 3> v{k, a, b};
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i] != 2) continue;
    std::array<std::size_t, 2> rest{};
    for (std::size_t j = 0, r = 0; j < 3; ++j)
      if (j != i) rest[r++] = v[j];
    if (rest[1] == rest[0] + 1) return true;
  }
  return false;
}

Verdict worse(Verdict a, Verdict b) {
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::Refuted: return 3;
      case Verdict::Unknown: return 2;
      case Verdict::Verified: return 1;
      case Verdict::NotApplicable: return 0;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

Verdict interleaver_verdict(std::size_t side, std::size_t k, const ScanOptions& opt, std::string& detail) {
  const Poset q = product(chain(2), chain(side));
  const auto polys = per_ideal_polys(q, k, opt.max_ideals);
  std::map<std::pair<std::size_t, std::size_t>, IntPoly> by_code;
  for (const auto& [ideal, poly] : polys) by_code[grid2_ideal_code(ideal, side)] = poly;

  Verdict overall = Verdict::Verified;
  std::string marks;
  for (std::size_t s = 0; s < side; ++s) {
    IntPoly f, g;
    for (std::size_t i = 0; i <= s; ++i)
      for (std::size_t l = i; l <= side; ++l) f += by_code.at({i, l});
    for (std::size_t l = s + 1; l <= side; ++l) g += by_code.at({s + 1, l});
    Verdict v;
    if (!is_real_rooted(f) || !is_real_rooted(g)) {
      v = Verdict::Refuted;
    } else {
      switch (common_interleaver_check(f, g, opt.grid).kind) {
        case InterleaverKind::Certified: v = Verdict::Verified; break;
        case InterleaverKind::Refuted: v = Verdict::Refuted; break;
        default: v = Verdict::Unknown; break;
      }
    }
    marks += verdict_name(v)[0];
    overall = worse(overall, v);
  }
  detail += "4.2 by s: " + marks;
  return overall;
}

ScanRow run_instance(const ScanSubject& subj, std::size_t k, const std::vector<Check>& checks,
                     const ScanOptions& opt) {
  ScanRow row;
  row.subject = subj.name;
  row.n = subj.n;
  row.k = k;
  const IntPoly f = antichain_poly_k(subj.poset, k, opt.max_ideals);
  row.report = PropertyReport::of(f);
  const PropertyReport& r = row.report;
  auto set = [&](Check c, Verdict v) { row.verdicts[static_cast<std::size_t>(c)] = v; };

  for (Check c : checks) {
    switch (c) {
      case Check::B:
        if (subj.family && r.palindromic) set(c, r.gamma_positive ? Verdict::Verified : Verdict::Refuted);
        break;
      case Check::C: {
        const Poset q = k == 1 ? subj.poset : product(chain(k), subj.poset);
        if (q.is_graded() && q.is_connected() && is_peck(q))
          set(c, r.log_concave ? Verdict::Verified : Verdict::Refuted);
        break;
      }
      case Check::Interleavers:
        if (const auto side = grid_with_side_two(subj.family)) set(c, interleaver_verdict(*side, k, opt, row.detail));
        break;
      case Check::RealRooted:
        if (grid_with_side_two(subj.family)) set(c, r.real_rooted ? Verdict::Verified : Verdict::Refuted);
        break;
      case Check::Family2nnp1:
        if (subj.family && subj.family->kind == MinusculeFamily::Kind::Grid &&
            is_2_t_t1(k, subj.family->m, subj.family->n))
          set(c, r.palindromic && r.real_rooted ? Verdict::Verified : Verdict::Refuted);
        break;
    }
  }
  return row;
}

}  // namespace

ScanResult run_scans(const std::vector<ScanJob>& jobs, const ScanOptions& opt) {
  struct Instance {
    const ScanJob* job;
    const ScanSubject* subject;
    std::size_t k;
  };
  std::vector<Instance> instances;
  for (const auto& job : jobs)
    for (const auto& subj : job.subjects)
      for (std::size_t k : job.k.values(subj.n)) instances.push_back({&job, &subj, k});

  const auto deadline = std::chrono::steady_clock::now() + opt.wall_clock;
  std::vector<std::optional<ScanRow>> rows(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      if (stop || std::chrono::steady_clock::now() > deadline) continue;
      try {
        rows[i] = run_instance(*instances[i].subject, instances[i].k, instances[i].job->checks, opt);
      } catch (...) {
        errors[i] = std::current_exception();
        stop = true;
      }
    }
  };
  if (opt.threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < opt.threads; ++t) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  ScanResult result;
  for (auto& r : rows) {
    if (r)
      result.rows.push_back(std::move(*r));
    else
      ++result.skipped;
  }
  return result;
}

ScanResult run_scan(const ScanJob& job, const ScanOptions& opt) { return run_scans({job}, opt); }

std::size_t ScanResult::count(Check c, Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const ScanRow& r) { return r.verdict(c) == v; }));
}

bool ScanResult::any_refuted() const {
  for (Check c : kAllChecks)
    if (count(c, Verdict::Refuted)) return true;
  return false;
}

nlohmann::json ScanRow::to_json() const {
  nlohmann::json j;
  j["subject"] = subject;
  j["n"] = n;
  j["k"] = k;
  j["report"] = report.to_json();
  nlohmann::json v = nlohmann::json::object();
  for (Check c : kAllChecks) v[std::string(check_name(c))] = std::string(verdict_name(verdict(c)));
  j["verdicts"] = v;
  j["detail"] = detail;
  return j;
}

std::string ScanRow::csv_header() {
  return "subject,n,k," + PropertyReport::csv_header() + ",B,C,4.2,4.3,4.4,detail";
}

std::string ScanRow::csv_row() const {
  std::string quoted = "\"";
  for (char ch : subject) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  quoted += '"';
  std::string out = quoted + "," + std::to_string(n) + "," + std::to_string(k) + "," + report.csv_row();
  for (Check c : kAllChecks) out += "," + std::string(verdict_name(verdict(c)));
  return out + "," + detail;
}

nlohmann::json ScanResult::to_json() const {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) j["rows"].push_back(r.to_json());
  nlohmann::json summary = nlohmann::json::object();
  for (Check c : kAllChecks) {
    nlohmann::json s;
    for (Verdict v : {Verdict::Verified, Verdict::Refuted, Verdict::Unknown, Verdict::NotApplicable})
      s[std::string(verdict_name(v))] = count(c, v);
    summary[std::string(check_name(c))] = s;
  }
  j["summary"] = summary;
  j["skipped"] = skipped;
  return j;
}

std::string ScanResult::to_csv() const {
  std::string out = ScanRow::csv_header() + "\n";
  for (const auto& r : rows) out += r.csv_row() + "\n";
  return out;
}

std::vector<ScanJob> default_scan_jobs(std::size_t max_ideals) {
  std::vector<ScanJob> jobs;
  auto single = [&](const std::string& expr, std::size_t k_hi, std::vector<Check> checks, std::size_t n = 0) {
    ScanJob job;
    job.subjects.push_back(subject_from_expression(expr, n, max_ideals));
    job.k.lo = 1;
    job.k.hi = k_hi;
    job.checks = std::move(checks);
    jobs.push_back(std::move(job));
  };

  std::vector<std::pair<std::string, std::size_t>> minuscule;  // with the B range of k
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = m; m + n <= 9; ++n)
      minuscule.emplace_back("C(" + std::to_string(m) + ") x C(" + std::to_string(n) + ")", m + n);
  for (std::size_t n = 1; n <= 5; ++n) minuscule.emplace_back("H(" + std::to_string(n) + ")", 2 * n - 1);
  for (std::size_t n = 1; n <= 3; ++n) minuscule.emplace_back("K(" + std::to_string(n) + ")", 2 * n + 1);
  minuscule.emplace_back("J(J(C(2) x C(3)))", 11);
  minuscule.emplace_back("J(J(J(C(2) x C(3))))", 17);
  for (const auto& [expr, k_hi] : minuscule) {
    single(expr, k_hi, {Check::B});
    const std::size_t size = build(expr, max_ideals).size();
    if (size <= 30) single(expr, 30 / size, {Check::C});
  }

  ScanJob corpus;
  const auto posets = connected_graded_posets(8);
  for (std::size_t i = 0; i < posets.size(); ++i)
    corpus.subjects.push_back({"graded#" + std::to_string(i), posets[i], std::nullopt, 0});
  corpus.checks = {Check::C};
  jobs.push_back(std::move(corpus));

  for (std::size_t n = 1; n <= 4; ++n)
    single("C(2) x C(" + std::to_string(n) + ")", 6, {Check::Interleavers}, n);
  for (std::size_t n = 1; n <= 5; ++n)
    single("C(2) x C(" + std::to_string(n) + ")", 7, {Check::RealRooted}, n);
  ScanJob fam;
  for (std::size_t n = 1; n <= 10; ++n)
    fam.subjects.push_back(subject_from_expression("C(2) x C(" + std::to_string(n) + ")", n, max_ideals));
  fam.k = KRange::parse("n+1");
  fam.checks = {Check::Family2nnp1};
  jobs.push_back(std::move(fam));
  return jobs;
}

}  // namespace antichain
