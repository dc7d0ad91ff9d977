// antichain: command-line front end for the antichain polynomial library.
//
// Exit codes: 0 success, 1 a conjecture instance was refuted (or a check
// failed), 2 usage or parse error, 3 resource guard.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "antichain/check_suite.hpp"
#include "antichain/corpus.hpp"
#include "antichain/errors.hpp"
#include "antichain/ideals.hpp"
#include "antichain/minuscule.hpp"
#include "antichain/poly_props.hpp"
#include "antichain/poset_expr.hpp"
#include "antichain/poset_io.hpp"
#include "antichain/real_roots.hpp"
#include "antichain/report.hpp"
#include "antichain/scan.hpp"
#include "antichain/sperner.hpp"
#include "antichain/tableaux.hpp"
#include "antichain/transfer.hpp"

namespace {

using namespace antichain;
using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Common {
  std::size_t k = 1;
  bool json = false;
  bool csv = false;
  std::size_t max_ideals = kDefaultMaxIdeals;
};

// "hasse:path" reads a Hasse file, anything else is an expression.
ScanSubject load_subject(const std::string& spec, std::size_t max_ideals, std::size_t n = 0) {
  if (spec.rfind("hasse:", 0) == 0) return {spec, read_hasse_file(spec.substr(6)), std::nullopt, n};
  return subject_from_expression(spec, n, max_ideals);
}

std::string semicolon_list(const IntPoly& f) {
  std::string out;
  for (const auto& c : f.coeffs()) out += (out.empty() ? "" : ";") + c.get_str();
  return out;
}

void print_report_text(const PropertyReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "degree          " << r.degree << "\n"
            << "palindromic     " << yn(r.palindromic) << "\n"
            << "monic           " << yn(r.monic) << "\n"
            << "unimodal        " << yn(r.unimodal) << "\n"
            << "log-concave     " << yn(r.log_concave) << "\n"
            << "gamma           " << (r.gamma ? join(to_strings(*r.gamma), ", ") : "-") << "\n"
            << "gamma-positive  " << yn(r.gamma_positive) << "\n"
            << "real-rooted     " << yn(r.real_rooted) << "\n"
            << "value at 1      " << r.evaluation_at_1.get_str() << "\n";
}

int cmd_poly(const std::string& expr, const Common& c) {
  const ScanSubject s = load_subject(expr, c.max_ideals);
  const IntPoly f = antichain_poly_k(s.poset, c.k, c.max_ideals);
  const PropertyReport r = PropertyReport::of(f);
  if (c.json) {
    json j{{"expression", expr}, {"k", c.k}, {"report", r.to_json()}};
    std::cout << j.dump(2) << "\n";
  } else if (c.csv) {
    std::cout << "expression,k," << PropertyReport::csv_header() << "\n"
              << '"' << expr << "\"," << c.k << "," << r.csv_row() << "\n";
  } else {
    std::cout << "N = " << f.pretty() << "\n";
    print_report_text(r);
  }
  return kOk;
}

int cmd_mpoly(const std::string& expr, const Common& c) {
  const ScanSubject s = load_subject(expr, c.max_ideals);
  const IntPoly direct = ideal_poly_direct(c.k == 1 ? s.poset : product(chain(c.k), s.poset), c.max_ideals);
  std::optional<IntPoly> formula;
  if (s.family) formula = M_product_formula(s.poset, c.k);
  const mpz_class n_at_1 = antichain_poly_k(s.poset, c.k, c.max_ideals).evaluate(mpz_class(1));
  const bool agree = !formula || *formula == direct;
  if (c.json) {
    json j{{"expression", expr},
           {"k", c.k},
           {"direct", PropertyReport::of(direct).to_json()},
           {"product_formula", formula ? PropertyReport::of(*formula).to_json() : json(nullptr)},
           {"agree", agree},
           {"N_at_1", n_at_1.get_str()}};
    std::cout << j.dump(2) << "\n";
  } else if (c.csv) {
    std::cout << "expression,k,path," << PropertyReport::csv_header() << "\n";
    std::cout << '"' << expr << "\"," << c.k << ",direct," << PropertyReport::of(direct).csv_row() << "\n";
    if (formula)
      std::cout << '"' << expr << "\"," << c.k << ",product_formula," << PropertyReport::of(*formula).csv_row() << "\n";
  } else {
    std::cout << "M (direct)          = " << direct.pretty() << "\n";
    if (formula) std::cout << "M (product formula) = " << formula->pretty() << "\n";
    std::cout << "paths agree         " << (formula ? (agree ? "yes" : "NO") : "n/a (not minuscule)") << "\n"
              << "M(1) = " << direct.evaluate(mpz_class(1)).get_str() << ", N(1) = " << n_at_1.get_str() << "\n";
  }
  return agree ? kOk : kRefuted;
}

struct ScanArgs {
  std::string family;
  std::string n_range = "1:1";
  std::string k_spec = "1";
  std::string checks = "B,C,4.2,4.3,4.4";
  std::string corpus;
  std::size_t graded = 0;
  bool defaults = false;
  unsigned threads = 1;
  unsigned grid = 16;
  double wall_clock = 600;
};

std::vector<ScanSubject> read_corpus(const std::string& path, std::size_t max_ideals) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open corpus file " + path);
  std::vector<ScanSubject> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(load_subject(line.substr(b, e - b + 1), max_ideals));
  }
  return out;
}

int cmd_scan(const ScanArgs& a, const Common& c) {
  ScanOptions opt;
  opt.threads = a.threads;
  opt.max_ideals = c.max_ideals;
  opt.grid = a.grid;
  opt.wall_clock = std::chrono::milliseconds(static_cast<long long>(a.wall_clock * 1000));

  std::vector<ScanJob> jobs;
  if (a.defaults) {
    jobs = default_scan_jobs(c.max_ideals);
  } else {
    ScanJob job;
    job.k = KRange::parse(a.k_spec);
    std::stringstream ss(a.checks);
    for (std::string name; std::getline(ss, name, ',');) {
      const auto check = parse_check(name);
      if (!check) throw ParseError("unknown check '" + name + "'", 0);
      job.checks.push_back(*check);
    }
    if (!a.family.empty()) {
      const KRange ns = KRange::parse(a.n_range);
      if (ns.relative) throw ParseError("--n takes a:b", 0);
      for (std::size_t n = ns.lo; n <= ns.hi; ++n)
        job.subjects.push_back(load_subject(substitute_n(a.family, n), c.max_ideals, n));
    }
    if (!a.corpus.empty())
      for (auto& s : read_corpus(a.corpus, c.max_ideals)) job.subjects.push_back(std::move(s));
    if (a.graded) {
      const auto posets = connected_graded_posets(a.graded);
      for (std::size_t i = 0; i < posets.size(); ++i)
        job.subjects.push_back({"graded#" + std::to_string(i), posets[i], std::nullopt, 0});
    }
    if (job.subjects.empty()) throw InvalidArgument("scan needs --family, --corpus, --graded or --defaults");
    jobs.push_back(std::move(job));
  }

  const ScanResult result = run_scans(jobs, opt);
  if (c.json) {
    std::cout << result.to_json().dump(2) << "\n";
  } else if (c.csv) {
    std::cout << result.to_csv();
  } else {
    for (const auto& r : result.rows) {
      std::cout << r.subject << "  n=" << r.n << " k=" << r.k << "  N = " << r.report.polynomial.pretty();
      if (r.report.gamma) std::cout << "  gamma = (" << join(to_strings(*r.report.gamma), ", ") << ")";
      std::cout << "\n   ";
      for (Check ch : kAllChecks)
        if (r.verdict(ch) != Verdict::NotApplicable) std::cout << " " << check_name(ch) << ":" << verdict_name(r.verdict(ch));
      if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
      std::cout << "\n";
    }
    std::cout << "summary:";
    for (Check ch : kAllChecks)
      std::cout << "  " << check_name(ch) << " " << result.count(ch, Verdict::Verified) << "V/"
                << result.count(ch, Verdict::Refuted) << "R/" << result.count(ch, Verdict::Unknown) << "U";
    std::cout << "\n";
  }
  if (result.skipped) {
    std::cerr << "wall clock exhausted: " << result.skipped << " instances not run\n";
    return kResource;
  }
  return result.any_refuted() ? kRefuted : kOk;
}

int cmd_check(const std::optional<std::string>& corrupt) {
  const auto outcomes = run_check_suite(corrupt);
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    std::cout << (o.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(40) << o.name << std::right
              << std::setw(8) << o.elapsed.count() << " ms";
    if (!o.passed) std::cout << "  " << o.detail;
    std::cout << "\n";
    failed += !o.passed;
  }
  std::cout << outcomes.size() - failed << "/" << outcomes.size() << " passed\n";
  return failed ? kRefuted : kOk;
}

int cmd_interlace(const std::string& fs, const std::string& gs, unsigned grid, const Common& c) {
  const IntPoly f = parse_coefficients(fs), g = parse_coefficients(gs);
  const InterlaceResult fg = interlaces(f, g);
  const InterlaceResult gf = interlaces(g, f);
  auto name = [](InterlaceVerdict v) {
    switch (v) {
      case InterlaceVerdict::Interlaces: return "Interlaces";
      case InterlaceVerdict::DoesNotInterlace: return "DoesNotInterlace";
      case InterlaceVerdict::DegreeMismatch: return "DegreeMismatch";
    }
    return "?";
  };
  const bool battery = obreschkoff_combination_test(f, g, default_combinations());
  std::optional<InterleaverResult> common;
  std::string common_note;
  try {
    common = common_interleaver_check(f, g, grid);
  } catch (const InvalidArgument& e) {
    common_note = e.what();
  }
  auto kind = [](InterleaverKind k) {
    switch (k) {
      case InterleaverKind::Certified: return "Certified";
      case InterleaverKind::Refuted: return "Refuted";
      case InterleaverKind::Unknown: return "Unknown";
    }
    return "?";
  };
  if (c.json) {
    json j{{"f", f.csv()},
           {"g", g.csv()},
           {"f_interlaces_g", name(fg.verdict)},
           {"g_interlaces_f", name(gf.verdict)},
           {"combination_battery", battery}};
    if (common) {
      j["common_interleaver"] = {{"kind", kind(common->kind)}, {"detail", common->diagnostic}};
      if (common->kind == InterleaverKind::Certified) j["common_interleaver"]["h"] = common->interleaver.csv();
      if (common->kind == InterleaverKind::Refuted)
        j["common_interleaver"]["at"] = {common->c1.get_str(), common->c2.get_str()};
    } else {
      j["common_interleaver"] = {{"kind", "NotApplicable"}, {"detail", common_note}};
    }
    std::cout << j.dump(2) << "\n";
  } else if (c.csv) {
    std::cout << "f_interlaces_g,g_interlaces_f,combination_battery,common_interleaver\n"
              << name(fg.verdict) << "," << name(gf.verdict) << "," << (battery ? "true" : "false") << ","
              << (common ? kind(common->kind) : "NotApplicable") << "\n";
  } else {
    std::cout << "f interlaces g       " << name(fg.verdict) << (fg.diagnostic.empty() ? "" : "  (" + fg.diagnostic + ")")
              << "\n"
              << "g interlaces f       " << name(gf.verdict) << (gf.diagnostic.empty() ? "" : "  (" + gf.diagnostic + ")")
              << "\n"
              << "combination battery  " << (battery ? "all real-rooted" : "a combination has complex roots") << "\n";
    if (common) {
      std::cout << "common interleaver   " << kind(common->kind);
      if (common->kind == InterleaverKind::Certified) std::cout << "  h = " << common->interleaver.pretty();
      if (common->kind == InterleaverKind::Refuted)
        std::cout << "  at c1 = " << common->c1.get_str() << ", c2 = " << common->c2.get_str();
      std::cout << "\n";
    } else {
      std::cout << "common interleaver   not applicable: " << common_note << "\n";
    }
  }
  return kOk;
}

int cmd_peck(const std::string& expr, const Common& c) {
  const ScanSubject s = load_subject(expr, c.max_ideals);
  const Poset p = c.k == 1 ? s.poset : product(chain(c.k), s.poset);
  const auto levels = p.rank_levels();
  const ChainProfile prof = chain_profile(p);
  const bool sp = is_sperner(p), ssp = is_strongly_sperner(p), sym = is_rank_symmetric(p),
             uni = is_rank_unimodal(p);
  std::vector<std::string> lv, ak;
  for (auto l : levels) lv.push_back(std::to_string(l));
  for (std::size_t k = 1; k <= levels.size(); ++k) ak.push_back(std::to_string(prof.antichains(k)));
  if (c.json) {
    json j{{"expression", expr},    {"k", c.k},          {"size", p.size()},       {"rank_levels", levels},
           {"width", prof.antichains(1)}, {"max_k_antichains", ak}, {"sperner", sp}, {"strongly_sperner", ssp},
           {"rank_symmetric", sym}, {"rank_unimodal", uni}, {"peck", ssp && sym && uni}};
    std::cout << j.dump(2) << "\n";
  } else if (c.csv) {
    auto tf = [](bool b) { return b ? "true" : "false"; };
    std::cout << "expression,k,size,rank_levels,max_k_antichains,sperner,strongly_sperner,rank_symmetric,"
                 "rank_unimodal,peck\n"
              << '"' << expr << "\"," << c.k << "," << p.size() << "," << join(lv, ";") << "," << join(ak, ";")
              << "," << tf(sp) << "," << tf(ssp) << "," << tf(sym) << "," << tf(uni) << "," << tf(ssp && sym && uni)
              << "\n";
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "size              " << p.size() << "\n"
              << "rank levels       " << join(lv, " ") << "\n"
              << "max k antichains  " << join(ak, " ") << "\n"
              << "Sperner           " << yn(sp) << "\n"
              << "strongly Sperner  " << yn(ssp) << "\n"
              << "rank symmetric    " << yn(sym) << "\n"
              << "rank unimodal     " << yn(uni) << "\n"
              << "Peck              " << yn(ssp && sym && uni) << "\n";
  }
  return kOk;
}

int cmd_tableaux(std::size_t n, std::size_t m, std::size_t k, const Common& c) {
  const IntPoly direct = f_direct(n, m, k);
  const IntPoly recursive = TableauRecursion(n, k).at(n, m, k);
  if (c.json) {
    json j{{"n", n},
           {"m", m},
           {"k", k},
           {"direct", direct.csv()},
           {"recursive", recursive.csv()},
           {"agree", direct == recursive}};
    std::cout << j.dump(2) << "\n";
  } else if (c.csv) {
    std::cout << "n,m,k,direct,recursive,agree\n"
              << n << "," << m << "," << k << "," << semicolon_list(direct) << ","
              << semicolon_list(recursive) << "," << (direct == recursive ? "true" : "false")
              << "\n";
  } else {
    std::cout << "f_{" << n << "," << m << "}^" << k << " = " << direct.pretty() << "\n"
              << "recursion agrees: " << (direct == recursive ? "yes" : "NO") << "\n";
  }
  return direct == recursive ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antichain generating polynomials of [k] x Q and their properties"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool with_k) {
    if (with_k) sub->add_option("--k", common.k, "chain length k >= 1")->check(CLI::PositiveNumber);
    sub->add_flag("--json", common.json, "JSON output");
    sub->add_flag("--csv", common.csv, "CSV output");
    sub->add_option("--max-ideals", common.max_ideals, "ideal enumeration cap");
  };

  std::string expr;
  auto* poly = app.add_subcommand("poly", "N of [k] x Q with a property report");
  poly->add_option("expr", expr, "poset expression or hasse:FILE")->required();
  add_common(poly, true);

  auto* mpoly = app.add_subcommand("mpoly", "ideal polynomial M of [k] x Q, directly and by the product formula");
  mpoly->add_option("expr", expr)->required();
  add_common(mpoly, true);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "conjecture scans over families or corpora");
  scan->add_option("--family", scan_args.family, "expression template in n, e.g. \"C(2) x C(n)\"");
  scan->add_option("--n", scan_args.n_range, "range a:b for n");
  scan->add_option("--k", scan_args.k_spec, "k as a, a:b, n+c or n-c");
  scan->add_option("--check", scan_args.checks, "comma-separated subset of B,C,4.2,4.3,4.4");
  scan->add_option("--corpus", scan_args.corpus, "file of expressions or hasse:FILE lines");
  scan->add_option("--graded", scan_args.graded, "add all connected graded posets up to this size");
  scan->add_flag("--defaults", scan_args.defaults, "run the built-in default ranges");
  scan->add_option("--threads", scan_args.threads)->check(CLI::PositiveNumber);
  scan->add_option("--grid", scan_args.grid, "interleaver refutation grid density")->check(CLI::PositiveNumber);
  scan->add_option("--wall-clock", scan_args.wall_clock, "seconds before remaining instances are skipped");
  scan->add_flag("--json", common.json);
  scan->add_flag("--csv", common.csv);
  scan->add_option("--max-ideals", common.max_ideals);

  std::string corrupt;
  auto* check = app.add_subcommand("check", "built-in suite of reference values");
  check->add_option("--corrupt", corrupt, "bump one expected value to exercise the failure path");

  std::string f_text, g_text;
  unsigned grid = 16;
  auto* interlace = app.add_subcommand("interlace", "interlacing of two coefficient lists (constant term first)");
  interlace->add_option("f", f_text)->required();
  interlace->add_option("g", g_text)->required();
  interlace->add_option("--grid", grid)->check(CLI::PositiveNumber);
  interlace->add_flag("--json", common.json);
  interlace->add_flag("--csv", common.csv);

  auto* peck = app.add_subcommand("peck", "Sperner, strongly Sperner and Peck properties of [k] x Q");
  peck->add_option("expr", expr)->required();
  add_common(peck, true);

  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  dot->add_option("expr", expr)->required();
  dot->add_option("--max-ideals", common.max_ideals);

  std::size_t tn = 0, tm = 0, tk = 0;
  auto* tab = app.add_subcommand("tableaux", "weighted two-row fillings f_{n,m}^k");
  tab->add_option("n", tn)->required();
  tab->add_option("m", tm)->required();
  tab->add_option("k", tk)->required();
  tab->add_flag("--json", common.json);
  tab->add_flag("--csv", common.csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*poly) return cmd_poly(expr, common);
    if (*mpoly) return cmd_mpoly(expr, common);
    if (*scan) return cmd_scan(scan_args, common);
    if (*check) return cmd_check(corrupt.empty() ? std::nullopt : std::optional<std::string>(corrupt));
    if (*interlace) return cmd_interlace(f_text, g_text, grid, common);
    if (*peck) return cmd_peck(expr, common);
    if (*dot) {
      std::cout << to_dot(load_subject(expr, common.max_ideals).poset);
      return kOk;
    }
    if (*tab) return cmd_tableaux(tn, tm, tk, common);
  } catch (const ExplosionError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kResource;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
