#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "antichain/errors.hpp"
#include "antichain/minuscule.hpp"
#include "antichain/poset.hpp"
#include "antichain/report.hpp"

namespace antichain {

// An open conjecture is never failed by Unknown, only by Refuted.
enum class Verdict { Verified, Refuted, Unknown, NotApplicable };
std::string_view verdict_name(Verdict v);

// B: palindromic N_{[k]xP} is gamma-positive (P minuscule).
// C: N_Q log-concave for connected Peck Q = [k] x P.
// Interleavers: the sums over ideals of [2] x [n] split at s have a common
//   interleaver, for every s < n.
// RealRooted: N_{[2]x[n]x[k]} is real-rooted.
// Family2nnp1: N_{[2]x[n]x[n+1]} is palindromic and real-rooted.
enum class Check { B, C, Interleavers, RealRooted, Family2nnp1 };
inline constexpr std::array<Check, 5> kAllChecks = {Check::B, Check::C, Check::Interleavers, Check::RealRooted,
                                                    Check::Family2nnp1};
// "B", "C", "4.2", "4.3", "4.4"
std::string_view check_name(Check c);
std::optional<Check> parse_check(std::string_view name);

struct ScanSubject {
  std::string name;
  Poset poset;
  std::optional<MinusculeFamily> family;  // recognized from the expression
  std::size_t n = 0;                      // template parameter, 0 if none
};

// Replaces each affine term in n (n, n+1, 2n-1, 3*n+2) by its value at n.
// Throws ParseError on a malformed term, InvalidArgument if one goes negative.
std::string substitute_n(std::string_view tmpl, std::size_t n);
// Throws ParseError.
ScanSubject subject_from_expression(std::string_view text, std::size_t n = 0,
                                    std::size_t max_ideals = kDefaultMaxIdeals);

// "a", "a:b", "n", "n+c" or "n-c".
struct KRange {
  std::size_t lo = 1, hi = 1;
  bool relative = false;
  long offset = 0;

  // Throws InvalidArgument if a relative value drops below 1.
  std::vector<std::size_t> values(std::size_t n) const;
  // Throws ParseError.
  static KRange parse(std::string_view text);
};

struct ScanJob {
  std::vector<ScanSubject> subjects;
  KRange k;
  std::vector<Check> checks;
};

struct ScanOptions {
  unsigned threads = 1;
  std::size_t max_ideals = kDefaultMaxIdeals;
  unsigned grid = 16;
  std::chrono::milliseconds wall_clock = std::chrono::minutes(10);
};

struct ScanRow {
  std::string subject;
  std::size_t n = 0, k = 0;
  PropertyReport report;
  std::array<Verdict, 5> verdicts{Verdict::NotApplicable, Verdict::NotApplicable, Verdict::NotApplicable,
                                  Verdict::NotApplicable, Verdict::NotApplicable};
  std::string detail;

  Verdict verdict(Check c) const { return verdicts[static_cast<std::size_t>(c)]; }
  nlohmann::json to_json() const;
  // subject,n,k, then the report columns, then B,C,4.2,4.3,4.4,detail
  static std::string csv_header();
  std::string csv_row() const;
};

struct ScanResult {
  std::vector<ScanRow> rows;  // job order: subject, then k
  std::size_t skipped = 0;    // instances not started before the wall clock ran out

  std::size_t count(Check c, Verdict v) const;
  bool any_refuted() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// Rethrows the first error in job order (ExplosionError in particular).
ScanResult run_scan(const ScanJob& job, const ScanOptions& options = {});
ScanResult run_scans(const std::vector<ScanJob>& jobs, const ScanOptions& options = {});

// B over the minuscule families (grids with m+n <= 9 and k <= m+n, H_n with
// n <= 5 and k <= 2n-1, K_n with n <= 3 and k <= 2n+1, J^2 up to k = 11, J^3
// up to k = 17); C over connected graded posets with at most 8 elements and
// [k] x P for minuscule P with |[k] x P| <= 30; 4.2 on [2] x [n] for n <= 4,
// k <= 6; 4.3 for n <= 5, k <= 7; 4.4 for n <= 10.
std::vector<ScanJob> default_scan_jobs(std::size_t max_ideals = kDefaultMaxIdeals);

}  // namespace antichain
