#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace antichain {

// One reference value: the computed side and the expected numbers. Yes/no
// facts are encoded as {1} / {0}.
struct CheckVector {
  std::string name;
  std::function<std::vector<mpz_class>()> compute;
  std::vector<mpz_class> expected;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::chrono::milliseconds elapsed{0};
  std::string detail;  // first mismatch, or the error message
};

std::vector<CheckVector> builtin_check_vectors();

// corrupt names a vector whose last expected entry is bumped by one, to
// exercise the failure path. Throws InvalidArgument for an unknown name.
std::vector<CheckOutcome> run_check_suite(const std::optional<std::string>& corrupt = std::nullopt);

}  // namespace antichain
