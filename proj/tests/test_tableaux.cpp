#include <gtest/gtest.h>

#include "antichain/errors.hpp"
#include "antichain/minuscule.hpp"
#include "antichain/real_roots.hpp"
#include "antichain/tableaux.hpp"
#include "antichain/transfer.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

namespace antichain {
namespace {

TEST(Tableaux, SmallValues) {
  EXPECT_EQ(f_direct(2, 1, 1), (IntPoly{1, 3, 1}));
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; m <= n; ++m) EXPECT_EQ(f_direct(n, m, 0), IntPoly{1});
  for (long k = 0; k <= 6; ++k) EXPECT_EQ(f_direct(1, 0, k), (IntPoly{1, k}));
  EXPECT_THROW(f_direct(1, 2, 3), InvalidArgument);
}

TEST(Tableaux, DirectMatchesEnumeration) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; m <= n; ++m)
      for (std::size_t k = 0; k <= 4; ++k) {
        const IntPoly f = f_direct(n, m, k);
        ASSERT_EQ(f, oracle::tableau_poly_by_enumeration(n, m, k)) << n << "," << m << "," << k;
        ASSERT_EQ(f.evaluate(mpz_class(1)), oracle::count_fillings(n, m, k));
      }
}

TEST(Tableaux, RecursionMatchesDirect) {
  const TableauRecursion table(4, 5);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t k = 0; k <= 5; ++k) {
      EXPECT_EQ(f_recursive(n, k), f_direct(n, n, k)) << n << "," << k;
      for (std::size_t m = 0; m <= n; ++m) EXPECT_EQ(table.at(n, m, k), f_direct(n, m, k));
    }
  }
  EXPECT_THROW(table.at(2, 3, 1), InvalidArgument);
}

TEST(Tableaux, MatchesAntichainPolynomials) {
  EXPECT_EQ(f_recursive(1, 2), (IntPoly{1, 4, 1}));
  EXPECT_EQ(f_recursive(1, 2), antichain_poly_k(product(chain(1), chain(2)), 2));
  for (std::size_t n = 1; n <= 5; ++n)
    EXPECT_EQ(f_recursive(n, n + 1), antichain_poly_k(product(chain(2), chain(n)), n + 1)) << n;
}

TEST(Tableaux, Family2nnp1) {
  const auto& table = reference::gamma_2_n_np1();
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto [f, g] = family_2_n_np1(n);
    ASSERT_TRUE(g.exact()) << n;
    EXPECT_EQ(g.gamma, table[n - 1]) << n;
    EXPECT_EQ(f.degree(), static_cast<int>(2 * n));
    EXPECT_TRUE(is_monic(f));
    if (n <= 8) {
      EXPECT_EQ(f.evaluate(mpz_class(1)), (2 * n + 1) * catalan(n) * catalan(n + 1));
    }
    if (n <= 6) {
      EXPECT_TRUE(is_palindromic(f));
      EXPECT_TRUE(is_real_rooted(f));
      EXPECT_TRUE(g.all_positive());
    }
  }
  EXPECT_THROW(family_2_n_np1(0), InvalidArgument);
}

}  // namespace
}  // namespace antichain
