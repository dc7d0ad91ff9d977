#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "antichain/corpus.hpp"
#include "antichain/errors.hpp"
#include "antichain/minuscule.hpp"
#include "antichain/poly_props.hpp"
#include "antichain/sperner.hpp"
#include "antichain/transfer.hpp"
#include "oracles.hpp"

namespace antichain {
namespace {

bool oracle_strongly_sperner(const Poset& p) {
  auto levels = p.rank_levels();
  std::sort(levels.begin(), levels.end(), std::greater<>());
  std::size_t sum = 0;
  for (std::size_t k = 1; k <= levels.size(); ++k) {
    sum += levels[k - 1];
    if (oracle::max_k_antichains(p, k) > sum) return false;
  }
  return true;
}

TEST(Sperner, Width) {
  EXPECT_EQ(max_antichain_size(chain(5)), 1u);
  EXPECT_EQ(max_antichain_size(product(chain(2), chain(3))), 2u);
  EXPECT_EQ(max_antichain_size(MinusculeFamily::j3().realize()), 3u);
  EXPECT_EQ(max_antichain_size(disjoint_union(chain(1), chain(1))), 2u);
}

TEST(Sperner, Chains) {
  EXPECT_EQ(max_k_chains(chain(5), 1), 5u);
  EXPECT_EQ(max_k_chains(product(chain(2), chain(3)), 2), 6u);
  EXPECT_EQ(max_k_chains(disjoint_union(chain(1), chain(1)), 1), 1u);
  EXPECT_EQ(max_k_chains(chain(3), 7), 3u);
  EXPECT_THROW(max_k_chains(chain(3), 0), InvalidArgument);
}

TEST(Sperner, Antichains) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(max_k_antichains(chain(n), k), std::min(k, n));
  const Poset diamond = product(chain(2), chain(2));
  EXPECT_EQ(max_k_antichains(diamond, 2), 3u);
  EXPECT_EQ(max_k_antichains(diamond, 3), 4u);
}

TEST(Sperner, FenceWithLevelsTwoTwo) {
  const Poset n_shape = Poset::from_relations(4, {{0, 2}, {1, 2}, {1, 3}});
  ASSERT_EQ(n_shape.rank_levels(), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(max_antichain_size(n_shape), oracle::max_k_antichains(n_shape, 1));
  EXPECT_TRUE(is_sperner(n_shape));
  EXPECT_EQ(is_strongly_sperner(n_shape), oracle_strongly_sperner(n_shape));
  EXPECT_TRUE(is_rank_symmetric(n_shape));
  EXPECT_TRUE(is_rank_unimodal(n_shape));
  EXPECT_TRUE(is_peck(n_shape));
}

TEST(Sperner, NotGraded) {
  const Poset p = Poset::from_relations(3, {{0, 1}});
  EXPECT_THROW(is_peck(p), NotGraded);
  EXPECT_THROW(is_sperner(p), NotGraded);
  EXPECT_NO_THROW(max_antichain_size(p));
}

TEST(Sperner, ProfileIsPartitionAndMatchesBruteForce) {
  std::size_t non_sperner = 0;
  for (const Poset& p : connected_graded_posets(7)) {
    const ChainProfile prof = chain_profile(p);
    ASSERT_EQ(prof.c.back(), p.size());
    ASSERT_TRUE(std::is_sorted(prof.lambda.rbegin(), prof.lambda.rend()));
    EXPECT_EQ(prof.c.size(), max_antichain_size(p));
    EXPECT_EQ(prof.antichains(1), max_antichain_size(p));
    EXPECT_EQ(static_cast<std::size_t>(antichain_poly_k(p, 1).degree()), max_antichain_size(p));
    for (std::size_t k = 1; k <= 3; ++k) {
      ASSERT_EQ(prof.antichains(k), oracle::max_k_antichains(p, k));
      ASSERT_EQ(prof.chains(k), oracle::max_k_chains(p, k));
    }
    EXPECT_EQ(is_strongly_sperner(p), oracle_strongly_sperner(p));
    non_sperner += !is_sperner(p);
  }
  EXPECT_GT(non_sperner, 0u);
}

TEST(Sperner, MinusculeArePeck) {
  std::vector<Poset> ps;
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = m; n <= 5; ++n) ps.push_back(MinusculeFamily::grid(m, n).realize());
  for (std::size_t n = 1; n <= 5; ++n) ps.push_back(MinusculeFamily::h(n).realize());
  for (std::size_t n = 1; n <= 4; ++n) ps.push_back(MinusculeFamily::k(n).realize());
  ps.push_back(MinusculeFamily::j2().realize());
  ps.push_back(MinusculeFamily::j3().realize());
  for (const Poset& p : ps) {
    EXPECT_TRUE(is_peck(p)) << p.size();
    for (std::size_t k = 2; k * p.size() <= 30; ++k) EXPECT_TRUE(is_peck(product(chain(k), p)));
  }
}

TEST(Sperner, PeckClosedUnderProductOnSmallCorpus) {
  std::vector<Poset> peck;
  for (const Poset& p : connected_graded_posets(4))
    if (is_peck(p)) peck.push_back(p);
  ASSERT_GT(peck.size(), 3u);
  for (const Poset& a : peck)
    for (const Poset& b : peck) EXPECT_TRUE(is_peck(product(a, b)));
}

TEST(Sperner, ConjectureCScan) {
  std::vector<std::pair<std::string, Poset>> corpus;
  for (const Poset& p : connected_graded_posets(6)) corpus.emplace_back("p" + std::to_string(corpus.size()), p);
  corpus.emplace_back("disconnected", disjoint_union(chain(2), chain(2)));
  const ConjectureCReport serial = conjecture_C_scan(corpus);
  const ConjectureCReport parallel = conjecture_C_scan(corpus, 4);
  EXPECT_TRUE(serial.passed());
  std::size_t connected_peck = 0;
  for (const auto& e : serial.entries) connected_peck += e.peck && e.connected;
  EXPECT_EQ(serial.tested(), connected_peck);
  EXPECT_GT(serial.tested(), 20u);
  ASSERT_EQ(serial.entries.size(), parallel.entries.size());
  for (std::size_t i = 0; i < serial.entries.size(); ++i) {
    EXPECT_EQ(serial.entries[i].name, parallel.entries[i].name);
    EXPECT_EQ(serial.entries[i].poly, parallel.entries[i].poly);
  }
  EXPECT_FALSE(serial.entries.back().poly.has_value());
}

}  // namespace
}  // namespace antichain
