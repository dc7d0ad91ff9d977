#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antichain/int_poly.hpp"
#include "antichain/poset.hpp"

namespace antichain {

// Width of p: |p| minus a maximum matching in the strict order relation.
std::size_t max_antichain_size(const Poset& p);

// Greene-Kleitman data. c[k-1] is the largest union of k chains, for k up to
// the first k with c_k = |p|. lambda holds the increments (a partition of |p|)
// and lambda_conj its conjugate.
struct ChainProfile {
  std::vector<std::size_t> c;
  std::vector<std::size_t> lambda;
  std::vector<std::size_t> lambda_conj;

  // c_k for any k >= 1; c_0 = 0.
  std::size_t chains(std::size_t k) const;
  // Largest union of k antichains: lambda_conj_1 + ... + lambda_conj_k.
  std::size_t antichains(std::size_t k) const;
};

// Min-cost flow on the node-split comparability DAG, one augmenting path per k.
ChainProfile chain_profile(const Poset& p);

std::size_t max_k_chains(const Poset& p, std::size_t k);
std::size_t max_k_antichains(const Poset& p, std::size_t k);

// These throw NotGraded.
bool is_sperner(const Poset& p);
bool is_strongly_sperner(const Poset& p);
bool is_rank_symmetric(const Poset& p);
bool is_rank_unimodal(const Poset& p);
bool is_peck(const Poset& p);

struct ConjectureCEntry {
  std::string name;
  bool graded = false;
  bool connected = false;
  bool peck = false;
  // Present only for connected Peck posets.
  std::optional<IntPoly> poly;
  std::optional<bool> log_concave;
};

struct ConjectureCReport {
  std::vector<ConjectureCEntry> entries;

  std::size_t tested() const;
  std::size_t refuted() const;
  bool passed() const { return refuted() == 0; }
};

// Log-concavity of N_Q over the connected Peck members of the corpus. Entries
// keep the corpus order.
ConjectureCReport conjecture_C_scan(const std::vector<std::pair<std::string, Poset>>& corpus,
                                    unsigned threads = 1);

}  // namespace antichain
