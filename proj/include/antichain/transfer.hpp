#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "antichain/ideals.hpp"
#include "antichain/int_poly.hpp"
#include "antichain/poset.hpp"

namespace antichain {

// Monomial entry x^exponent at (row, column).
struct TransferEntry {
  std::size_t column;
  unsigned exponent;
};

// The ideal transfer matrix: entry (i, j) is x^#(max(I_i) \ I_j) when I_j is
// contained in I_i, zero otherwise. Lower triangular with unit diagonal under
// a linear extension of inclusion; stored as row adjacency lists.
class TransferMatrix {
 public:
  // Rows must be sorted by column with every column <= its row index and a
  // diagonal entry x^0. Throws InvalidArgument otherwise.
  explicit TransferMatrix(std::vector<std::vector<TransferEntry>> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<TransferEntry>& row(std::size_t i) const noexcept { return rows_[i]; }
  // Exponent at (i, j), or -1 for a zero entry.
  int exponent(std::size_t i, std::size_t j) const;
  std::size_t nonzeros() const noexcept;

 private:
  std::vector<std::vector<TransferEntry>> rows_;
};

// Per-ideal polynomials N_{I_i}^k and the step counter k.
struct StateVector {
  std::vector<IntPoly> entries;
  std::size_t k = 1;

  IntPoly total() const;
};

inline constexpr std::size_t kDefaultMaxTransferEntries = 50'000'000;

// Throws ExplosionError once the nonzero count passes max_entries.
TransferMatrix build_transfer(const Poset& p, const IdealFamily& fam,
                              std::size_t max_entries = kDefaultMaxTransferEntries);

// Entry i is x^#max(I_i).
StateVector initial_vector(const IdealFamily& fam);

// V^(k+1) = A V^(k). threads > 1 splits rows across workers; the result is
// identical to the sequential one.
StateVector step(const TransferMatrix& m, const StateVector& v, unsigned threads = 1);

// V^(k) by k-1 matrix-vector products from V^(1). Throws InvalidArgument for
// k == 0.
StateVector state_at(const TransferMatrix& m, const StateVector& initial, std::size_t k,
                     unsigned threads = 1);

// N_{[k] x P}(x). Throws InvalidArgument for k == 0.
IntPoly antichain_poly_k(const Poset& p, std::size_t k, std::size_t max_ideals = kDefaultMaxIdeals,
                         unsigned threads = 1);

// Final state vector paired with the ideals in canonical order.
std::vector<std::pair<Subset, IntPoly>> per_ideal_polys(const Poset& p, std::size_t k,
                                                        std::size_t max_ideals = kDefaultMaxIdeals);

}  // namespace antichain
