#include "antichain/transfer.hpp"

#include <algorithm>
#include <thread>

#include "antichain/errors.hpp"

namespace antichain {

TransferMatrix::TransferMatrix(std::vector<std::vector<TransferEntry>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (r.empty() || r.back().column != i || r.back().exponent != 0)
      throw InvalidArgument("transfer row " + std::to_string(i) + " lacks a unit diagonal");
    for (std::size_t t = 0; t + 1 < r.size(); ++t)
      if (r[t].column >= r[t + 1].column)
        throw InvalidArgument("transfer row " + std::to_string(i) + " is not lower triangular");
  }
}

int TransferMatrix::exponent(std::size_t i, std::size_t j) const {
  const auto& r = rows_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const TransferEntry& e, std::size_t c) { return e.column < c; });
  if (it == r.end() || it->column != j) return -1;
  return static_cast<int>(it->exponent);
}

std::size_t TransferMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

IntPoly StateVector::total() const {
  IntPoly sum;
  for (const auto& e : entries) sum += e;
  return sum;
}

TransferMatrix build_transfer(const Poset& p, const IdealFamily& fam, std::size_t max_entries) {
  const std::size_t n = fam.size();
  if (n == 0 || fam.ideal(0).universe() != p.size())
    throw InvalidArgument("ideal family does not belong to this poset");
  std::vector<std::vector<TransferEntry>> rows(n);
  std::size_t entries = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Subset& top = fam.ideal(i);
    const Subset& maxima = fam.max_of(i);
    // the canonical order is a linear extension of inclusion, so j <= i
    for (std::size_t j = 0; j <= i; ++j) {
      const Subset& sub = fam.ideal(j);
      if (!sub.is_subset_of(top)) continue;
      if (++entries > max_entries) throw ExplosionError("transfer matrix entries", max_entries);
      rows[i].push_back({j, static_cast<unsigned>((maxima - sub).count())});
    }
  }
  return TransferMatrix(std::move(rows));
}

StateVector initial_vector(const IdealFamily& fam) {
  StateVector v;
  v.entries.reserve(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) v.entries.push_back(IntPoly::monomial(fam.max_of(i).count()));
  v.k = 1;
  return v;
}

namespace {

void step_rows(const TransferMatrix& m, const StateVector& v, StateVector& out, std::size_t begin,
               std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    IntPoly acc;
    for (const auto& e : m.row(i)) acc.add_shifted(v.entries[e.column], e.exponent);
    out.entries[i] = std::move(acc);
  }
}

}  // namespace

StateVector step(const TransferMatrix& m, const StateVector& v, unsigned threads) {
  if (v.entries.size() != m.size()) throw InvalidArgument("state vector size does not match matrix");
  StateVector out;
  out.entries.resize(m.size());
  out.k = v.k + 1;
  const std::size_t n = m.size();
  if (threads <= 1 || n < 64) {
    step_rows(m, v, out, 0, n);
    return out;
  }
  std::vector<std::jthread> workers;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t begin = 0; begin < n; begin += chunk)
    workers.emplace_back([&, begin] { step_rows(m, v, out, begin, std::min(n, begin + chunk)); });
  return out;
}

StateVector state_at(const TransferMatrix& m, const StateVector& initial, std::size_t k, unsigned threads) {
  if (k == 0) throw InvalidArgument("k must be positive");
  StateVector v = initial;
  while (v.k < k) v = step(m, v, threads);
  return v;
}

IntPoly antichain_poly_k(const Poset& p, std::size_t k, std::size_t max_ideals, unsigned threads) {
  if (k == 0) throw InvalidArgument("k must be positive");
  const IdealFamily fam = enumerate_ideals(p, max_ideals);
  if (k == 1) return initial_vector(fam).total();
  const TransferMatrix m = build_transfer(p, fam);
  return state_at(m, initial_vector(fam), k, threads).total();
}

std::vector<std::pair<Subset, IntPoly>> per_ideal_polys(const Poset& p, std::size_t k, std::size_t max_ideals) {
  if (k == 0) throw InvalidArgument("k must be positive");
  const IdealFamily fam = enumerate_ideals(p, max_ideals);
  const TransferMatrix m = build_transfer(p, fam);
  StateVector v = state_at(m, initial_vector(fam), k);
  std::vector<std::pair<Subset, IntPoly>> out;
  out.reserve(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) out.emplace_back(fam.ideal(i), std::move(v.entries[i]));
  return out;
}

}  // namespace antichain
