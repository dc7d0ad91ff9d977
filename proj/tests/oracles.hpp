#pragma once

// Brute-force reference computations used only by the tests. Everything here
// works from the raw cover relation or from subset masks and shares no code
// path with the library algorithms it checks.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "antichain/int_poly.hpp"
#include "antichain/poset.hpp"

namespace antichain::oracle {

// Reflexive-transitive closure of the covers by Floyd-Warshall.
inline std::vector<std::vector<bool>> closure(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [u, v] : p.covers()) leq[u][v] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return leq;
}

// Comparability masks for posets with at most 32 elements.
inline std::vector<std::uint32_t> comparable_masks(const Poset& p) {
  const auto leq = closure(p);
  std::vector<std::uint32_t> m(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && (leq[i][j] || leq[j][i])) m[i] |= 1u << j;
  return m;
}

inline bool mask_is_antichain(std::uint32_t s, const std::vector<std::uint32_t>& comp) {
  for (std::size_t i = 0; i < comp.size(); ++i)
    if ((s >> i & 1u) && (comp[i] & s)) return false;
  return true;
}

// N_P by scanning every subset; |P| <= 22.
inline IntPoly antichain_poly_by_masks(const Poset& p) {
  const auto comp = comparable_masks(p);
  std::vector<mpz_class> c(p.size() + 1, 0);
  for (std::uint32_t s = 0; s < (1u << p.size()); ++s)
    if (mask_is_antichain(s, comp)) ++c[static_cast<std::size_t>(__builtin_popcount(s))];
  return IntPoly(std::move(c));
}

// M_P by scanning every subset; |P| <= 22.
inline IntPoly ideal_poly_by_masks(const Poset& p) {
  const auto leq = closure(p);
  std::vector<std::uint32_t> below(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (leq[j][i]) below[i] |= 1u << j;
  std::vector<mpz_class> c(p.size() + 1, 0);
  for (std::uint32_t s = 0; s < (1u << p.size()); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i)
      if ((s >> i & 1u) && (below[i] & ~s)) ok = false;
    if (ok) ++c[static_cast<std::size_t>(__builtin_popcount(s))];
  }
  return IntPoly(std::move(c));
}

// Longest chain inside the subset s.
inline int height_of(std::uint32_t s, const std::vector<std::vector<bool>>& leq,
                     const std::vector<std::size_t>& topo) {
  std::vector<int> best(leq.size(), 0);
  int h = 0;
  for (auto v : topo) {
    if (!(s >> v & 1u)) continue;
    int b = 1;
    for (std::size_t u = 0; u < leq.size(); ++u)
      if (u != v && (s >> u & 1u) && leq[u][v]) b = std::max(b, best[u] + 1);
    best[v] = b;
    h = std::max(h, b);
  }
  return h;
}

// Largest union of k antichains = largest subset without a (k+1)-chain.
inline std::size_t max_k_antichains(const Poset& p, std::size_t k) {
  const auto leq = closure(p);
  std::vector<std::size_t> topo(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) topo[i] = i;
  std::sort(topo.begin(), topo.end(), [&](auto a, auto b) {
    return std::count(leq[a].begin(), leq[a].end(), true) > std::count(leq[b].begin(), leq[b].end(), true);
  });
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << p.size()); ++s) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size <= best) continue;
    if (static_cast<std::size_t>(height_of(s, leq, topo)) <= k) best = size;
  }
  return best;
}

// Largest union of k chains over every subset that splits into k chains;
// a subset is a union of k chains iff its width is at most k.
inline std::size_t max_k_chains(const Poset& p, std::size_t k) {
  const auto comp = comparable_masks(p);
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << p.size()); ++s) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size <= best) continue;
    std::size_t width = 0;
    for (std::uint32_t a = s;; a = (a - 1) & s) {
      if (mask_is_antichain(a, comp)) width = std::max<std::size_t>(width, __builtin_popcount(a));
      if (a == 0) break;
    }
    if (width <= k) best = size;
  }
  return best;
}

// Two-row fillings 0 <= a_1 <= ... <= a_n <= k, 0 <= b_1 <= ... <= b_m <= k,
// a_i <= b_i, weighted by the number of distinct positive a-values plus the
// number of distinct values b_j with b_j > a_j.
inline void for_each_filling(std::size_t n, std::size_t m, std::size_t k,
                             const std::function<void(const std::vector<std::size_t>&,
                                                      const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> a(n), b(m);
  std::function<void(std::size_t)> fill_b;
  std::function<void(std::size_t)> fill_a = [&](std::size_t i) {
    if (i == n) {
      fill_b(0);
      return;
    }
    for (std::size_t v = i ? a[i - 1] : 0; v <= k; ++v) {
      a[i] = v;
      fill_a(i + 1);
    }
  };
  fill_b = [&](std::size_t j) {
    if (j == m) {
      f(a, b);
      return;
    }
    for (std::size_t v = std::max(j ? b[j - 1] : 0, a[j]); v <= k; ++v) {
      b[j] = v;
      fill_b(j + 1);
    }
  };
  fill_a(0);
}

inline IntPoly tableau_poly_by_enumeration(std::size_t n, std::size_t m, std::size_t k) {
  std::vector<mpz_class> c(n + m + 1, 0);
  for_each_filling(n, m, k, [&](const auto& a, const auto& b) {
    std::vector<std::size_t> av, bv;
    for (auto v : a)
      if (v > 0) av.push_back(v);
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] > a[j]) bv.push_back(b[j]);
    std::sort(av.begin(), av.end());
    std::sort(bv.begin(), bv.end());
    const auto w = static_cast<std::size_t>(std::unique(av.begin(), av.end()) - av.begin()) +
                   static_cast<std::size_t>(std::unique(bv.begin(), bv.end()) - bv.begin());
    ++c[w];
  });
  return IntPoly(std::move(c));
}

inline mpz_class count_fillings(std::size_t n, std::size_t m, std::size_t k) {
  mpz_class count = 0;
  for_each_filling(n, m, k, [&](const auto&, const auto&) { ++count; });
  return count;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace antichain::oracle
