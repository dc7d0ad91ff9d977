#include "antichain/tableaux.hpp"

#include "antichain/errors.hpp"
#include "antichain/poset.hpp"
#include "antichain/transfer.hpp"

namespace antichain {

IntPoly f_direct(std::size_t n, std::size_t m, std::size_t k) {
  if (m > n) throw InvalidArgument("tableau second row longer than the first");
  const std::size_t values = k + 1;
  // state (a, b, counted) with b == values meaning "no b placed yet"
  const std::size_t b_states = values + 1;
  auto idx = [&](std::size_t a, std::size_t b, bool counted) { return (a * b_states + b) * 2 + counted; };
  std::vector<IntPoly> cur(values * b_states * 2), next(cur.size());
  cur[idx(0, values, false)] = IntPoly{1};

  for (std::size_t col = 0; col < n; ++col) {
    for (auto& p : next) p = IntPoly();
    for (std::size_t a0 = 0; a0 < values; ++a0)
      for (std::size_t b0 = 0; b0 < b_states; ++b0)
        for (int c0 = 0; c0 < 2; ++c0) {
          const IntPoly& here = cur[idx(a0, b0, c0)];
          if (here.is_zero()) continue;
          for (std::size_t a = a0; a < values; ++a) {
            const std::size_t wa = a > 0 && (col == 0 || a != a0);
            if (col >= m) {
              next[idx(a, b0, c0)].add_shifted(here, wa);
              continue;
            }
            const std::size_t b_lo = b0 == values ? a : std::max(a, b0);
            for (std::size_t b = b_lo; b < values; ++b) {
              std::size_t w = wa;
              bool counted;
              if (b != b0) {
                counted = b > a;
                w += counted;
              } else {
                counted = c0 || b > a;
                w += !c0 && b > a;
              }
              next[idx(a, b, counted)].add_shifted(here, w);
            }
          }
        }
    std::swap(cur, next);
  }
  IntPoly total;
  for (const auto& p : cur) total += p;
  return total;
}

TableauRecursion::TableauRecursion(std::size_t n_max, std::size_t k_max)
    : n_max_(n_max), k_max_(k_max), table_((n_max + 1) * (n_max + 1) * (k_max + 1)) {
  for (std::size_t n = 0; n <= n_max; ++n)
    for (std::size_t m = 0; m <= n; ++m) table_[index(n, m, 0)] = IntPoly{1};
  const IntPoly x = IntPoly::monomial(1);
  for (std::size_t k = 0; k < k_max; ++k) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      for (std::size_t m = 0; m <= n; ++m) {
        IntPoly f;
        if (m == n) {
          f += at(n, n, k);
          for (std::size_t s = 1; s <= n; ++s) f.add_shifted(at(n, n - s, k), 1);
          for (std::size_t l = 1; l <= n; ++l) {
            f.add_shifted(at(n - l, n - l, k), 1);
            for (std::size_t s = 1; s <= n - l; ++s) f.add_shifted(at(n - l, n - l - s, k), 2);
          }
        } else {
          // l top values in row a, t in row b; the rest is a shape (n-l, m-t)
          for (std::size_t l = 0; l <= n; ++l)
            for (std::size_t t = m + l > n ? m + l - n : 0; t <= m; ++t) {
              const std::size_t w = (l >= 1) + (t >= 1 && m - t < n - l);
              f.add_shifted(at(n - l, m - t, k), w);
            }
        }
        table_[index(n, m, k + 1)] = std::move(f);
      }
    }
  }
}

std::size_t TableauRecursion::index(std::size_t n, std::size_t m, std::size_t k) const {
  return (k * (n_max_ + 1) + n) * (n_max_ + 1) + m;
}

const IntPoly& TableauRecursion::at(std::size_t n, std::size_t m, std::size_t k) const {
  if (n > n_max_ || m > n || k > k_max_) throw InvalidArgument("tableau index out of range");
  return table_[index(n, m, k)];
}

IntPoly f_recursive(std::size_t n, std::size_t k) { return TableauRecursion(n, k).at(n, n, k); }

std::pair<IntPoly, GammaExpansion> family_2_n_np1(std::size_t n) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  IntPoly f = antichain_poly_k(product(chain(2), chain(n)), n + 1);
  GammaExpansion g = gamma_expand(f);
  return {std::move(f), std::move(g)};
}

}  // namespace antichain
