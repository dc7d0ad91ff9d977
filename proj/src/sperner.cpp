#include "antichain/sperner.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <limits>
#include <queue>
#include <thread>

#include "antichain/errors.hpp"
#include "antichain/poly_props.hpp"
#include "antichain/transfer.hpp"

namespace antichain {

namespace {

// Kuhn's augmenting paths; left copy x is matched to a right copy y > x.
bool try_match(const Poset& p, std::size_t x, std::vector<char>& seen, std::vector<std::size_t>& owner) {
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (!p.less(x, y) || seen[y]) continue;
    seen[y] = 1;
    if (owner[y] == SIZE_MAX || try_match(p, owner[y], seen, owner)) {
      owner[y] = x;
      return true;
    }
  }
  return false;
}

class MinCostFlow {
 public:
  explicit MinCostFlow(std::size_t nodes) : adj_(nodes) {}

  void add_edge(std::size_t u, std::size_t v, int cap, long cost) {
    adj_[u].push_back(edges_.size());
    edges_.push_back({v, cap, cost});
    adj_[v].push_back(edges_.size());
    edges_.push_back({u, 0, -cost});
  }

  // Potentials from a Bellman-Ford pass; needed once because of the negative
  // node costs.
  void init_potentials(std::size_t s) {
    const long inf = std::numeric_limits<long>::max() / 4;
    pot_.assign(adj_.size(), inf);
    pot_[s] = 0;
    for (std::size_t round = 0; round < adj_.size(); ++round) {
      bool changed = false;
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (pot_[u] == inf) continue;
        for (std::size_t id : adj_[u]) {
          const Edge& e = edges_[id];
          if (e.cap > 0 && pot_[u] + e.cost < pot_[e.to]) {
            pot_[e.to] = pot_[u] + e.cost;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    for (auto& v : pot_)
      if (v == inf) v = 0;
  }

  // One unit along a shortest path; returns its cost. Dijkstra on reduced
  // costs, ties broken by node index through the heap ordering.
  std::optional<long> augment(std::size_t s, std::size_t t) {
    const long inf = std::numeric_limits<long>::max() / 4;
    std::vector<long> dist(adj_.size(), inf);
    std::vector<std::size_t> via(adj_.size(), SIZE_MAX);
    using Item = std::pair<long, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0;
    heap.push({0, s});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) continue;
      for (std::size_t id : adj_[u]) {
        const Edge& e = edges_[id];
        if (e.cap <= 0) continue;
        const long nd = d + e.cost + pot_[u] - pot_[e.to];
        if (nd < dist[e.to]) {
          dist[e.to] = nd;
          via[e.to] = id;
          heap.push({nd, e.to});
        }
      }
    }
    if (dist[t] == inf) return std::nullopt;
    for (std::size_t v = 0; v < adj_.size(); ++v)
      if (dist[v] < inf) pot_[v] += dist[v];
    long cost = 0;
    for (std::size_t v = t; v != s;) {
      Edge& e = edges_[via[v]];
      e.cap -= 1;
      edges_[via[v] ^ 1].cap += 1;
      cost += e.cost;
      v = edges_[via[v] ^ 1].to;
    }
    return cost;
  }

 private:
  struct Edge {
    std::size_t to;
    int cap;
    long cost;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Edge> edges_;
  std::vector<long> pot_;
};

std::vector<std::size_t> sorted_levels_desc(const Poset& p) {
  auto levels = p.rank_levels();
  std::sort(levels.begin(), levels.end(), std::greater<>());
  return levels;
}

}  // namespace

std::size_t max_antichain_size(const Poset& p) {
  std::vector<std::size_t> owner(p.size(), SIZE_MAX);
  std::size_t matched = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::vector<char> seen(p.size(), 0);
    if (try_match(p, x, seen, owner)) ++matched;
  }
  return p.size() - matched;
}

std::size_t ChainProfile::chains(std::size_t k) const {
  if (k == 0 || c.empty()) return 0;
  return c[std::min(k, c.size()) - 1];
}

std::size_t ChainProfile::antichains(std::size_t k) const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < std::min(k, lambda_conj.size()); ++i) total += lambda_conj[i];
  return total;
}

ChainProfile chain_profile(const Poset& p) {
  const std::size_t n = p.size();
  // nodes: 0 = source, 1 = sink, 2 + 2x = x_in, 3 + 2x = x_out
  const std::size_t s = 0, t = 1;
  MinCostFlow flow(2 * n + 2);
  for (std::size_t x = 0; x < n; ++x) {
    flow.add_edge(s, 2 + 2 * x, 1, 0);
    flow.add_edge(2 + 2 * x, 3 + 2 * x, 1, -1);
    flow.add_edge(3 + 2 * x, t, 1, 0);
    for (std::size_t y = 0; y < n; ++y)
      if (p.less(x, y)) flow.add_edge(3 + 2 * x, 2 + 2 * y, 1, 0);
  }
  flow.add_edge(s, t, static_cast<int>(n) + 1, 0);
  flow.init_potentials(s);

  ChainProfile out;
  std::size_t covered = 0;
  while (covered < n) {
    const auto cost = flow.augment(s, t);
    if (!cost || *cost >= 0) throw Error("chain profile: flow stalled before covering the poset");
    covered += static_cast<std::size_t>(-*cost);
    out.c.push_back(covered);
    out.lambda.push_back(static_cast<std::size_t>(-*cost));
  }
  for (std::size_t i = 1; i < out.lambda.size(); ++i)
    if (out.lambda[i] > out.lambda[i - 1]) throw Error("chain profile increments are not a partition");
  if (!out.lambda.empty()) {
    for (std::size_t j = 1; j <= out.lambda.front(); ++j) {
      std::size_t count = 0;
      for (std::size_t part : out.lambda) count += part >= j;
      out.lambda_conj.push_back(count);
    }
  }
  return out;
}

std::size_t max_k_chains(const Poset& p, std::size_t k) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  return chain_profile(p).chains(k);
}

std::size_t max_k_antichains(const Poset& p, std::size_t k) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  return chain_profile(p).antichains(k);
}

bool is_sperner(const Poset& p) { return max_antichain_size(p) <= sorted_levels_desc(p).front(); }

bool is_strongly_sperner(const Poset& p) {
  const auto levels = sorted_levels_desc(p);
  const ChainProfile profile = chain_profile(p);
  std::size_t best = 0;
  for (std::size_t k = 1; k <= levels.size(); ++k) {
    best += levels[k - 1];
    if (profile.antichains(k) > best) return false;
  }
  return true;
}

bool is_rank_symmetric(const Poset& p) {
  const auto levels = p.rank_levels();
  return std::equal(levels.begin(), levels.end(), levels.rbegin());
}

bool is_rank_unimodal(const Poset& p) { return is_rank_unimodal_levels(p.rank_levels()); }

bool is_peck(const Poset& p) { return is_rank_symmetric(p) && is_rank_unimodal(p) && is_strongly_sperner(p); }

std::size_t ConjectureCReport::tested() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.log_concave.has_value(); }));
}

std::size_t ConjectureCReport::refuted() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const auto& e) { return e.log_concave.has_value() && !*e.log_concave; }));
}

ConjectureCReport conjecture_C_scan(const std::vector<std::pair<std::string, Poset>>& corpus, unsigned threads) {
  ConjectureCReport report;
  report.entries.resize(corpus.size());
  auto run = [&](std::size_t i) {
    const auto& [name, p] = corpus[i];
    ConjectureCEntry& e = report.entries[i];
    e.name = name;
    e.graded = p.is_graded();
    e.connected = p.is_connected();
    e.peck = e.graded && is_peck(p);
    if (e.peck && e.connected) {
      e.poly = antichain_poly_k(p, 1);
      e.log_concave = is_log_concave(*e.poly);
    }
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) run(i);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < corpus.size(); i = next++) run(i);
        } catch (...) {
          failures[w] = std::current_exception();
          next = corpus.size();
        }
      });
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return report;
}

}  // namespace antichain
