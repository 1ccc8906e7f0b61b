#include "romandom/rkdf.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "romandom/errors.hpp"

namespace romandom {

namespace {

using Clock = std::chrono::steady_clock;

void require_k(int k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
}

void require_order(const Graph& g, int limit, const char* what) {
  if (g.order() < 1) throw PreconditionError(std::string(what) + ": graph must be nonempty");
  if (g.order() > limit) {
    throw GuardError(std::string(what) + ": order " + std::to_string(g.order()) +
                     " exceeds limit " + std::to_string(limit));
  }
  if (g.order() > 64) {
    throw GuardError(std::string(what) + ": order above 64 is not supported");
  }
}

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.row_mask(v);
  return adj;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// Lower bound on the number of additional "covering" vertices needed so that
/// every vertex in `needy` gains its deficit of neighbours from `pool`.
/// Returns -1 when some deficit cannot be met at all.
int covering_lower_bound(const std::vector<std::uint64_t>& adj, int k, std::uint64_t needy,
                         std::uint64_t have, std::uint64_t pool) {
  int max_deficit = 0;
  int total_deficit = 0;
  std::uint64_t deficient = 0;
  for (auto bits = needy; bits != 0; bits &= bits - 1) {
    int z = std::countr_zero(bits);
    int deficit = k - std::popcount(adj[z] & have);
    if (deficit <= 0) continue;
    if (std::popcount(adj[z] & pool) < deficit) return -1;
    max_deficit = std::max(max_deficit, deficit);
    total_deficit += deficit;
    deficient |= std::uint64_t{1} << z;
  }
  if (total_deficit == 0) return 0;
  int best_cover = 0;
  for (auto bits = pool; bits != 0; bits &= bits - 1) {
    int u = std::countr_zero(bits);
    best_cover = std::max(best_cover, std::popcount(adj[u] & deficient));
  }
  return std::max(max_deficit, ceil_div(total_deficit, best_cover));
}

class RomanSearch {
public:
  RomanSearch(const Graph& g, int k)
      : n_(g.order()), k_(k), adj_(adjacency_masks(g)), current_(n_, 0), best_(n_, 1) {}

  void run() { descend(0, 0, 0, 0); }

  int best_weight() const { return best_weight_; }
  const std::vector<std::uint8_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  void descend(int v, int w, std::uint64_t zeros, std::uint64_t twos) {
    ++nodes_;
    const std::uint64_t open = full_mask(n_) & ~full_mask(v);
    int lb = covering_lower_bound(adj_, k_, zeros, twos, open);
    if (lb < 0 || w + 2 * lb >= best_weight_) return;
    if (v == n_) {
      best_weight_ = w;
      best_ = current_;
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << v;
    current_[v] = 0;
    descend(v + 1, w, zeros | bit, twos);
    current_[v] = 1;
    descend(v + 1, w + 1, zeros, twos);
    current_[v] = 2;
    descend(v + 1, w + 2, zeros, twos | bit);
  }

  int n_;
  int k_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
  int best_weight_ = n_ + 1;
  std::uint64_t nodes_ = 0;
};

class DominatingSetSearch {
public:
  DominatingSetSearch(const Graph& g, int k)
      : n_(g.order()), k_(k), adj_(adjacency_masks(g)), current_(n_, 0), best_(n_, 1) {}

  void run() { descend(0, 0, 0, 0); }

  int best_size() const { return best_size_; }
  const std::vector<std::uint8_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  void descend(int v, int size, std::uint64_t out, std::uint64_t in) {
    ++nodes_;
    const std::uint64_t open = full_mask(n_) & ~full_mask(v);
    int lb = covering_lower_bound(adj_, k_, out, in, open);
    if (lb < 0 || size + lb >= best_size_) return;
    if (v == n_) {
      best_size_ = size;
      best_ = current_;
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << v;
    current_[v] = 0;
    descend(v + 1, size, out | bit, in);
    current_[v] = 1;
    descend(v + 1, size + 1, out, in | bit);
  }

  int n_;
  int k_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
  int best_size_ = n_ + 1;
  std::uint64_t nodes_ = 0;
};

/// Advances `digits` to the next sequence over {lo..hi}^n in lexicographic
/// order; returns false after the last one.
bool next_sequence(std::vector<std::uint8_t>& digits, std::uint8_t lo, std::uint8_t hi) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] < hi) {
      ++digits[i];
      return true;
    }
    digits[i] = lo;
  }
  return false;
}

}  // namespace

std::vector<Violation> validate_rkdf(const Graph& g, int k, const Labeling& f) {
  std::vector<Violation> out;
  const auto n = static_cast<std::size_t>(g.order());
  if (f.size() != n) {
    out.push_back({ViolationKind::length_mismatch, std::nullopt, std::nullopt,
                   "labeling has " + std::to_string(f.size()) + " entries, graph has " +
                       std::to_string(n) + " vertices"});
    return out;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (f[v] > 2) {
      out.push_back({ViolationKind::value_out_of_range, static_cast<int>(v), std::nullopt,
                     "label " + std::to_string(f[v]) + " not in {0,1,2}"});
    }
  }
  if (!out.empty()) return out;
  for (std::size_t v = 0; v < n; ++v) {
    if (f[v] != 0) continue;
    int twos = 0;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) twos += f[u] == 2 ? 1 : 0;
    if (twos < k) {
      out.push_back({ViolationKind::zero_vertex_undercovered, static_cast<int>(v), std::nullopt,
                     "vertex labelled 0 has " + std::to_string(twos) +
                         " neighbours labelled 2, needs " + std::to_string(k)});
    }
  }
  return out;
}

bool is_k_dominating(const Graph& g, int k, const VertexSet& s) {
  if (s.mask.size() != static_cast<std::size_t>(g.order())) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.mask[v]) continue;
    int inside = 0;
    for (Vertex u : g.neighbors(v)) inside += s.mask[u] ? 1 : 0;
    if (inside < k) return false;
  }
  return true;
}

SolveResult gamma_kr_exact(const Graph& g, int k, const Guards& guards) {
  require_k(k);
  require_order(g, guards.gamma_kr_max_n, "gamma_kr_exact");
  auto start = Clock::now();
  RomanSearch search(g, k);
  search.run();
  SolveResult r;
  r.quantity = Quantity::gamma_kr;
  r.value = search.best_weight();
  r.witness = Labeling(search.best());
  r.nodes_explored = search.nodes();
  r.elapsed = Clock::now() - start;
  return r;
}

int gamma_kr_oracle(const Graph& g, int k, const Guards& guards) {
  require_k(k);
  require_order(g, guards.gamma_kr_oracle_max_n, "gamma_kr_oracle");
  Labeling f(static_cast<std::size_t>(g.order()), 0);
  int best = g.order() * 2 + 1;
  do {
    if (validate_rkdf(g, k, f).empty()) best = std::min(best, weight(f));
  } while (next_sequence(f.values, 0, 2));
  return best;
}

SolveResult gamma_k_exact(const Graph& g, int k, const Guards& guards) {
  require_k(k);
  require_order(g, guards.gamma_k_max_n, "gamma_k_exact");
  auto start = Clock::now();
  DominatingSetSearch search(g, k);
  search.run();
  SolveResult r;
  r.quantity = Quantity::gamma_k;
  r.value = search.best_size();
  r.witness = VertexSet{search.best()};
  r.nodes_explored = search.nodes();
  r.elapsed = Clock::now() - start;
  return r;
}

RkdfEnumeration enumerate_rkdfs(const Graph& g, int k, std::optional<std::size_t> cap,
                                const Guards& guards) {
  require_k(k);
  if (g.order() < 1) throw PreconditionError("enumerate_rkdfs: graph must be nonempty");
  const bool restricted = k > degree_stats(g).max_degree;
  const int limit = restricted ? guards.enumerate_restricted_max_n : guards.enumerate_max_n;
  if (g.order() > limit) {
    throw GuardError("enumerate_rkdfs: order " + std::to_string(g.order()) + " exceeds limit " +
                     std::to_string(limit));
  }
  RkdfEnumeration out;
  const std::uint8_t lo = restricted ? 1 : 0;
  Labeling f(static_cast<std::size_t>(g.order()), lo);
  do {
    if (!restricted && !validate_rkdf(g, k, f).empty()) continue;
    if (cap && out.labelings.size() == *cap) {
      out.truncated = true;
      break;
    }
    out.labelings.push_back(f);
  } while (next_sequence(f.values, lo, 2));
  return out;
}

}  // namespace romandom
