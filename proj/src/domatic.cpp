#include "romandom/domatic.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>

#include "romandom/errors.hpp"
#include "romandom/rkdf.hpp"

namespace romandom {

namespace {

using Clock = std::chrono::steady_clock;

// Labels and residual capacities packed one byte per vertex, 16 vertices max.
constexpr int kPackedMaxN = 16;
using Packed = std::array<std::uint64_t, 2>;
constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;

Packed pack(const std::vector<std::uint8_t>& values) {
  Packed p{0, 0};
  for (std::size_t v = 0; v < values.size(); ++v) {
    p[v / 8] |= std::uint64_t{values[v]} << (8 * (v % 8));
  }
  return p;
}

/// Every byte of `f` is <= the matching byte of `residual` (bytes < 128).
bool fits(const Packed& residual, const Packed& f) {
  return (((residual[0] | kHighBits) - f[0]) & kHighBits) == kHighBits &&
         (((residual[1] | kHighBits) - f[1]) & kHighBits) == kHighBits;
}

void subtract(Packed& residual, const Packed& f) {
  residual[0] -= f[0];
  residual[1] -= f[1];
}

void add(Packed& residual, const Packed& f) {
  residual[0] += f[0];
  residual[1] += f[1];
}

int byte_at(const Packed& p, int v) { return static_cast<int>((p[v / 8] >> (8 * (v % 8))) & 0xFF); }

void check_family_guards(const Graph& g, int k, int max_n, int max_k, const char* what) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  if (g.order() < 1) throw PreconditionError(std::string(what) + ": graph must be nonempty");
  if (g.order() > max_n || k > max_k) {
    throw GuardError(std::string(what) + ": limits are n <= " + std::to_string(max_n) +
                     ", k <= " + std::to_string(max_k) + " (got n = " +
                     std::to_string(g.order()) + ", k = " + std::to_string(k) + ")");
  }
  if (g.order() > kPackedMaxN || 2 * k > 127) {
    throw GuardError(std::string(what) + ": hard limits are n <= 16 and k <= 63");
  }
}

struct Candidate {
  Labeling labels;
  Packed packed;
  int weight = 0;
  std::vector<std::uint8_t> closed_sums;  // f(N[v]) per vertex
};

class PackingSearch {
public:
  PackingSearch(const Graph& g, int k, std::vector<Labeling> pool, int stop_at)
      : n_(g.order()), k_(k), stop_at_(stop_at) {
    closed_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v] = g.neighbors(v);
      closed_[v].push_back(v);
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const Labeling& a, const Labeling& b) { return weight(a) < weight(b); });
    candidates_.reserve(pool.size());
    for (auto& f : pool) {
      Candidate c;
      c.packed = pack(f.values);
      c.weight = weight(f);
      c.closed_sums.resize(n_);
      for (Vertex v = 0; v < n_; ++v) {
        int s = 0;
        for (Vertex u : closed_[v]) s += f[u];
        c.closed_sums[v] = static_cast<std::uint8_t>(s);
      }
      c.labels = std::move(f);
      candidates_.push_back(std::move(c));
    }
    residual_ = pack(std::vector<std::uint8_t>(n_, static_cast<std::uint8_t>(2 * k_)));
    residual_total_ = 2 * k_ * n_;
  }

  void run() {
    std::vector<int> all(candidates_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    descend(all);
  }

  int best_size() const { return static_cast<int>(best_.size()); }
  std::uint64_t nodes() const { return nodes_; }

  Family best_family() const {
    Family fam{k_, {}};
    for (int i : best_) fam.members.push_back(candidates_[i].labels);
    return fam;
  }

private:
  /// Most further members that can be added from `open` given residual
  /// capacities: weights against the total, and closed-neighbourhood sums
  /// against each neighbourhood's residual.
  int upper_bound(const std::vector<int>& open) const {
    int t = 0;
    int used = 0;
    for (int i : open) {
      used += candidates_[i].weight;
      if (used > residual_total_) break;
      ++t;
    }
    if (t == 0 || static_cast<int>(chosen_.size()) + t <= best_size()) return t;

    const int max_sum = 2 * n_ + 1;
    std::vector<int> hist(static_cast<std::size_t>(n_) * max_sum, 0);
    for (int i : open) {
      const auto& sums = candidates_[i].closed_sums;
      for (int v = 0; v < n_; ++v) ++hist[static_cast<std::size_t>(v) * max_sum + sums[v]];
    }
    for (int v = 0; v < n_; ++v) {
      int cap = 0;
      for (Vertex u : closed_[v]) cap += byte_at(residual_, u);
      int count = 0;
      int spent = 0;
      for (int s = 0; s < max_sum && count < t; ++s) {
        int h = hist[static_cast<std::size_t>(v) * max_sum + s];
        if (h == 0) continue;
        int take = s == 0 ? h : std::min(h, (cap - spent) / s);
        take = std::min(take, t - count);
        count += take;
        spent += take * s;
        if (take < h) break;
      }
      t = std::min(t, count);
    }
    return t;
  }

  void descend(const std::vector<int>& open) {
    ++nodes_;
    if (chosen_.size() > best_.size()) {
      best_ = chosen_;
      if (best_size() >= stop_at_) {
        done_ = true;
        return;
      }
    }
    if (open.empty()) return;
    const int size = static_cast<int>(chosen_.size());
    if (size + upper_bound(open) <= best_size()) return;

    std::vector<int> child;
    for (std::size_t p = 0; p < open.size(); ++p) {
      const auto& c = candidates_[open[p]];
      // Later siblings weigh at least c.weight.
      if (size + residual_total_ / c.weight <= best_size()) break;
      if (size + static_cast<int>(open.size() - p) <= best_size()) break;
      subtract(residual_, c.packed);
      residual_total_ -= c.weight;
      child.clear();
      for (std::size_t q = p + 1; q < open.size(); ++q) {
        if (fits(residual_, candidates_[open[q]].packed)) child.push_back(open[q]);
      }
      chosen_.push_back(open[p]);
      descend(child);
      chosen_.pop_back();
      add(residual_, c.packed);
      residual_total_ += c.weight;
      if (done_) return;
    }
  }

  int n_;
  int k_;
  int stop_at_;
  std::vector<std::vector<Vertex>> closed_;
  std::vector<Candidate> candidates_;
  Packed residual_{};
  int residual_total_ = 0;
  std::vector<int> chosen_;
  std::vector<int> best_;
  bool done_ = false;
  std::uint64_t nodes_ = 0;
};

class ExhaustivePacking {
public:
  ExhaustivePacking(std::vector<Packed> pool, Packed capacity)
      : pool_(std::move(pool)), residual_(capacity) {}

  int run() {
    descend(0, 0);
    return best_;
  }

private:
  void descend(std::size_t start, int size) {
    best_ = std::max(best_, size);
    for (std::size_t i = start; i < pool_.size(); ++i) {
      if (!fits(residual_, pool_[i])) continue;
      subtract(residual_, pool_[i]);
      descend(i + 1, size + 1);
      add(residual_, pool_[i]);
    }
  }

  std::vector<Packed> pool_;
  Packed residual_;
  int best_ = 0;
};

}  // namespace

std::vector<Violation> validate_family(const Graph& g, int k, const Family& fam) {
  std::vector<Violation> out;
  bool well_formed = true;
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    for (auto v : validate_rkdf(g, k, fam.members[i])) {
      if (v.kind == ViolationKind::length_mismatch || v.kind == ViolationKind::value_out_of_range) {
        well_formed = false;
      }
      v.member = static_cast<int>(i);
      out.push_back(std::move(v));
    }
  }
  std::map<Labeling, std::size_t> first_seen;
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    auto [it, inserted] = first_seen.emplace(fam.members[i], i);
    if (!inserted) {
      out.push_back({ViolationKind::duplicate_function, std::nullopt, static_cast<int>(i),
                     "member " + std::to_string(i) + " repeats member " +
                         std::to_string(it->second)});
    }
  }
  if (!well_formed) return out;
  auto sums = vertex_sums(fam);
  for (std::size_t v = 0; v < sums.size(); ++v) {
    if (sums[v] > 2 * k) {
      out.push_back({ViolationKind::capacity_exceeded, static_cast<int>(v), std::nullopt,
                     "labels sum to " + std::to_string(sums[v]) + " > 2k = " +
                         std::to_string(2 * k)});
    }
  }
  return out;
}

SolveResult d_rk_exact(const Graph& g, int k, const Guards& guards) {
  check_family_guards(g, k, guards.d_rk_max_n, guards.d_rk_max_k, "d_rk_exact");
  auto start = Clock::now();
  Guards pool_guards = guards;
  pool_guards.enumerate_max_n = std::max(pool_guards.enumerate_max_n, g.order());
  pool_guards.enumerate_restricted_max_n =
      std::max(pool_guards.enumerate_restricted_max_n, g.order());
  auto pool = enumerate_rkdfs(g, k, std::nullopt, pool_guards).labelings;

  const auto deg = degree_stats(g);
  const int n = g.order();
  int min_weight = n;
  for (const auto& f : pool) min_weight = std::min(min_weight, weight(f));
  int stop_at = static_cast<int>(pool.size());
  stop_at = std::min(stop_at, deg.min_degree + 2 * k);
  stop_at = std::min(stop_at, std::max(deg.max_degree, k - 1) + k);
  stop_at = std::min(stop_at, 2 * k * n / min_weight);

  PackingSearch search(g, k, std::move(pool), stop_at);
  search.run();
  SolveResult r;
  r.quantity = Quantity::d_rk;
  r.value = search.best_size();
  r.witness = search.best_family();
  r.nodes_explored = search.nodes();
  r.elapsed = Clock::now() - start;
  return r;
}

int d_rk_oracle(const Graph& g, int k, const Guards& guards) {
  check_family_guards(g, k, guards.d_rk_oracle_max_n, guards.d_rk_oracle_max_k, "d_rk_oracle");
  Guards pool_guards = guards;
  pool_guards.enumerate_max_n = std::max(pool_guards.enumerate_max_n, g.order());
  auto pool = enumerate_rkdfs(g, k, std::nullopt, pool_guards).labelings;
  std::vector<Packed> packed;
  packed.reserve(pool.size());
  for (const auto& f : pool) packed.push_back(pack(f.values));
  auto capacity = pack(std::vector<std::uint8_t>(g.order(), static_cast<std::uint8_t>(2 * k)));
  return ExhaustivePacking(std::move(packed), capacity).run();
}

// ---------------------------------------------------------------------------
// k-domatic number

namespace {

class DisjointSetPacking {
public:
  DisjointSetPacking(std::vector<std::uint64_t> sets, std::uint64_t universe)
      : sets_(std::move(sets)), universe_(universe) {
    min_size_ = 64;
    for (auto s : sets_) min_size_ = std::min(min_size_, std::popcount(s));
    stop_at_ = std::popcount(universe_) / min_size_;
  }

  void run() { descend(0, universe_); }

  const std::vector<std::uint64_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  void descend(std::size_t start, std::uint64_t free) {
    ++nodes_;
    if (chosen_.size() > best_.size()) {
      best_ = chosen_;
      if (static_cast<int>(best_.size()) >= stop_at_) done_ = true;
    }
    const int size = static_cast<int>(chosen_.size());
    if (size + std::popcount(free) / min_size_ <= static_cast<int>(best_.size())) return;
    for (std::size_t i = start; i < sets_.size() && !done_; ++i) {
      if ((sets_[i] & ~free) != 0) continue;
      chosen_.push_back(sets_[i]);
      descend(i + 1, free & ~sets_[i]);
      chosen_.pop_back();
    }
  }

  std::vector<std::uint64_t> sets_;
  std::uint64_t universe_;
  int min_size_ = 1;
  int stop_at_ = 1;
  std::vector<std::uint64_t> chosen_;
  std::vector<std::uint64_t> best_;
  bool done_ = false;
  std::uint64_t nodes_ = 0;
};

bool dominates(const std::vector<std::uint64_t>& adj, int k, std::uint64_t set,
               std::uint64_t universe) {
  for (auto out = universe & ~set; out != 0; out &= out - 1) {
    int v = std::countr_zero(out);
    if (std::popcount(adj[v] & set) < k) return false;
  }
  return true;
}

}  // namespace

SolveResult d_k_exact(const Graph& g, int k, const Guards& guards) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  if (g.order() < 1) throw PreconditionError("d_k_exact: graph must be nonempty");
  if (g.order() > guards.d_k_max_n || g.order() > 24) {
    throw GuardError("d_k_exact: order " + std::to_string(g.order()) + " exceeds limit " +
                     std::to_string(std::min(guards.d_k_max_n, 24)));
  }
  auto start = Clock::now();
  const int n = g.order();
  std::vector<std::uint64_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.row_mask(v);
  const std::uint64_t universe = (std::uint64_t{1} << n) - 1;

  // Minimal k-dominating sets suffice: supersets of k-dominating sets are
  // k-dominating, so leftover vertices can join any block.
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t s = 1; s <= universe; ++s) {
    if (!dominates(adj, k, s, universe)) continue;
    bool is_minimal = true;
    for (auto bits = s; bits != 0 && is_minimal; bits &= bits - 1) {
      if (dominates(adj, k, s & ~(bits & -bits), universe)) is_minimal = false;
    }
    if (is_minimal) minimal.push_back(s);
  }
  std::stable_sort(minimal.begin(), minimal.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  DisjointSetPacking search(std::move(minimal), universe);
  search.run();

  VertexPartition part;
  std::uint64_t covered = 0;
  for (auto s : search.best()) {
    covered |= s;
    std::vector<int> block;
    for (auto bits = s; bits != 0; bits &= bits - 1) block.push_back(std::countr_zero(bits));
    part.blocks.push_back(std::move(block));
  }
  for (auto bits = universe & ~covered; bits != 0; bits &= bits - 1) {
    part.blocks.back().push_back(std::countr_zero(bits));
  }
  std::sort(part.blocks.back().begin(), part.blocks.back().end());

  SolveResult r;
  r.quantity = Quantity::d_k;
  r.value = static_cast<int>(part.blocks.size());
  r.witness = std::move(part);
  r.nodes_explored = search.nodes();
  r.elapsed = Clock::now() - start;
  return r;
}

bool is_k_domatic_partition(const Graph& g, int k, const VertexPartition& p) {
  std::vector<int> seen(g.order(), 0);
  for (const auto& block : p.blocks) {
    if (block.empty()) return false;
    VertexSet s{std::vector<std::uint8_t>(g.order(), 0)};
    for (int v : block) {
      if (v < 0 || v >= g.order() || seen[v]++) return false;
      s.mask[v] = 1;
    }
    if (!is_k_dominating(g, k, s)) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

}  // namespace romandom
