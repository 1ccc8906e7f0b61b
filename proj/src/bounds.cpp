#include "romandom/bounds.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "romandom/domatic.hpp"
#include "romandom/errors.hpp"
#include "romandom/rkdf.hpp"

namespace romandom {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::less_equal: return "<=";
    case Relation::equal: return "==";
    case Relation::iff: return "iff";
    case Relation::implies: return "implies";
  }
  return "?";
}

namespace {

class Records {
public:
  void le(std::string id, long long lhs, long long rhs, std::string notes) {
    add(std::move(id), lhs, rhs, Relation::less_equal, lhs <= rhs, std::move(notes));
  }
  void eq(std::string id, long long lhs, long long rhs, std::string notes) {
    add(std::move(id), lhs, rhs, Relation::equal, lhs == rhs, std::move(notes));
  }
  void iff(std::string id, bool lhs, bool rhs, std::string notes) {
    add(std::move(id), lhs, rhs, Relation::iff, lhs == rhs, std::move(notes));
  }
  void implies(std::string id, bool lhs, bool rhs, std::string notes) {
    add(std::move(id), lhs, rhs, Relation::implies, !lhs || rhs, std::move(notes));
  }
  void skip(std::string id, Relation relation, std::string reason) {
    BoundRecord r;
    r.theorem_id = std::move(id);
    r.relation = relation;
    r.notes = "not applicable: " + std::move(reason);
    out_.push_back(std::move(r));
  }

  std::vector<BoundRecord> sorted() && {
    std::stable_sort(out_.begin(), out_.end(), [](const BoundRecord& a, const BoundRecord& b) {
      return a.theorem_id < b.theorem_id;
    });
    return std::move(out_);
  }

private:
  void add(std::string id, long long lhs, long long rhs, Relation rel, bool holds,
           std::string notes) {
    BoundRecord r;
    r.theorem_id = std::move(id);
    r.applicable = true;
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = rel;
    r.holds = holds;
    r.equality = lhs == rhs;
    r.notes = std::move(notes);
    out_.push_back(std::move(r));
  }

  std::vector<BoundRecord> out_;
};

int require_value(const std::optional<int>& v, const char* name) {
  if (!v) throw PreconditionError(std::string("check_graph: missing value ") + name);
  return *v;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

SolvedValues solve_all(const Graph& g, int k, const Guards& guards) {
  SolvedValues vals;
  vals.gamma_k = gamma_k_exact(g, k, guards).value;
  vals.gamma_kr = gamma_kr_exact(g, k, guards).value;
  vals.d_k = d_k_exact(g, k, guards).value;
  auto d = d_rk_exact(g, k, guards);
  vals.d_rk = d.value;
  vals.d_rk_family = std::get<Family>(d.witness);
  return vals;
}

std::optional<BipartiteWitness> surplus_bipartite_witness(const Graph& g, int k,
                                                          const Guards& guards) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const int n = g.order();
  if (n > guards.witness_max_n || n > 64) {
    throw GuardError("surplus_bipartite_witness: order " + std::to_string(n) +
                     " exceeds limit " + std::to_string(guards.witness_max_n));
  }
  std::vector<std::uint64_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.row_mask(v);

  std::optional<BipartiteWitness> found;
  std::vector<int> y;
  // Preorder over sorted sequences visits Y in lexicographic order.
  std::function<void(int, std::uint64_t)> visit = [&](int next, std::uint64_t y_mask) {
    if (found) return;
    const int size = static_cast<int>(y.size());
    if (size >= k) {
      std::vector<int> eligible;
      for (Vertex v = 0; v < n; ++v) {
        if ((y_mask >> v) & 1U) continue;
        if (std::popcount(adj[v] & y_mask) >= k) eligible.push_back(v);
      }
      if (static_cast<int>(eligible.size()) > size) {
        eligible.resize(static_cast<std::size_t>(size) + 1);
        found = BipartiteWitness{std::move(eligible), y};
        return;
      }
    }
    // |X| > |Y| forces 2|Y| + 1 <= n.
    if (2 * (size + 1) + 1 > n) return;
    for (int v = next; v < n && !found; ++v) {
      y.push_back(v);
      visit(v + 1, y_mask | (std::uint64_t{1} << v));
      y.pop_back();
    }
  };
  visit(0, 0);
  return found;
}

std::vector<BoundRecord> check_graph(const Graph& g, int k, const SolvedValues& vals,
                                     const Guards& guards) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const long long gk = require_value(vals.gamma_k, "gamma_k");
  const long long gr = require_value(vals.gamma_kr, "gamma_kR");
  const long long dk = require_value(vals.d_k, "d_k");
  const long long d = require_value(vals.d_rk, "d_Rk");
  const long long n = g.order();
  const auto deg = degree_stats(g);
  const long long delta = deg.min_degree;
  const long long Delta = deg.max_degree;
  const long long kk = k;
  const bool complete = is_complete(g);
  const bool edgeless = is_edgeless(g);

  Records r;

  r.le("eq1", gk, gr, "gamma_k <= gamma_kR");
  r.le("eq1-upper", gr, 2 * gk, "gamma_kR <= 2 gamma_k");
  r.le("eq23", k >= 2 ? 2 : 1, d, "d_Rk >= 1, and >= 2 when k >= 2");
  r.le("KV-min", std::min(n, gk + kk), gr, "gamma_kR >= min{n, gamma_k + k}");

  if (n <= 2 * kk) {
    r.eq("V0", gr, n, "n <= 2k: gamma_kR = n");
    r.skip("V0-lower", Relation::less_equal, "n <= 2k");
  } else {
    r.skip("V0", Relation::equal, "n >= 2k+1");
    r.le("V0-lower", 2 * kk, gr, "n >= 2k+1: gamma_kR >= 2k");
  }

  if (Delta >= kk) {
    r.le("Delta", ceil_div(2 * n * kk, Delta + kk), gr, "gamma_kR >= ceil(2nk / (Delta + k))");
  } else {
    r.skip("Delta", Relation::less_equal, "Delta < k");
  }

  std::optional<BipartiteWitness> witness;
  const bool witness_in_guard = n <= guards.witness_max_n;
  if (witness_in_guard) {
    witness = surplus_bipartite_witness(g, k, guards);
    r.iff("V1", gr < n, witness.has_value(),
          "gamma_kR < n iff a surplus bipartite subgraph exists");
  } else {
    r.skip("V1", Relation::iff, "order above witness search limit");
  }

  // gammast and its equality clause.
  r.le("gammast", gr * d, 2 * kk * n, "gamma_kR * d_Rk <= 2kn");
  if (gr * d == 2 * kk * n) {
    if (vals.d_rk_family) {
      const auto& fam = *vals.d_rk_family;
      bool tight = static_cast<long long>(fam.size()) == d;
      for (const auto& f : fam.members) tight = tight && weight(f) == gr;
      for (int s : vertex_sums(fam)) tight = tight && s == 2 * k;
      r.implies("gammast-eq", true, tight,
                "equality forces every member weight gamma_kR and every vertex sum 2k");
    } else {
      r.skip("gammast-eq", Relation::implies, "no witness family supplied");
    }
  } else {
    r.skip("gammast-eq", Relation::implies, "gamma_kR * d_Rk < 2kn");
  }

  if (n >= 2) {
    r.le("c1", gr + d, n + 2 * kk, "gamma_kR + d_Rk <= n + 2k");
    r.iff("c1-eq", gr + d == n + 2 * kk,
          (gr == n && d == 2 * kk) || (gr == 2 * kk && d == n),
          "equality iff (gamma_kR = n and d_Rk = 2k) or (gamma_kR = 2k and d_Rk = n)");
  } else {
    r.skip("c1", Relation::less_equal, "n < 2");
    r.skip("c1-eq", Relation::iff, "n < 2");
  }

  r.le("kdelta", d, delta + 2 * kk, "d_Rk <= delta + 2k");
  if (deg.regular) {
    r.le("reg", d, std::max(2 * kk - 1, delta + kk), "d_Rk <= max{2k-1, delta+k}");
  } else {
    r.skip("reg", Relation::less_equal, "graph is not regular");
  }
  r.le("Delta1", d, std::max(Delta, kk - 1) + kk, "d_Rk <= max{Delta, k-1} + k");
  r.le("cor1", dk, d, "d_k <= d_Rk");
  r.le("cor1-upper", d * std::min(n, gk + kk), 2 * kk * n,
       "d_Rk * min{n, gamma_k + k} <= 2kn");

  const bool small_degree = kk >= Delta + 1;
  const bool near_order = k >= 2 && n >= 2 * kk - 2;
  if (small_degree) {
    r.le("obs", d, 2 * kk - 1, "k >= Delta+1: d_Rk <= 2k-1");
  } else {
    r.skip("obs", Relation::less_equal, "k <= Delta");
  }
  if (near_order) {
    r.le("obs2", 2 * kk - 1, d, "k >= 2, n >= 2k-2: d_Rk >= 2k-1");
  } else {
    r.skip("obs2", Relation::less_equal, "needs k >= 2 and n >= 2k-2");
  }
  if (near_order && small_degree) {
    r.eq("obs2-cor", d, 2 * kk - 1, "k >= 2, n >= 2k-2, k >= Delta+1: d_Rk = 2k-1");
  } else {
    r.skip("obs2-cor", Relation::equal, "needs k >= 2, n >= 2k-2 and k >= Delta+1");
  }
  if (n < 31 && kk >= (1LL << n)) {
    r.eq("mapping", d, 1LL << n, "k >= 2^n: d_Rk = 2^n");
  } else {
    r.skip("mapping", Relation::equal, "k < 2^n");
  }

  r.iff("obs1", d == 1, k == 1 && edgeless, "d_Rk = 1 iff k = 1 and G is edgeless");
  if (k >= 2) {
    r.iff("obs-trivial", d == 2, n == 1, "k >= 2: d_Rk = 2 iff G is trivial");
  } else {
    r.skip("obs-trivial", Relation::iff, "k = 1");
  }
  if (k == 1) {
    r.iff("SV", d == 1, edgeless, "d_R = 1 iff G is edgeless");
  } else {
    r.skip("SV", Relation::iff, "k != 1");
  }
  if (k == 1 && n >= 2) {
    r.iff("1d=n", d == n, complete, "d_R = n iff G is complete");
  } else {
    r.skip("1d=n", Relation::iff, "needs k = 1 and n >= 2");
  }

  if (complete) {
    r.eq("complete", gr, std::min(n, 2 * kk), "gamma_kR(K_n) = min{n, 2k}");
    if (k == 1) {
      r.eq("Knk=1", d, n,
           "d_R(K_n) = n (reads as 1 only for n = 1; the literal 'd_R(K_n) = 1 for all n' "
           "contradicts the n >= 2k case and is not encoded)");
    } else {
      r.skip("Knk=1", Relation::equal, "k != 1");
    }
    if (n >= 2 * kk) {
      r.eq("Knk", d, n, "n >= 2k: d_Rk(K_n) = n");
    } else {
      r.le("Knk", d, 2 * kk - 1, "n <= 2k-1: d_Rk(K_n) <= 2k-1");
    }
    if (k >= 2 && n >= 2 * kk - 2 && n <= 2 * kk - 1) {
      r.eq("Knk-near", d, 2 * kk - 1, "k >= 2, 2k-2 <= n <= 2k-1: d_Rk(K_n) = 2k-1");
    } else {
      r.skip("Knk-near", Relation::equal, "needs k >= 2 and 2k-2 <= n <= 2k-1");
    }
  } else {
    for (const char* id : {"complete", "Knk=1", "Knk", "Knk-near"}) {
      r.skip(id, Relation::equal, "graph is not complete");
    }
  }

  auto [p, q] = complete_bipartite_parts(g);
  if (p >= 1) {
    const long long pp = p;
    const long long qq = q;
    long long expected = 0;
    if (p < k || (p == k && q == k)) {
      expected = pp + qq;
    } else if (p >= 3 * k) {
      expected = 4 * kk;
    } else {
      expected = kk + pp;
    }
    r.eq("pq", gr, expected, "gamma_kR(K_{p,q}) from the three-case formula");
    if (p < k || (p == k && q == k)) {
      r.le("Kpq.1", d, 2 * kk, "p < k or p = q = k: d_Rk <= 2k");
    } else {
      r.skip("Kpq.1", Relation::less_equal, "needs p < k or p = q = k");
    }
    if (pp + qq >= 2 * kk + 1 && p >= k && p <= 3 * k) {
      r.le("Kpq.2", d * (kk + pp), 2 * kk * (pp + qq),
           "p+q >= 2k+1, k <= p <= 3k: d_Rk (k+p) <= 2k(p+q)");
    } else {
      r.skip("Kpq.2", Relation::less_equal, "needs p+q >= 2k+1 and k <= p <= 3k");
    }
    if (p >= 3 * k) {
      r.le("Kpq.3", 2 * d, pp + qq, "p >= 3k: 2 d_Rk <= p+q");
    } else {
      r.skip("Kpq.3", Relation::less_equal, "needs p >= 3k");
    }
  } else {
    for (const char* id : {"pq", "Kpq.1", "Kpq.2", "Kpq.3"}) {
      r.skip(id, Relation::less_equal, "graph is not complete bipartite");
    }
  }

  if (n >= 2 && witness_in_guard) {
    r.implies("Th2", gr == n && d == 2 * kk, !witness.has_value(),
              "gamma_kR = n and d_Rk = 2k imply no surplus bipartite subgraph");
  } else {
    r.skip("Th2", Relation::implies, "needs n >= 2 within the witness search limit");
  }

  return std::move(r).sorted();
}

std::vector<BoundRecord> check_nordhaus_gaddum(const Graph& g, int k, int d_rk,
                                               int d_rk_complement) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const long long n = g.order();
  const auto deg = degree_stats(g);
  const long long delta = deg.min_degree;
  const long long spread = deg.max_degree - deg.min_degree;
  const long long kk = k;
  const long long sum = static_cast<long long>(d_rk) + d_rk_complement;

  Records r;
  r.le("knord", sum, n + 4 * kk - 2, "d_Rk(G) + d_Rk(complement) <= n + 4k - 2");
  r.implies("knord-eq", sum == n + 4 * kk - 2, spread == 1,
            "equality only when Delta - delta = 1");
  if (deg.regular) {
    long long rhs = std::max({4 * kk - 2, n + 2 * kk - 1, n + 3 * kk - 2 - delta,
                              3 * kk + delta - 1});
    r.le("regnord", sum, rhs, "regular: sum <= max{4k-2, n+2k-1, n+3k-2-delta, 3k+delta-1}");
    if (k >= 2 && n >= 2) {
      r.le("final-cor", sum, n + 4 * kk - 4, "regular, k >= 2, n >= 2: sum <= n + 4k - 4");
    } else {
      r.skip("final-cor", Relation::less_equal, "needs k >= 2 and n >= 2");
    }
  } else {
    r.skip("regnord", Relation::less_equal, "graph is not regular");
    r.skip("final-cor", Relation::less_equal, "graph is not regular");
  }
  if (k == 1) {
    r.le("ng-k1", sum, n + 2, "d_R(G) + d_R(complement) <= n + 2");
    r.implies("ng-k1-eq", sum == n + 2, spread == 1, "equality only when Delta = delta + 1");
  } else {
    r.skip("ng-k1", Relation::less_equal, "k != 1");
    r.skip("ng-k1-eq", Relation::implies, "k != 1");
  }
  return std::move(r).sorted();
}

std::vector<BoundRecord> check_nordhaus_gaddum(const Graph& g, int k, const Guards& guards) {
  const int d = d_rk_exact(g, k, guards).value;
  const int d_bar = d_rk_exact(complement(g), k, guards).value;
  return check_nordhaus_gaddum(g, k, d, d_bar);
}

std::size_t count_violations(const std::vector<BoundRecord>& records) {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const BoundRecord& r) { return r.violated(); }));
}

}  // namespace romandom
