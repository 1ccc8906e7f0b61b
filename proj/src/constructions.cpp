#include "romandom/constructions.hpp"

#include <algorithm>

#include "romandom/domatic.hpp"
#include "romandom/errors.hpp"

namespace romandom {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::optional<int> power_of_two_if_large_k(int n, int k) {
  if (n < 31 && static_cast<long long>(k) >= (1LL << n)) return 1 << n;
  return std::nullopt;
}

}  // namespace

std::optional<int> closed_form_gamma_kr(const FamilySpec& spec, int k) {
  if (k < 1) return std::nullopt;
  switch (spec.kind) {
    case FamilyKind::complete:
      return std::min(spec.n, 2 * k);
    case FamilyKind::complete_bipartite: {
      const int p = std::min(spec.p, spec.q);
      const int q = std::max(spec.p, spec.q);
      if (p < k || (p == k && q == k)) return p + q;
      if (p >= 3 * k) return 4 * k;
      if (p + q >= 2 * k + 1) return k + p;  // k <= p < 3k here
      return std::nullopt;
    }
    default:
      break;
  }
  if (spec.order() <= 2 * k) return spec.order();
  return std::nullopt;
}

std::optional<int> closed_form_d_rk(const FamilySpec& spec, int k) {
  if (k < 1) return std::nullopt;
  const int n = spec.order();
  const bool complete = spec.kind == FamilyKind::complete ||
                        (n == 1 && spec.kind != FamilyKind::complete_bipartite);
  if (complete) {
    if (n == 1) return k == 1 ? 1 : 2;
    if (n >= 2 * k) return n;
    if (k >= 2 && n >= 2 * k - 2) return 2 * k - 1;
  }
  if (spec.kind == FamilyKind::empty && k == 1) return 1;
  return power_of_two_if_large_k(n, k);
}

Labeling labeling_complete_minimum(int n, int k) {
  require(n >= 1 && k >= 1, "labeling_complete_minimum: need n >= 1, k >= 1");
  if (n <= 2 * k) return Labeling(static_cast<std::size_t>(n), 1);
  Labeling f(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < k; ++v) f[v] = 2;
  return f;
}

Family family_complete(int n, int k) {
  require(k >= 1, "family_complete: k must be >= 1");
  require(n >= 2 * k, "family_complete: requires n >= 2k (n = " + std::to_string(n) +
                          ", k = " + std::to_string(k) + ")");
  Family fam{k, {}};
  for (int i = 0; i < n; ++i) {
    Labeling f(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < k; ++j) f[(i + j) % n] = 2;
    fam.members.push_back(std::move(f));
  }
  return fam;
}

GraphFamily family_balanced_bipartite(int t, int k) {
  require(k >= 1, "family_balanced_bipartite: k must be >= 1");
  require(t >= 3, "family_balanced_bipartite: requires t >= 3 (got " + std::to_string(t) + ")");
  const int side = t * k;
  GraphFamily out{generate(FamilySpec::complete_bipartite(side, side)), Family{k, {}}};
  for (int i = 0; i < side; ++i) {
    Labeling f(static_cast<std::size_t>(2 * side), 0);
    for (int j = 0; j < k; ++j) {
      f[(i + j) % side] = 2;
      f[side + (i + j) % side] = 2;
    }
    out.family.members.push_back(std::move(f));
  }
  return out;
}

Family family_near_order(const Graph& g, int k) {
  const int n = g.order();
  require(k >= 2, "family_near_order: requires k >= 2");
  require(n >= 2 * k - 2 && n >= 1, "family_near_order: requires n >= 2k-2 (n = " +
                                         std::to_string(n) + ", k = " + std::to_string(k) + ")");
  Family fam{k, {}};
  for (int j = 0; j < 2 * k - 2; ++j) {
    Labeling f(static_cast<std::size_t>(n), 1);
    f[j] = 2;
    fam.members.push_back(std::move(f));
  }
  fam.members.emplace_back(static_cast<std::size_t>(n), 1);
  return fam;
}

Family family_nontrivial(const Graph& g, int k) {
  const int n = g.order();
  require(k >= 2, "family_nontrivial: requires k >= 2");
  require(n >= 2, "family_nontrivial: requires n >= 2");
  Labeling f(static_cast<std::size_t>(n), 2);
  f[0] = 1;
  Labeling h(static_cast<std::size_t>(n), 1);
  h[0] = 2;
  return Family{k, {f, h, Labeling(static_cast<std::size_t>(n), 1)}};
}

GraphFamily family_kdelta_sharpness(int k, const Guards& guards) {
  require(k >= 1, "family_kdelta_sharpness: k must be >= 1");
  if (k > guards.kdelta_max_k) {
    throw GuardError("family_kdelta_sharpness: k = " + std::to_string(k) + " exceeds limit " +
                     std::to_string(guards.kdelta_max_k) + " (" +
                     std::to_string(FamilySpec::kdelta_order(k)) + " vertices)");
  }
  const int m = FamilySpec::kdelta_copy_order(k);
  const int apex = k * m;
  GraphFamily out{generate(FamilySpec::kdelta_sharpness(k)), Family{k, {}}};
  const auto n = static_cast<std::size_t>(out.graph.order());

  // v^i_j with 1-based copy i and position j.
  auto vertex = [&](int i, int j) {
    if (j < 1 || j > m) {
      throw std::logic_error("kdelta construction index " + std::to_string(j) + " outside copy");
    }
    return static_cast<std::size_t>((i - 1) * m + (j - 1));
  };

  for (int i = 1; i <= k; ++i) {
    for (int s = 0; s <= k - 1; ++s) {
      Labeling f(n, 0);
      for (int j = 1; j <= k; ++j) f[vertex(i, j)] = 2;
      const int first = (i - 1) * k * k + (s + 1) * k + 1;
      for (int other = 1; other <= k; ++other) {
        if (other == i) continue;
        for (int j = first; j < first + k; ++j) f[vertex(other, j)] = 2;
      }
      out.family.members.push_back(std::move(f));
    }
  }
  for (int l = 1; l <= 2 * k; ++l) {
    Labeling h(n, 0);
    h[static_cast<std::size_t>(apex)] = 1;
    const int first = k * k * k + l * k + 1;
    for (int i = 1; i <= k; ++i) {
      for (int j = first; j < first + k; ++j) h[vertex(i, j)] = 2;
    }
    out.family.members.push_back(std::move(h));
  }
  return out;
}

Family family_from_balanced_subgraphs(const Graph& g, int k,
                                      const std::vector<BalancedSubgraph>& subgraphs) {
  require(k >= 1, "family_from_balanced_subgraphs: k must be >= 1");
  const int count = static_cast<int>(subgraphs.size());
  require(count == 2 * k || count == 2 * k - 1,
          "family_from_balanced_subgraphs: need 2k or 2k-1 subgraphs, got " +
              std::to_string(count));
  const int n = g.order();
  std::vector<int> in_x(n, 0);
  std::vector<int> in_y(n, 0);
  std::vector<Labeling> members;
  for (int i = 0; i < count; ++i) {
    const auto& sub = subgraphs[i];
    auto fail = [&](const std::string& why) {
      throw PreconditionError("subgraph " + std::to_string(i) + ": " + why);
    };
    Labeling f(static_cast<std::size_t>(n), 1);
    for (int v : sub.x) {
      if (v < 0 || v >= n) fail("X vertex " + std::to_string(v) + " out of range");
      if (f[v] != 1) fail("vertex " + std::to_string(v) + " listed twice");
      f[v] = 0;
    }
    for (int v : sub.y) {
      if (v < 0 || v >= n) fail("Y vertex " + std::to_string(v) + " out of range");
      if (f[v] != 1) fail("vertex " + std::to_string(v) + " listed twice or in both X and Y");
      f[v] = 2;
    }
    if (sub.x.size() != sub.y.size()) fail("|X| != |Y|");
    for (int v : sub.x) {
      int into_y = 0;
      for (int u : g.neighbors(v)) into_y += f[u] == 2 ? 1 : 0;
      if (into_y < k) {
        fail("X vertex " + std::to_string(v) + " has " + std::to_string(into_y) +
             " neighbours in Y, needs " + std::to_string(k));
      }
      ++in_x[v];
    }
    for (int v : sub.y) ++in_y[v];
    members.push_back(std::move(f));
  }
  for (int u = 0; u < n; ++u) {
    const bool balanced = count == 2 * k ? (in_x[u] == k && in_y[u] == k) : in_x[u] == in_y[u];
    if (!balanced) {
      throw PreconditionError("vertex " + std::to_string(u) + " lies in " +
                              std::to_string(in_x[u]) + " X-sides and " +
                              std::to_string(in_y[u]) + " Y-sides; membership is unbalanced");
    }
  }
  if (count == 2 * k - 1) members.emplace_back(static_cast<std::size_t>(n), 1);
  Family fam{k, std::move(members)};
  auto violations = validate_family(g, k, fam);
  if (!violations.empty()) {
    throw PreconditionError("resulting family is invalid: " + violations.front().detail);
  }
  return fam;
}

}  // namespace romandom
