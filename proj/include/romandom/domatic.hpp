#pragma once

#include <vector>

#include "romandom/family.hpp"
#include "romandom/graph.hpp"
#include "romandom/guards.hpp"
#include "romandom/labeling.hpp"
#include "romandom/solve_result.hpp"

namespace romandom {

/// Checks the three family conditions: every member is an RkDF for (g, k),
/// members are pairwise distinct, and Σ_i f_i(v) <= 2k at every vertex.
/// Member-level violations carry the member index; capacity violations the
/// vertex. Empty result means valid.
std::vector<Violation> validate_family(const Graph& g, int k, const Family& fam);

inline bool is_roman_family(const Graph& g, int k, const Family& fam) {
  return validate_family(g, k, fam).empty();
}

/**
 * d_R^k(G): the largest Roman (k,k)-dominating family.
 *
 * Candidates are all RkDFs ordered by (weight, labels). A depth-first search
 * adds candidates with strictly increasing index while per-vertex residual
 * capacity allows, pruning with weight and closed-neighbourhood capacity
 * bounds. The search stops early once a family reaches
 * min{δ+2k, max{Δ,k-1}+k, ⌊2kn/γ_kR⌋}. The witness is the first family found
 * at the optimum.
 */
SolveResult d_rk_exact(const Graph& g, int k, const Guards& guards = {});

/// d_R^k(G) by exhaustive subset search over all RkDFs with capacity checks
/// only.
int d_rk_oracle(const Graph& g, int k, const Guards& guards = {});

/// d_k(G): the most blocks in a partition of V into k-dominating sets.
SolveResult d_k_exact(const Graph& g, int k, const Guards& guards = {});

/// Blocks are disjoint, cover V and are each k-dominating.
bool is_k_domatic_partition(const Graph& g, int k, const VertexPartition& p);

}  // namespace romandom
