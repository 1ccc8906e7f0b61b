#pragma once

#include <optional>
#include <vector>

#include "romandom/family.hpp"
#include "romandom/graph.hpp"
#include "romandom/guards.hpp"
#include "romandom/labeling.hpp"

namespace romandom {

// Closed forms -------------------------------------------------------------

/// γ_kR for the named families where a formula is known: K_n, K_{p,q}, and
/// any graph with n <= 2k. Empty when none applies.
std::optional<int> closed_form_gamma_kr(const FamilySpec& spec, int k);

/// d_R^k for K_n (n >= 2k, or k >= 2 with 2k-2 <= n <= 2k-1), K_1, the
/// edgeless graph with k = 1, and any graph with k >= 2^n.
std::optional<int> closed_form_d_rk(const FamilySpec& spec, int k);

// Explicit constructions ---------------------------------------------------

struct GraphFamily {
  Graph graph;
  Family family;
};

/// Weight-min{n,2k} RkDF on K_n: 2 on vertices 0..k-1 and 0 elsewhere when
/// n >= 2k+1, all ones otherwise.
Labeling labeling_complete_minimum(int n, int k);

/// n functions on K_n (n >= 2k); f_i is 2 on vertices i..i+k-1 (mod n).
Family family_complete(int n, int k);

/// K_{tk,tk} with tk functions; f_i is 2 on u_i..u_{i+k-1} and v_i..v_{i+k-1}
/// (indices mod tk). Requires t >= 3.
GraphFamily family_balanced_bipartite(int t, int k);

/// 2k-1 functions for any graph with k >= 2 and n >= 2k-2: f_j is 2 at
/// vertex j and 1 elsewhere (j < 2k-2), plus the all-ones function.
Family family_near_order(const Graph& g, int k);

/// The three functions {f, g, h} witnessing d_R^k >= 3 on a graph with
/// n >= 2, k >= 2; the distinguished vertex is 0.
Family family_nontrivial(const Graph& g, int k);

/// The graph made of k copies of K_{k^3+(2k+1)k} plus an apex joined to the
/// first k vertices of each copy, with the k^2 + 2k functions showing
/// d_R^k = δ + 2k. Member order: f_i^s by (i, s), then h_1..h_{2k}.
GraphFamily family_kdelta_sharpness(int k, const Guards& guards = {});

struct BalancedSubgraph {
  std::vector<int> x;  // labelled 0
  std::vector<int> y;  // labelled 2
};

/// Turns 2k or 2k-1 balanced bipartite subgraphs (X_i, Y_i) into functions
/// that are 0 on X_i, 2 on Y_i and 1 elsewhere; with 2k-1 subgraphs the
/// all-ones function is appended. Throws PreconditionError naming the
/// failing subgraph and condition.
Family family_from_balanced_subgraphs(const Graph& g, int k,
                                      const std::vector<BalancedSubgraph>& subgraphs);

}  // namespace romandom
