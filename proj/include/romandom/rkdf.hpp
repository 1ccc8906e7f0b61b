#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "romandom/graph.hpp"
#include "romandom/guards.hpp"
#include "romandom/labeling.hpp"
#include "romandom/solve_result.hpp"

namespace romandom {

/// Checks that every 0-labelled vertex has at least k neighbours labelled 2.
/// Structural problems (length, value range) are reported alone; semantic
/// checking only runs on a well-formed labeling. Empty result means valid.
std::vector<Violation> validate_rkdf(const Graph& g, int k, const Labeling& f);

inline bool is_rkdf(const Graph& g, int k, const Labeling& f) {
  return validate_rkdf(g, k, f).empty();
}

/// Every vertex outside S has at least k neighbours in S.
bool is_k_dominating(const Graph& g, int k, const VertexSet& s);

/// γ_kR(G) by branch and bound. Labels are assigned in vertex order trying
/// 0, 1, 2; the witness is the lexicographically least minimum-weight RkDF.
SolveResult gamma_kr_exact(const Graph& g, int k, const Guards& guards = {});

/// γ_kR(G) by scanning all 3^n labelings through validate_rkdf.
int gamma_kr_oracle(const Graph& g, int k, const Guards& guards = {});

/// γ_k(G), the minimum size of a k-dominating set. Witness is the
/// lexicographically least optimal 0/1 mask.
SolveResult gamma_k_exact(const Graph& g, int k, const Guards& guards = {});

struct RkdfEnumeration {
  std::vector<Labeling> labelings;  // lexicographic order
  bool truncated = false;
};

/// All RkDFs of g in lexicographic order, stopping after `cap` results when
/// given. For k > Δ(g) only {1,2}^n is scanned (no vertex can be labelled 0).
RkdfEnumeration enumerate_rkdfs(const Graph& g, int k, std::optional<std::size_t> cap = {},
                                const Guards& guards = {});

}  // namespace romandom
