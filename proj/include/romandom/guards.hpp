#pragma once

#include <optional>

namespace romandom {

/// Size limits for the exponential routines. Every field can be overridden;
/// the CLI caps overrides at `kHardMaxN`.
struct Guards {
  static constexpr int kHardMaxN = 64;

  int graph_max_n = 64;         // parse_graph6 / parse_edge_list
  int gamma_kr_max_n = 16;      // gamma_kr_exact
  int gamma_kr_oracle_max_n = 10;
  int gamma_k_max_n = 20;       // gamma_k_exact
  int enumerate_max_n = 10;     // enumerate_rkdfs over {0,1,2}^n
  int enumerate_restricted_max_n = 20;  // enumerate_rkdfs over {1,2}^n when k > Delta
  int d_rk_max_n = 8;
  int d_rk_max_k = 4;
  int d_rk_oracle_max_n = 6;
  int d_rk_oracle_max_k = 3;
  int d_k_max_n = 10;
  int witness_max_n = 10;       // surplus_bipartite_witness
  int kdelta_max_k = 2;         // family_kdelta_sharpness

  /// Raises or lowers every vertex-count limit (solvers and input) to `n`.
  Guards with_max_n(int n) const;

  /// Applies `ROMANDOM_MAX_N` from the environment, when set and numeric.
  static Guards from_env();
};

/// Parses `ROMANDOM_MAX_N`; empty when unset or not a positive integer.
std::optional<int> max_n_from_env();

}  // namespace romandom
