#include "romandom/guards.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace romandom {

Guards Guards::with_max_n(int n) const {
  Guards g = *this;
  g.graph_max_n = n;
  g.gamma_kr_max_n = n;
  g.gamma_kr_oracle_max_n = n;
  g.gamma_k_max_n = n;
  g.enumerate_max_n = n;
  g.enumerate_restricted_max_n = n;
  g.d_rk_max_n = n;
  g.d_rk_oracle_max_n = n;
  g.d_k_max_n = n;
  g.witness_max_n = n;
  return g;
}

std::optional<int> max_n_from_env() {
  const char* raw = std::getenv("ROMANDOM_MAX_N");
  if (raw == nullptr) return std::nullopt;
  std::string_view s(raw);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1) return std::nullopt;
  return v;
}

Guards Guards::from_env() {
  Guards g;
  if (auto n = max_n_from_env()) g = g.with_max_n(*n < kHardMaxN ? *n : kHardMaxN);
  return g;
}

}  // namespace romandom
