#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "romandom/family.hpp"
#include "romandom/labeling.hpp"

namespace romandom {

enum class Quantity { gamma_k, gamma_kr, d_k, d_rk };

std::string_view to_string(Quantity q);

/// A vertex subset as a 0/1 mask over V.
struct VertexSet {
  std::vector<std::uint8_t> mask;

  std::vector<int> members() const;
  int size() const;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

using Witness = std::variant<std::monostate, Labeling, VertexSet, Family, VertexPartition>;

struct SolveResult {
  Quantity quantity = Quantity::gamma_kr;
  int value = 0;
  Witness witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

}  // namespace romandom
