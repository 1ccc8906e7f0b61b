#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "romandom/labeling.hpp"

namespace romandom {

/// Ordered list of labelings meant to form a Roman (k,k)-dominating family.
struct Family {
  int k = 1;
  std::vector<Labeling> members;

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const Family&, const Family&) = default;
};

/// Σ_i f_i(v) for every vertex v. Members must share one length.
std::vector<int> vertex_sums(const Family& fam);

/// One digit string per line, each terminated by '\n'.
std::string to_string(const Family& fam);
Family parse_family(std::string_view text, int k);

/// Disjoint blocks covering V (a k-domatic partition when every block is
/// k-dominating).
struct VertexPartition {
  std::vector<std::vector<int>> blocks;

  std::size_t size() const noexcept { return blocks.size(); }
  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

}  // namespace romandom
