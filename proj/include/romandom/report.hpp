#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "romandom/bounds.hpp"
#include "romandom/graph.hpp"
#include "romandom/solve_result.hpp"

namespace romandom {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Everything verify/sweep emit for one (graph, k).
struct BoundReport {
  Graph graph;
  int k = 1;
  SolvedValues values;
  std::vector<BoundRecord> records;
};

Json graph_json(const Graph& g);

/// Solve result as JSON. Timing is left out so output stays reproducible.
Json solve_result_json(const Graph& g, int k, const SolveResult& r);

Json record_json(const BoundRecord& r);
Json report_json(const BoundReport& report);

std::string report_csv_header();
/// One CSV line (with trailing newline) per record.
std::string report_csv_rows(const BoundReport& report);

}  // namespace romandom
