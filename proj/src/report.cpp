#include "romandom/report.hpp"

#include <variant>

namespace romandom {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string optional_int(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

Json witness_json(const Witness& w) {
  return std::visit(
      [](const auto& value) -> Json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, Labeling>) {
          return Json{{"labeling", to_string(value)}};
        } else if constexpr (std::is_same_v<T, VertexSet>) {
          return Json{{"set", value.members()}};
        } else if constexpr (std::is_same_v<T, Family>) {
          Json members = Json::array();
          for (const auto& f : value.members) members.push_back(to_string(f));
          return Json{{"family", members}};
        } else {
          return Json{{"partition", value.blocks}};
        }
      },
      w);
}

}  // namespace

Json graph_json(const Graph& g) {
  Json j;
  j["name"] = g.label();
  j["graph6"] = encode_graph6(g);
  j["n"] = g.order();
  if (g.order() > 0) {
    auto deg = degree_stats(g);
    j["delta"] = deg.min_degree;
    j["Delta"] = deg.max_degree;
    j["regular"] = deg.regular;
  }
  return j;
}

Json solve_result_json(const Graph& g, int k, const SolveResult& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["graph"] = graph_json(g);
  j["k"] = k;
  j["quantity"] = std::string(to_string(r.quantity));
  j["value"] = r.value;
  j["witness"] = witness_json(r.witness);
  j["nodes_explored"] = r.nodes_explored;
  return j;
}

Json record_json(const BoundRecord& r) {
  Json j;
  j["theorem_id"] = r.theorem_id;
  j["applicable"] = r.applicable;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["relation"] = std::string(to_string(r.relation));
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  j["notes"] = r.notes;
  return j;
}

Json report_json(const BoundReport& report) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["graph"] = graph_json(report.graph);
  j["k"] = report.k;
  Json values;
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v) values[key] = *v;
  };
  put("gamma_k", report.values.gamma_k);
  put("gamma_kR", report.values.gamma_kr);
  put("d_k", report.values.d_k);
  put("d_Rk", report.values.d_rk);
  j["values"] = values;
  Json records = Json::array();
  for (const auto& r : report.records) records.push_back(record_json(r));
  j["records"] = records;
  return j;
}

std::string report_csv_header() {
  return "graph_name,graph6,n,delta,Delta,regular,k,gamma_k,gamma_kR,d_k,d_Rk,"
         "theorem_id,applicable,lhs,rhs,relation,holds,equality,notes\n";
}

std::string report_csv_rows(const BoundReport& report) {
  const auto& g = report.graph;
  auto deg = degree_stats(g);
  std::string prefix = csv_field(g.label()) + "," + csv_field(encode_graph6(g)) + "," +
                       std::to_string(g.order()) + "," + std::to_string(deg.min_degree) + "," +
                       std::to_string(deg.max_degree) + "," + (deg.regular ? "true" : "false") +
                       "," + std::to_string(report.k) + "," +
                       optional_int(report.values.gamma_k) + "," +
                       optional_int(report.values.gamma_kr) + "," +
                       optional_int(report.values.d_k) + "," + optional_int(report.values.d_rk);
  std::string out;
  for (const auto& r : report.records) {
    out += prefix + "," + csv_field(r.theorem_id) + "," + (r.applicable ? "true" : "false") + "," +
           std::to_string(r.lhs) + "," + std::to_string(r.rhs) + "," +
           csv_field(std::string(to_string(r.relation))) + "," + (r.holds ? "true" : "false") +
           "," + (r.equality ? "true" : "false") + "," + csv_field(r.notes) + "\n";
  }
  return out;
}

}  // namespace romandom
