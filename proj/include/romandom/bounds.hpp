#pragma once

#include <optional>
#include <string>
#include <vector>

#include "romandom/family.hpp"
#include "romandom/graph.hpp"
#include "romandom/guards.hpp"

namespace romandom {

/// How `holds` is derived from lhs and rhs.
enum class Relation {
  less_equal,  // lhs <= rhs
  equal,       // lhs == rhs
  iff,         // lhs, rhs are truth values; holds iff they agree
  implies,     // lhs, rhs are truth values; holds iff !lhs || rhs
};

std::string_view to_string(Relation r);

/**
 * One evaluated inequality or characterization for a (graph, k) pair.
 *
 * Records whose hypotheses fail have `applicable == false`, lhs = rhs = 0 and
 * the reason in `notes`; they never count as violations.
 */
struct BoundRecord {
  std::string theorem_id;
  bool applicable = false;
  long long lhs = 0;
  long long rhs = 0;
  Relation relation = Relation::less_equal;
  bool holds = true;
  bool equality = false;
  std::string notes;

  bool violated() const { return applicable && !holds; }
};

/// Exact values for one (graph, k); every field must be set before
/// check_graph. The family is the d_R^k witness and is only consulted when
/// γ_kR · d_R^k = 2kn.
struct SolvedValues {
  std::optional<int> gamma_k;
  std::optional<int> gamma_kr;
  std::optional<int> d_k;
  std::optional<int> d_rk;
  std::optional<Family> d_rk_family;
};

/// Runs the four exact solvers in dependency order.
SolvedValues solve_all(const Graph& g, int k, const Guards& guards = {});

struct BipartiteWitness {
  std::vector<int> x;
  std::vector<int> y;
  friend bool operator==(const BipartiteWitness&, const BipartiteWitness&) = default;
};

/// Disjoint X, Y with |X| > |Y| >= k and every X vertex having >= k
/// neighbours in Y; the first such pair with Y least in sorted-sequence
/// lexicographic order, X the |Y|+1 smallest eligible vertices.
std::optional<BipartiteWitness> surplus_bipartite_witness(const Graph& g, int k,
                                                          const Guards& guards = {});

/// Every single-graph bound and characterization. Records are sorted by
/// theorem_id. Throws PreconditionError when a value is missing.
std::vector<BoundRecord> check_graph(const Graph& g, int k, const SolvedValues& vals,
                                     const Guards& guards = {});

/// Nordhaus-Gaddum records from known d_R^k(G) and d_R^k(complement G).
std::vector<BoundRecord> check_nordhaus_gaddum(const Graph& g, int k, int d_rk,
                                               int d_rk_complement);

/// Same, solving both sides with d_rk_exact.
std::vector<BoundRecord> check_nordhaus_gaddum(const Graph& g, int k, const Guards& guards = {});

/// Records with applicable && !holds.
std::size_t count_violations(const std::vector<BoundRecord>& records);

}  // namespace romandom
