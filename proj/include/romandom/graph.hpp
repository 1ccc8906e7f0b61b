#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "romandom/guards.hpp"

namespace romandom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Finite simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is stored as one bitset row per vertex (`words_per_row()` 64-bit
 * words each). Rows are kept symmetric and irreflexive by `add_edge`, which
 * is the only mutator; after construction a Graph is treated as a value and
 * can be shared between readers.
 */
class Graph {
public:
  Graph() = default;
  explicit Graph(int n, std::string label = {});
  Graph(int n, std::span<const Edge> edges, std::string label = {});

  int order() const noexcept { return n_; }
  int words_per_row() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const;

  /// Adjacency row as one word; requires order() <= 64.
  std::uint64_t row_mask(Vertex v) const;

  /// Inserts {u,v}. Duplicate insertion is a no-op; loops and out-of-range
  /// endpoints throw std::out_of_range / std::invalid_argument.
  void add_edge(Vertex u, Vertex v);

  std::size_t edge_count() const;
  /// Edges (u,v) with u < v, ordered by (u,v).
  std::vector<Edge> edges() const;

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Structural equality (labels ignored).
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;
  std::string label_;
};

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  bool regular = false;
};

/// Exact δ, Δ and regularity. Throws std::invalid_argument on the null graph.
DegreeStats degree_stats(const Graph& g);

Graph complement(const Graph& g);

bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);

/// Part sizes (p, q) with p <= q when g is a complete bipartite graph K_{p,q}
/// with p, q >= 1; {0, 0} otherwise.
std::pair<int, int> complete_bipartite_parts(const Graph& g);

// ---------------------------------------------------------------------------
// Text formats

Graph parse_graph6(std::string_view text, const Guards& guards = {});
std::string encode_graph6(const Graph& g);

Graph parse_edge_list(std::string_view text, const Guards& guards = {});
std::string encode_edge_list(const Graph& g);

// ---------------------------------------------------------------------------
// Generators

enum class FamilyKind {
  complete,
  cycle,
  empty,
  complete_bipartite,
  random_gnp,
  kdelta_sharpness,
};

std::string_view to_string(FamilyKind kind);
/// Accepts the CLI spellings ("complete-bipartite", "random-gnp", ...).
FamilyKind family_kind_from_string(std::string_view name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::complete;
  int n = 0;
  int p = 0;
  int q = 0;
  double prob = 0.0;
  std::uint64_t seed = 0;
  int k = 0;

  static FamilySpec complete(int n) { return {FamilyKind::complete, n}; }
  static FamilySpec cycle(int n) { return {FamilyKind::cycle, n}; }
  static FamilySpec empty(int n) { return {FamilyKind::empty, n}; }
  static FamilySpec complete_bipartite(int p, int q) {
    return {FamilyKind::complete_bipartite, p + q, p, q};
  }
  static FamilySpec random_gnp(int n, double prob, std::uint64_t seed) {
    return {FamilyKind::random_gnp, n, 0, 0, prob, seed};
  }
  static FamilySpec kdelta_sharpness(int k) {
    FamilySpec s{FamilyKind::kdelta_sharpness};
    s.k = k;
    s.n = kdelta_order(k);
    return s;
  }

  /// Vertex count of the kdelta-sharpness graph: k * (k^3 + (2k+1)k) + 1.
  static int kdelta_order(int k) { return k * kdelta_copy_order(k) + 1; }
  static int kdelta_copy_order(int k) { return k * k * k + (2 * k + 1) * k; }

  /// Vertex count of the generated graph.
  int order() const;
};

/// Throws PreconditionError on invalid parameters.
void validate(const FamilySpec& spec);

Graph generate(const FamilySpec& spec);

/// The counter-based generator behind random-gnp: the SplitMix64 finalizer
/// applied to `seed + (index + 1) * 0x9E3779B97F4A7C15`.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);

}  // namespace romandom
