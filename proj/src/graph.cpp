#include "romandom/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "romandom/errors.hpp"

namespace romandom {

namespace {

int words_for(int n) { return (n + 63) / 64; }

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n, std::string label) : n_(n), words_(words_for(n)), label_(std::move(label)) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges, std::string label) : Graph(n, std::move(label)) {
  for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  return (adj_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(n_, v);
  return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

std::uint64_t Graph::row_mask(Vertex v) const {
  if (n_ > 64) throw std::logic_error("row_mask requires order <= 64");
  return row(v)[0];
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  adj_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : adj_) twice += std::popcount(w);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("degree_stats on the null graph");
  DegreeStats s{g.degree(0), g.degree(0), false};
  for (Vertex v = 1; v < g.order(); ++v) {
    int d = g.degree(v);
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
  }
  s.regular = s.min_degree == s.max_degree;
  return s;
}

Graph complement(const Graph& g) {
  Graph out(g.order(), g.label().empty() ? std::string{} : "complement(" + g.label() + ")");
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

bool is_complete(const Graph& g) {
  auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

bool is_edgeless(const Graph& g) { return g.edge_count() == 0; }

std::pair<int, int> complete_bipartite_parts(const Graph& g) {
  const int n = g.order();
  if (n < 2) return {0, 0};
  // Side A holds vertex 0 and its non-neighbours, side B its neighbours.
  std::vector<bool> in_b(n, false);
  int b = 0;
  for (Vertex v : g.neighbors(0)) {
    in_b[v] = true;
    ++b;
  }
  if (b == 0) return {0, 0};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != (in_b[u] != in_b[v])) return {0, 0};
    }
  }
  int a = n - b;
  return {std::min(a, b), std::max(a, b)};
}

// ---------------------------------------------------------------------------
// graph6

namespace {

std::size_t graph6_bit_count(std::size_t n) { return n * (n == 0 ? 0 : n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text, const Guards& guards) {
  std::size_t pos = 0;
  if (text.starts_with(">>graph6<<")) pos = 10;
  // Tolerate one trailing newline (optionally CRLF).
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) {
      throw ParseError("graph6: truncated input at byte " + std::to_string(i), i);
    }
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(i) + " (" + std::to_string(c) +
                           ") outside 63..126",
                       i);
    }
    return c - 63;
  };

  std::size_t n = 0;
  int first = byte_at(pos);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
    pos += 1;
  } else {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw ParseError("graph6: orders above 258047 are not supported (byte " +
                           std::to_string(pos + 1) + ")",
                       pos + 1);
    }
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(byte_at(pos + i));
    pos += 4;
  }
  if (n > static_cast<std::size_t>(guards.graph_max_n)) {
    throw GuardError("graph6: order " + std::to_string(n) + " exceeds input limit " +
                     std::to_string(guards.graph_max_n));
  }

  const std::size_t bits = graph6_bit_count(n);
  const std::size_t bytes = (bits + 5) / 6;
  Graph g(static_cast<int>(n));
  std::size_t bit = 0;
  for (std::size_t b = 0; b < bytes; ++b) {
    int chunk = byte_at(pos + b);
    for (int s = 5; s >= 0; --s, ++bit) {
      if (((chunk >> s) & 1) == 0) continue;
      if (bit >= bits) {
        throw ParseError("graph6: nonzero padding bit in byte " + std::to_string(pos + b),
                         pos + b);
      }
      // Upper triangle, column-major: (0,1),(0,2),(1,2),(0,3),...
      std::size_t j = 1;
      std::size_t before = 0;
      while (before + j <= bit) {
        before += j;
        ++j;
      }
      g.add_edge(static_cast<Vertex>(bit - before), static_cast<Vertex>(j));
    }
  }
  if (pos + bytes != text.size()) {
    throw ParseError("graph6: trailing data at byte " + std::to_string(pos + bytes), pos + bytes);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

// ---------------------------------------------------------------------------
// edge list

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line_no) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": '" + std::string(tok) +
                         "' is not an integer",
                     line_no);
  }
  return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text, const Guards& guards) {
  std::size_t line_no = 0;
  std::optional<Graph> g;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto toks = split_tokens(line);
    if (toks.empty()) continue;
    if (!g) {
      if (toks.size() != 2 || toks[0] != "n") {
        throw ParseError("edge list line " + std::to_string(line_no) +
                             ": expected header 'n <count>'",
                         line_no);
      }
      auto n = parse_int(toks[1], line_no);
      if (n < 0) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": negative order",
                         line_no);
      }
      if (n > guards.graph_max_n) {
        throw GuardError("edge list: order " + std::to_string(n) + " exceeds input limit " +
                         std::to_string(guards.graph_max_n));
      }
      g.emplace(static_cast<int>(n));
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v'", line_no);
    }
    auto u = parse_int(toks[0], line_no);
    auto v = parse_int(toks[1], line_no);
    if (u < 0 || v < 0 || u >= g->order() || v >= g->order()) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": vertex index out of range",
                       line_no);
    }
    if (u == v) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": self-loop", line_no);
    }
    g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!g) throw ParseError("edge list: missing header 'n <count>'", line_no);
  return std::move(*g);
}

std::string encode_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// generators

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::empty: return "empty";
    case FamilyKind::complete_bipartite: return "complete-bipartite";
    case FamilyKind::random_gnp: return "random-gnp";
    case FamilyKind::kdelta_sharpness: return "kdelta-sharpness";
  }
  return "?";
}

FamilyKind family_kind_from_string(std::string_view name) {
  for (auto kind : {FamilyKind::complete, FamilyKind::cycle, FamilyKind::empty,
                    FamilyKind::complete_bipartite, FamilyKind::random_gnp,
                    FamilyKind::kdelta_sharpness}) {
    if (to_string(kind) == name) return kind;
  }
  throw PreconditionError("unknown graph family '" + std::string(name) + "'");
}

int FamilySpec::order() const {
  switch (kind) {
    case FamilyKind::complete_bipartite: return p + q;
    case FamilyKind::kdelta_sharpness: return kdelta_order(k);
    default: return n;
  }
}

void validate(const FamilySpec& spec) {
  auto fail = [&](const std::string& why) {
    throw PreconditionError(std::string(to_string(spec.kind)) + ": " + why);
  };
  switch (spec.kind) {
    case FamilyKind::complete:
    case FamilyKind::empty:
      if (spec.n < 1) fail("n must be >= 1");
      break;
    case FamilyKind::cycle:
      if (spec.n < 3) fail("cycle needs n >= 3");
      break;
    case FamilyKind::complete_bipartite:
      if (spec.p < 1 || spec.q < 1) fail("p and q must be >= 1");
      break;
    case FamilyKind::random_gnp:
      if (spec.n < 1) fail("n must be >= 1");
      if (!(spec.prob >= 0.0 && spec.prob <= 1.0)) fail("prob must lie in [0,1]");
      break;
    case FamilyKind::kdelta_sharpness:
      if (spec.k < 1) fail("k must be >= 1");
      // k^3 grows fast; refuse anything that would overflow int.
      if (spec.k > 1000) fail("k too large");
      break;
  }
}

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case FamilyKind::complete: {
      Graph g(spec.n, "K" + std::to_string(spec.n));
      for (Vertex u = 0; u < spec.n; ++u)
        for (Vertex v = u + 1; v < spec.n; ++v) g.add_edge(u, v);
      return g;
    }
    case FamilyKind::cycle: {
      Graph g(spec.n, "C" + std::to_string(spec.n));
      for (Vertex v = 0; v < spec.n; ++v) g.add_edge(v, (v + 1) % spec.n);
      return g;
    }
    case FamilyKind::empty:
      return Graph(spec.n, "E" + std::to_string(spec.n));
    case FamilyKind::complete_bipartite: {
      Graph g(spec.p + spec.q, "K" + std::to_string(spec.p) + "," + std::to_string(spec.q));
      for (Vertex u = 0; u < spec.p; ++u)
        for (Vertex v = spec.p; v < spec.p + spec.q; ++v) g.add_edge(u, v);
      return g;
    }
    case FamilyKind::random_gnp: {
      Graph g(spec.n, "gnp(" + std::to_string(spec.n) + "," + std::to_string(spec.seed) + ")");
      // Uniform 53-bit draw compared against floor(prob * 2^53).
      const auto threshold = static_cast<std::uint64_t>(std::floor(spec.prob * 0x1p53));
      std::uint64_t index = 0;
      for (Vertex u = 0; u < spec.n; ++u) {
        for (Vertex v = u + 1; v < spec.n; ++v, ++index) {
          if ((splitmix64_at(spec.seed, index) >> 11) < threshold) g.add_edge(u, v);
        }
      }
      return g;
    }
    case FamilyKind::kdelta_sharpness: {
      const int k = spec.k;
      const int m = FamilySpec::kdelta_copy_order(k);
      const int apex = k * m;
      Graph g(apex + 1, "kdelta(" + std::to_string(k) + ")");
      for (int copy = 0; copy < k; ++copy) {
        const int base = copy * m;
        for (Vertex u = 0; u < m; ++u)
          for (Vertex v = u + 1; v < m; ++v) g.add_edge(base + u, base + v);
        for (Vertex t = 0; t < k; ++t) g.add_edge(apex, base + t);
      }
      return g;
    }
  }
  throw std::logic_error("unhandled family kind");
}

}  // namespace romandom
