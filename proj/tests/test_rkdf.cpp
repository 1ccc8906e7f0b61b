#include <doctest.h>

#include "brute.hpp"
#include "romandom/errors.hpp"
#include "romandom/rkdf.hpp"

using namespace romandom;

namespace {

Graph complete(int n) { return generate(FamilySpec::complete(n)); }
Graph cycle(int n) { return generate(FamilySpec::cycle(n)); }
Graph empty(int n) { return generate(FamilySpec::empty(n)); }
Graph kpq(int p, int q) { return generate(FamilySpec::complete_bipartite(p, q)); }

std::vector<Graph> random_corpus(int n_max, int per_n, std::uint64_t seed) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i < per_n; ++i) {
      const double prob = 0.2 + 0.2 * (i % 4);
      out.push_back(generate(FamilySpec::random_gnp(n, prob, seed + 100 * n + i)));
    }
  return out;
}

}  // namespace

TEST_CASE("validator examples") {
  CHECK(validate_rkdf(complete(3), 1, parse_labeling("111")).empty());

  auto zeros = validate_rkdf(complete(3), 1, parse_labeling("000"));
  REQUIRE(zeros.size() == 3);
  for (int v = 0; v < 3; ++v) {
    CHECK(zeros[v].kind == ViolationKind::zero_vertex_undercovered);
    CHECK(zeros[v].vertex == v);
  }

  auto f = parse_labeling("22000");
  CHECK(is_rkdf(complete(5), 2, f));
  CHECK(weight(f) == 4);
  CHECK_FALSE(is_rkdf(complete(5), 3, f));

  auto p3 = brute::path(3);
  CHECK(is_rkdf(p3, 1, parse_labeling("020")));
  CHECK_FALSE(is_rkdf(p3, 1, parse_labeling("200")));
  CHECK_FALSE(is_rkdf(p3, 2, parse_labeling("020")));
}

TEST_CASE("validator structural errors suppress semantic checks") {
  auto short_f = validate_rkdf(complete(3), 1, parse_labeling("00"));
  REQUIRE(short_f.size() == 1);
  CHECK(short_f[0].kind == ViolationKind::length_mismatch);

  Labeling bad(std::vector<std::uint8_t>{0, 3, 0});
  auto range = validate_rkdf(complete(3), 1, bad);
  REQUIRE(range.size() == 1);
  CHECK(range[0].kind == ViolationKind::value_out_of_range);
  CHECK(range[0].vertex == 1);
}

TEST_CASE("labeling digit strings") {
  CHECK(to_string(parse_labeling("20120")) == "20120");
  CHECK(weight(parse_labeling("20120")) == 5);
  CHECK(weight(parse_labeling("")) == 0);
  CHECK(level_set(parse_labeling("20120"), 2) == std::vector<int>{0, 3});
  CHECK(level_set(parse_labeling("20120"), 0) == std::vector<int>{1, 4});
  try {
    parse_labeling("0130");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("gamma_kR examples") {
  CHECK(gamma_kr_exact(complete(5), 1).value == 2);
  CHECK(gamma_kr_exact(cycle(4), 1).value == 3);
  CHECK(gamma_kr_exact(kpq(3, 3), 1).value == 4);
  CHECK(gamma_kr_exact(complete(1), 1).value == 1);
  CHECK(gamma_kr_exact(empty(4), 2).value == 4);
  for (const auto& g : brute::all_graphs(3)) CHECK(gamma_kr_exact(g, 2).value == 3);
}

TEST_CASE("gamma_kR witness is the lexicographically least optimum") {
  auto r = gamma_kr_exact(cycle(4), 1);
  REQUIRE(std::holds_alternative<Labeling>(r.witness));
  CHECK(to_string(std::get<Labeling>(r.witness)) == "0102");
  CHECK(r.quantity == Quantity::gamma_kr);
  CHECK(r.nodes_explored > 0);

  for (const auto& g : random_corpus(7, 3, 5)) {
    for (int k = 1; k <= 3; ++k) {
      auto [value, witness] = brute::gamma_kr(g, k);
      auto res = gamma_kr_exact(g, k);
      CHECK(res.value == value);
      CHECK(to_string(std::get<Labeling>(res.witness)) == witness);
    }
  }
}

TEST_CASE("gamma_kR oracle examples") {
  CHECK(gamma_kr_oracle(complete(1), 1) == 1);
  CHECK(gamma_kr_oracle(complete(2), 1) == 2);
  CHECK(gamma_kr_oracle(brute::path(3), 1) == 2);
}

TEST_CASE("exact and oracle agree") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : brute::all_graphs(n))
      for (int k = 1; k <= 3; ++k) CHECK(gamma_kr_exact(g, k).value == gamma_kr_oracle(g, k));
  for (const auto& g : random_corpus(8, 4, 77)) {
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(encode_graph6(g));
      CAPTURE(k);
      CHECK(gamma_kr_exact(g, k).value == gamma_kr_oracle(g, k));
    }
  }
}

TEST_CASE("gamma_k examples") {
  auto r = gamma_k_exact(cycle(4), 2);
  CHECK(r.value == 2);
  CHECK(std::get<VertexSet>(r.witness).members() == std::vector<int>{1, 3});
  CHECK(gamma_k_exact(complete(5), 1).value == 1);
  CHECK(gamma_k_exact(complete(5), 3).value == 3);
  CHECK(gamma_k_exact(empty(4), 1).value == 4);
  CHECK(gamma_k_exact(brute::star(4), 1).value == 1);
  CHECK(gamma_k_exact(brute::star(4), 2).value == 4);
}

TEST_CASE("gamma_k matches brute force with lexicographically least witness") {
  for (const auto& g : random_corpus(9, 3, 123)) {
    for (int k = 1; k <= 3; ++k) {
      auto res = gamma_k_exact(g, k);
      CHECK(res.value == brute::gamma_k(g, k));
      const auto& s = std::get<VertexSet>(res.witness);
      CHECK(is_k_dominating(g, k, s));
      std::string bits(g.order(), '0');
      for (int v : s.members()) bits[v] = '1';
      CHECK(bits == brute::gamma_k_witness(g, k));
    }
  }
}

TEST_CASE("enumerate_rkdfs") {
  auto k2 = enumerate_rkdfs(complete(2), 1);
  std::vector<std::string> got;
  for (const auto& f : k2.labelings) got.push_back(to_string(f));
  CHECK(got == std::vector<std::string>{"02", "11", "12", "20", "21", "22"});
  CHECK_FALSE(k2.truncated);

  // k > Delta leaves only labels 1 and 2.
  auto wide = enumerate_rkdfs(complete(3), 3);
  CHECK(wide.labelings.size() == 8);
  CHECK(to_string(wide.labelings.front()) == "111");

  auto capped = enumerate_rkdfs(complete(2), 1, 4);
  CHECK(capped.labelings.size() == 4);
  CHECK(capped.truncated);
  auto exact_cap = enumerate_rkdfs(complete(2), 1, 6);
  CHECK(exact_cap.labelings.size() == 6);
  CHECK_FALSE(exact_cap.truncated);
}

TEST_CASE("enumerate_rkdfs lists exactly the valid labelings") {
  for (const auto& g : random_corpus(5, 2, 9)) {
    for (int k = 1; k <= 2; ++k) {
      auto all = enumerate_rkdfs(g, k).labelings;
      CHECK(std::is_sorted(all.begin(), all.end()));
      std::size_t count = 0;
      const int n = g.order();
      int total = 1;
      for (int i = 0; i < n; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        Labeling f(static_cast<std::size_t>(n), 0);
        int c = code;
        for (int v = n - 1; v >= 0; --v, c /= 3) f[v] = static_cast<std::uint8_t>(c % 3);
        count += is_rkdf(g, k, f) ? 1 : 0;
      }
      CHECK(all.size() == count);
      for (const auto& f : all) CHECK(is_rkdf(g, k, f));
    }
  }
}

TEST_CASE("sandwich, covering and minimum bounds") {
  for (const auto& g : random_corpus(8, 4, 2024)) {
    const int n = g.order();
    const int delta_max = degree_stats(g).max_degree;
    int previous = 0;
    for (int k = 1; k <= 4; ++k) {
      const int gk = gamma_k_exact(g, k).value;
      const int gkr = gamma_kr_exact(g, k).value;
      CHECK(gk <= gkr);
      CHECK(gkr <= 2 * gk);
      CHECK(gkr <= n);
      CHECK(gkr >= std::min(n, 2 * k));
      if (delta_max >= k) CHECK(static_cast<long long>(gkr) * (delta_max + k) >= 2LL * n * k);
      CHECK(gkr >= previous);
      previous = gkr;
    }
  }
}

TEST_CASE("witnesses certify their values") {
  for (const auto& g : random_corpus(8, 2, 31)) {
    for (int k = 1; k <= 3; ++k) {
      auto r = gamma_kr_exact(g, k);
      const auto& f = std::get<Labeling>(r.witness);
      CHECK(is_rkdf(g, k, f));
      CHECK(weight(f) == r.value);
      auto s = gamma_k_exact(g, k);
      CHECK(std::get<VertexSet>(s.witness).size() == s.value);
    }
  }
}

TEST_CASE("guards and preconditions") {
  CHECK_THROWS_AS(gamma_kr_exact(complete(17), 1), GuardError);
  CHECK_THROWS_AS(gamma_kr_oracle(complete(11), 1), GuardError);
  CHECK_THROWS_AS(gamma_k_exact(complete(21), 1), GuardError);
  CHECK_THROWS_AS(enumerate_rkdfs(complete(11), 1), GuardError);
  CHECK_THROWS_AS(gamma_kr_exact(complete(3), 0), PreconditionError);
  CHECK_THROWS_AS(gamma_k_exact(complete(3), 0), PreconditionError);

  Guards tight = Guards{}.with_max_n(4);
  CHECK_THROWS_AS(gamma_kr_exact(complete(5), 1, tight), GuardError);
  CHECK(gamma_kr_exact(complete(4), 1, tight).value == 2);
}
