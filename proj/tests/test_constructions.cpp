#include <doctest.h>

#include "brute.hpp"
#include "romandom/constructions.hpp"
#include "romandom/domatic.hpp"
#include "romandom/errors.hpp"
#include "romandom/rkdf.hpp"

using namespace romandom;

namespace {

std::vector<std::string> lines(const Family& fam) {
  std::vector<std::string> out;
  for (const auto& f : fam.members) out.push_back(to_string(f));
  return out;
}

bool all_sums(const Family& fam, int value) {
  for (int s : vertex_sums(fam))
    if (s != value) return false;
  return true;
}

int max_sum(const Family& fam) {
  int m = 0;
  for (int s : vertex_sums(fam)) m = std::max(m, s);
  return m;
}

}  // namespace

TEST_CASE("closed-form gamma_kR examples") {
  CHECK(closed_form_gamma_kr(FamilySpec::complete(7), 2) == 4);
  CHECK(closed_form_gamma_kr(FamilySpec::complete_bipartite(2, 5), 2) == 4);
  CHECK(closed_form_gamma_kr(FamilySpec::complete_bipartite(3, 3), 1) == 4);
  CHECK(closed_form_gamma_kr(FamilySpec::cycle(4), 3) == 4);
  CHECK(closed_form_gamma_kr(FamilySpec::complete_bipartite(5, 2), 2) == 4);
  CHECK(closed_form_gamma_kr(FamilySpec::complete_bipartite(2, 2), 2) == 4);
  CHECK(closed_form_gamma_kr(FamilySpec::complete_bipartite(1, 6), 2) == 7);
  CHECK_FALSE(closed_form_gamma_kr(FamilySpec::cycle(7), 1).has_value());
}

TEST_CASE("closed-form d_Rk examples") {
  CHECK(closed_form_d_rk(FamilySpec::complete(6), 3) == 6);
  CHECK(closed_form_d_rk(FamilySpec::complete(5), 3) == 5);
  CHECK(closed_form_d_rk(FamilySpec::complete(4), 3) == 5);
  CHECK(closed_form_d_rk(FamilySpec::empty(3), 1) == 1);
  CHECK(closed_form_d_rk(FamilySpec::complete(1), 1) == 1);
  CHECK(closed_form_d_rk(FamilySpec::complete(1), 2) == 2);
  CHECK(closed_form_d_rk(FamilySpec::empty(2), 4) == 4);
  CHECK_FALSE(closed_form_d_rk(FamilySpec::cycle(5), 1).has_value());
}

TEST_CASE("closed forms agree with the solvers") {
  std::vector<FamilySpec> specs;
  for (int n = 1; n <= 8; ++n) {
    specs.push_back(FamilySpec::complete(n));
    specs.push_back(FamilySpec::empty(n));
    if (n >= 3) specs.push_back(FamilySpec::cycle(n));
  }
  for (int p = 1; p <= 4; ++p)
    for (int q = p; p + q <= 8; ++q) specs.push_back(FamilySpec::complete_bipartite(p, q));

  for (const auto& spec : specs) {
    const auto g = generate(spec);
    for (int k = 1; k <= 4; ++k) {
      CAPTURE(g.label());
      CAPTURE(k);
      if (auto v = closed_form_gamma_kr(spec, k)) CHECK(gamma_kr_exact(g, k).value == *v);
      if (auto v = closed_form_d_rk(spec, k)) CHECK(d_rk_exact(g, k).value == *v);
    }
  }
}

TEST_CASE("minimum labeling on complete graphs") {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= 4; ++k) {
      auto f = labeling_complete_minimum(n, k);
      CHECK(is_rkdf(generate(FamilySpec::complete(n)), k, f));
      CHECK(weight(f) == std::min(n, 2 * k));
    }
  }
  CHECK(to_string(labeling_complete_minimum(5, 2)) == "22000");
}

TEST_CASE("cyclic family on complete graphs") {
  CHECK(lines(family_complete(3, 1)) == std::vector<std::string>{"200", "020", "002"});
  CHECK(lines(family_complete(4, 2)) == std::vector<std::string>{"2200", "0220", "0022", "2002"});
  CHECK(lines(family_complete(2, 1)) == std::vector<std::string>{"20", "02"});
  CHECK_THROWS_AS(family_complete(3, 2), PreconditionError);

  for (int k = 1; k <= 4; ++k)
    for (int n = 2 * k; n <= 10; ++n) {
      auto fam = family_complete(n, k);
      CHECK(static_cast<int>(fam.size()) == n);
      CHECK(is_roman_family(generate(FamilySpec::complete(n)), k, fam));
      CHECK(all_sums(fam, 2 * k));
    }
}

TEST_CASE("balanced complete bipartite family") {
  auto a = family_balanced_bipartite(3, 1);
  CHECK(a.graph == generate(FamilySpec::complete_bipartite(3, 3)));
  CHECK(a.family.size() == 3);
  CHECK(all_sums(a.family, 2));
  CHECK(family_balanced_bipartite(4, 1).family.size() == 4);
  auto c = family_balanced_bipartite(3, 2);
  CHECK(c.graph.order() == 12);
  CHECK(c.family.size() == 6);
  CHECK(all_sums(c.family, 4));
  CHECK_THROWS_AS(family_balanced_bipartite(2, 1), PreconditionError);

  for (int t = 3; t <= 5; ++t)
    for (int k = 1; k <= 3; ++k) {
      auto gf = family_balanced_bipartite(t, k);
      CHECK(static_cast<int>(gf.family.size()) == t * k);
      CHECK(is_roman_family(gf.graph, k, gf.family));
      CHECK(all_sums(gf.family, 2 * k));
    }
}

TEST_CASE("near-order family") {
  auto k2 = family_near_order(generate(FamilySpec::complete(2)), 2);
  CHECK(lines(k2) == std::vector<std::string>{"21", "12", "11"});
  CHECK(all_sums(k2, 4));
  // Vertices past the first 2k-2 only collect 2k-1.
  CHECK(vertex_sums(family_near_order(generate(FamilySpec::cycle(4)), 2)) ==
        std::vector<int>{4, 4, 3, 3});
  auto k5 = family_near_order(generate(FamilySpec::complete(5)), 3);
  CHECK(k5.size() == 5);
  CHECK(vertex_sums(k5) == std::vector<int>{6, 6, 6, 6, 5});
  CHECK_THROWS_AS(family_near_order(generate(FamilySpec::complete(3)), 1), PreconditionError);
  CHECK_THROWS_AS(family_near_order(generate(FamilySpec::complete(3)), 3), PreconditionError);

  for (int n = 1; n <= 5; ++n)
    for (const auto& g : brute::all_graphs(n))
      for (int k = 2; 2 * k - 2 <= n; ++k) {
        auto fam = family_near_order(g, k);
        CHECK(static_cast<int>(fam.size()) == 2 * k - 1);
        CHECK(is_roman_family(g, k, fam));
        CHECK(max_sum(fam) == 2 * k);
      }
}

TEST_CASE("three-function family on nontrivial graphs") {
  auto k2 = family_nontrivial(generate(FamilySpec::complete(2)), 2);
  CHECK(lines(k2) == std::vector<std::string>{"12", "21", "11"});
  CHECK(max_sum(k2) == 4);
  auto p3 = family_nontrivial(brute::path(3), 2);
  CHECK(lines(p3) == std::vector<std::string>{"122", "211", "111"});
  CHECK(max_sum(p3) == 4);
  auto k2k3 = family_nontrivial(generate(FamilySpec::complete(2)), 3);
  CHECK(lines(k2k3) == lines(k2));
  CHECK(is_roman_family(generate(FamilySpec::complete(2)), 3, k2k3));
  CHECK_THROWS_AS(family_nontrivial(generate(FamilySpec::complete(1)), 2), PreconditionError);
  CHECK_THROWS_AS(family_nontrivial(generate(FamilySpec::complete(2)), 1), PreconditionError);

  for (int n = 2; n <= 5; ++n)
    for (const auto& g : brute::all_graphs(n))
      for (int k = 2; k <= 4; ++k) CHECK(is_roman_family(g, k, family_nontrivial(g, k)));
}

TEST_CASE("kdelta sharpness family") {
  auto one = family_kdelta_sharpness(1);
  CHECK(one.graph.order() == 5);
  CHECK(one.family.size() == 3);
  CHECK(max_sum(one.family) <= 2);
  CHECK(is_roman_family(one.graph, 1, one.family));
  const auto apex = static_cast<std::size_t>(one.graph.order() - 1);
  CHECK(one.family.members[0][apex] == 0);
  CHECK(one.family.members[1][apex] == 1);
  CHECK(one.family.members[2][apex] == 1);
  CHECK(static_cast<int>(one.family.size()) == degree_stats(one.graph).min_degree + 2);

  auto two = family_kdelta_sharpness(2);
  CHECK(two.graph.order() == 37);
  CHECK(two.family.size() == 8);
  CHECK(max_sum(two.family) <= 4);
  CHECK(is_roman_family(two.graph, 2, two.family));
  CHECK(static_cast<int>(two.family.size()) == degree_stats(two.graph).min_degree + 4);

  CHECK_THROWS_AS(family_kdelta_sharpness(3), GuardError);
  CHECK_THROWS_AS(family_kdelta_sharpness(0), PreconditionError);
}

TEST_CASE("kdelta family matches the solver where it fits") {
  auto one = family_kdelta_sharpness(1);
  CHECK(d_rk_exact(one.graph, 1).value == static_cast<int>(one.family.size()));
}

TEST_CASE("family from balanced bipartite subgraphs") {
  auto k2 = generate(FamilySpec::complete(2));
  auto fam = family_from_balanced_subgraphs(k2, 1, {{{0}, {1}}, {{1}, {0}}});
  CHECK(lines(fam) == std::vector<std::string>{"02", "20"});
  CHECK(all_sums(fam, 2));

  auto c4 = generate(FamilySpec::cycle(4));
  auto c4fam = family_from_balanced_subgraphs(c4, 1, {{{0, 1}, {2, 3}}, {{2, 3}, {0, 1}}});
  CHECK(c4fam.size() == 2);
  CHECK(all_sums(c4fam, 2));

  // 2k - 1 subgraphs get the all-ones function appended.
  auto k6 = generate(FamilySpec::complete(6));
  auto odd = family_from_balanced_subgraphs(
      k6, 2, {{{0, 1}, {2, 3}}, {{2, 3}, {4, 5}}, {{4, 5}, {0, 1}}});
  CHECK(lines(odd) == std::vector<std::string>{"002211", "110022", "221100", "111111"});
  CHECK(all_sums(odd, 4));
}

TEST_CASE("balanced subgraph refusals name the problem") {
  auto c4 = generate(FamilySpec::cycle(4));
  auto message = [&](const std::vector<BalancedSubgraph>& subs, int k = 1) -> std::string {
    try {
      family_from_balanced_subgraphs(c4, k, subs);
    } catch (const PreconditionError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message({{{0}, {1, 3}}, {{1, 3}, {0}}}).find("|X| != |Y|") != std::string::npos);
  CHECK(message({{{0}, {2}}, {{2}, {0}}}).find("subgraph 0") != std::string::npos);
  CHECK(message({{{0}, {4}}, {{4}, {0}}}).find("out of range") != std::string::npos);
  CHECK(message({{{0}, {0}}, {{1}, {0}}}).find("subgraph 0") != std::string::npos);
  CHECK(message({{{0}, {1}}, {{1}, {0}}, {{2}, {3}}}).find("2k or 2k-1") != std::string::npos);
  CHECK(message({{{0}, {1}}, {{2}, {3}}}).find("unbalanced") != std::string::npos);
}
