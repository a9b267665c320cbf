#include "cfactor/constructions.hpp"

#include "cfactor/factor_analysis.hpp"
#include "cfactor/matching.hpp"
#include "doctest.h"
#include "test_support.hpp"

namespace cfactor {
namespace {

TEST_CASE("degree bounds") {
  CHECK(degree_bound(TheoremId::T1_1, 3, 2) == 1);
  CHECK(degree_bound(TheoremId::T1_1, 5, 2) == 2);
  CHECK(degree_bound(TheoremId::T1_1, 8, 3) == 3);
  CHECK(degree_bound(TheoremId::T1_2, 3) == 2);
  CHECK(degree_bound(TheoremId::T2_1, 5) == 3);
  CHECK(degree_bound(TheoremId::T2_2, 3) == 3);
  CHECK(degree_bound(TheoremId::T2_3, 3) == 3);
  CHECK(degree_bound(TheoremId::T2_3, 4) == 3);
  CHECK(degree_bound(TheoremId::C1_1, 5) == 2);
  CHECK_THROWS_AS(degree_bound(TheoremId::T1_2, 2), Error);
  CHECK_THROWS_AS(degree_bound(TheoremId::T1_1, 3, 1), Error);
}

TEST_CASE("theorem ids round-trip through text") {
  for (TheoremId id : {TheoremId::T1_1, TheoremId::T1_2, TheoremId::T2_1, TheoremId::T2_2,
                       TheoremId::T2_3, TheoremId::C1_1}) {
    CHECK(parse_theorem_id(to_string(id)) == id);
  }
  CHECK_THROWS_AS(parse_theorem_id("T9-9"), Error);
}

TEST_CASE("sharpness_graph T1-1 at r=5, n=2 is K_{1,4}") {
  SharpnessCase c = sharpness_graph(TheoremId::T1_1, 5, 2);
  CHECK(canonical_form(c.graph) == canonical_form(star_graph(4)));
  CHECK(min_degree(c.graph) == 1);
  CHECK(c.expected_delta == 1);
  CHECK(c.expected_witness.set == VertexSet{4});
  CHECK(c.expected_witness.deficiency == 4);
  CHECK(c.expected_witness.bound == 2);
  CHECK(c.witness_violates);
}

TEST_CASE("sharpness_graph T2-3 at r=3") {
  SharpnessCase c = sharpness_graph(TheoremId::T2_3, 3);
  CHECK(c.graph == join(empty_graph(2), complete_graph(2)));
  CHECK(min_degree(c.graph) == 2);
  CHECK(c.expected_witness.set == VertexSet{2, 3});
  CHECK(c.expected_witness.epsilon == 3);
  CHECK(c.expected_witness.deficiency == 2);
  CHECK(c.expected_witness.bound == 1);
  CHECK(c.witness_violates);
}

TEST_CASE("small-r degeneracy of T2-1 and T2-2 is flagged") {
  SharpnessCase t21 = sharpness_graph(TheoremId::T2_1, 3);
  CHECK(canonical_form(t21.graph) == canonical_form(path_graph(3)));
  CHECK(min_degree(t21.graph) == 1);
  CHECK(t21.expected_witness.set == VertexSet{2});
  CHECK(t21.expected_witness.epsilon == 0);
  CHECK(t21.expected_witness.deficiency == 2);
  CHECK(t21.expected_witness.bound == 2);
  CHECK_FALSE(t21.witness_violates);
  CHECK(is_p2_covered(t21.graph).verdict);

  SharpnessCase t22 = sharpness_graph(TheoremId::T2_2, 3);
  CHECK(t22.graph.order() == 5);
  CHECK(t22.expected_witness.epsilon == 0);
  CHECK_FALSE(t22.witness_violates);
  CHECK(is_p3_covered(t22.graph).verdict);
}

TEST_CASE("sharpness_graph parameter checks") {
  CHECK_THROWS_AS(sharpness_graph(TheoremId::T1_1, 5), Error);
  CHECK_THROWS_AS(sharpness_graph(TheoremId::T1_2, 5, 2), Error);
  CHECK_THROWS_AS(sharpness_graph(TheoremId::T1_2, 2), Error);
  CHECK_THROWS_AS(sharpness_graph(TheoremId::C1_1, 4), Error);
  CHECK_THROWS_AS(sharpness_graph(TheoremId::T1_1, 4, 1), Error);
}

TEST_CASE("sharpness graphs: degree one below the bound, K_{1,r}-free, order formula") {
  for (int r = 3; r <= 8; ++r) {
    for (TheoremId id : {TheoremId::T1_1, TheoremId::T1_2, TheoremId::T2_1, TheoremId::T2_2,
                         TheoremId::T2_3}) {
      for (int n : {2, 3}) {
        if (!takes_star_parameter(id) && n == 3) continue;
        std::optional<int> np = takes_star_parameter(id) ? std::optional<int>(n) : std::nullopt;
        SharpnessCase c = sharpness_graph(id, r, np);
        CHECK(c.graph.order() == sharpness_order(id, r, n));
        CHECK(min_degree(c.graph) == degree_bound(id, r, n) - 1);
        CHECK(is_k1r_free(c.graph, r));
        CHECK(c.expected_witness == evaluate_criterion(c.graph, conclusion_criterion(id),
                                                       c.expected_witness.set, n));
        if (!c.expected_witness.set.empty())
          CHECK(c.expected_witness.set.last() == c.graph.order() - 1);
      }
    }
  }
}

TEST_CASE("big_sun") {
  CHECK(big_sun(complete_graph(1)) == complete_graph(2));

  Graph net = big_sun(odd_cycle(3));
  CHECK(net.order() == 6);
  CHECK(net.size() == 6);
  CHECK(canonical_form(net) == canonical_form(testing::net_graph()));

  for (int k : {3, 5, 7}) {
    Graph s = big_sun(odd_cycle(k));
    CHECK(s.order() == 2 * k);
    auto d = is_sun(s);
    REQUIRE(d.has_value());
    CHECK(d->kind == SunKind::BigSun);
    CHECK(d->base == VertexSet::range(k));
  }
  CHECK_THROWS_AS(big_sun(complete_graph(2)), Error);
  CHECK_THROWS_AS(big_sun(cycle_graph(4)), Error);
}

TEST_CASE("odd_cycle") {
  CHECK(odd_cycle(3) == complete_graph(3));
  CHECK(is_factor_critical(odd_cycle(5)));
  CHECK_THROWS_AS(odd_cycle(4), Error);
  CHECK_THROWS_AS(odd_cycle(1), Error);
}

}  // namespace
}  // namespace cfactor
