#include <doctest.h>

#include "partalg/halfdiagram.hpp"

using namespace partalg;

TEST_CASE("one-row dimension tables") {
  const std::vector<std::vector<int>> expected{
      {1},                             // n = 0
      {1, 1},                          // n = 1
      {2, 3, 1},                       // n = 2
      {5, 10, 6, 1},                   // n = 3
      {15, 37, 31, 10, 1},             // n = 4
      {52, 151, 160, 75, 15, 1},       // n = 5
  };
  for (int n = 0; n < static_cast<int>(expected.size()); ++n)
    for (int r = 0; r <= n; ++r) {
      CHECK(half_diagram_count(n, r) == expected[n][r]);
      CHECK(BigInt(enumerate_half_diagrams(n, r).size()) ==
            half_diagram_count(n, r));
    }
}

TEST_CASE("rank decomposition recovers the full diagram count") {
  for (int n = 1; n <= 5; ++n) {
    BigInt total = 0;
    for (int r = 0; r <= n; ++r) {
      const BigInt v = half_diagram_count(n, r);
      total += factorial(r) * v * v;
    }
    CHECK(total == bell(2 * n));
  }
}

TEST_CASE("half diagram text round trip and label order") {
  const auto h = HalfDiagram::parse("*1,3|2,4|*5", 5);
  CHECK(h.rank() == 2);
  CHECK(h.labelled() == std::vector<int>{0, 2});
  CHECK(h.to_string() == "*1,3|2,4|*5");
  CHECK(HalfDiagram::parse(h.to_string(), 5) == h);
  CHECK(h.label_of_block(2) == 1);
  CHECK(h.label_of_block(1) == -1);
  CHECK_THROWS_AS(HalfDiagram::parse("*1|*1", 2), std::invalid_argument);
}

TEST_CASE("standard form of a worked diagram") {
  const auto d = PartitionDiagram::parse("1,2',3'|2|3,4,5,5',6'|6,4'|1'", 6);
  const StandardForm form = decompose(d);
  CHECK(form.top == HalfDiagram::parse("*1|2|*3,4,5|*6", 6));
  CHECK(form.bottom == HalfDiagram::parse("1|*2,3|*4|*5,6", 6));
  CHECK(form.pi == Permutation::parse("[1,3,2]"));
  CHECK(recompose(form) == d);
}

TEST_CASE("standard form is a bijection on small strand counts") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& d : diagram_basis(n)) {
      const StandardForm form = decompose(d);
      CHECK(form.top.rank() == d.propagating_number());
      CHECK(form.bottom.rank() == d.propagating_number());
      CHECK(recompose(form) == d);
    }
}

TEST_CASE("distinguished generators") {
  CHECK(v_zero(4, 0) == HalfDiagram::parse("1,2,3,4", 4));
  CHECK(v_zero(4, 2) == HalfDiagram::parse("*1|*2,3,4", 4));
  CHECK(v_zero(4, 4) == HalfDiagram::parse("*1|*2|*3|*4", 4));
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto moved = act(PartitionDiagram::e_idempotent(n, r), v_zero(n, r));
      REQUIRE(moved);
      CHECK(moved->loop_exponent == 0);
      CHECK(moved->result == v_zero(n, r));
      CHECK(moved->pi.is_identity());
    }
}

TEST_CASE("action worked examples on three dots") {
  const auto d = PartitionDiagram::parse("1,2,2'|3|1'|3'", 3);
  const auto v1 = HalfDiagram::parse("*1,2|3", 3);
  const auto moved = act(d, v1);
  REQUIRE(moved);
  CHECK(moved->loop_exponent == 1);
  CHECK(moved->result == v1);
  CHECK(moved->pi.is_identity());

  const auto v2 = HalfDiagram::parse("*1,3|*2", 3);
  CHECK(!act(d, v2));  // a label ends in a component with no top dot

  const auto d3 = PartitionDiagram::parse("1,1',2'|2|3,3'", 3);
  CHECK(!act(d3, v2));  // two labels merge into one component
}

TEST_CASE("action worked example on twelve dots") {
  const auto d = PartitionDiagram::parse(
      "1,1'|2,2',3'|3|4|5|6,6'|7|8,8'|9|10,10'|11,11',12'|12|4'|5'|7'|9'", 12);
  const auto v = HalfDiagram::parse("1,11|*2|3,10|4,9|*5,8|*6,7|*12", 12);
  const auto moved = act(d, v);
  REQUIRE(moved);
  CHECK(moved->loop_exponent == 1);
  CHECK(moved->result ==
        HalfDiagram::parse("*1,11|*2,10|3|4|5|*6|7|*8|9|12", 12));
}

TEST_CASE("action is associative against diagram products") {
  const auto basis = diagram_basis(2);
  for (int r = 0; r <= 2; ++r)
    for (const auto& v : enumerate_half_diagrams(2, r))
      for (const auto& d1 : basis)
        for (const auto& d2 : basis) {
          const Composition prod = compose_diagrams(d1, d2);
          const auto direct = act(prod.diagram, v);
          const auto inner = act(d2, v);
          if (!inner) {
            CHECK(!direct);
            continue;
          }
          const auto outer = act(d1, inner->result);
          if (!outer) {
            CHECK(!direct);
            continue;
          }
          REQUIRE(direct);
          CHECK(direct->result == outer->result);
          CHECK(prod.delta_exponent + direct->loop_exponent ==
                inner->loop_exponent + outer->loop_exponent);
          CHECK(direct->pi == outer->pi.compose(inner->pi));
        }
}
