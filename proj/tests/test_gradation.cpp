#include <algorithm>
#include <set>

#include "doctest.h"
#include "dynkin/gradation.hpp"
#include "oracles.hpp"

using namespace dynkin;

namespace {

Gradation grade_of(const std::string& name, int node1) {
  return grade({DynkinDiagram::parse(name), node1 - 1});
}

std::set<Root> as_set(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("graded dimensions") {
  const auto e8 = grade_of("E8", 2);
  CHECK(e8.order() == 3);
  CHECK(e8.dim(0) == 64);
  CHECK(e8.dim(-1) == 56);
  CHECK(e8.dim(-2) == 28);
  CHECK(e8.dim(-3) == 8);
  CHECK(e8.level(4).empty());

  for (int n = 1; n <= 8; ++n) {
    const auto a = grade_of("A" + std::to_string(n), 1);
    CHECK(a.order() == 1);
    CHECK(a.dim(-1) == n);
  }
  const auto d5 = grade_of("D5", 5);
  CHECK(d5.order() == 1);
  CHECK(d5.dim(-1) == 10);
  CHECK(d5.dim(0) == 25);
}

TEST_CASE("dimensions add up and levels are symmetric") {
  for (const char* name : {"A5", "B4", "C5", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    const auto d = DynkinDiagram::parse(name);
    for (int node = 0; node < d.rank(); ++node) {
      const auto gr = grade({d, node});
      int total = gr.dim(0);
      for (int i = 1; i <= gr.order(); ++i) {
        CHECK(gr.dim(i) == gr.dim(-i));
        CHECK(gr.dim(i) > 0);
        total += gr.dim(i) + gr.dim(-i);
      }
      CHECK(total == d.dimension());
    }
  }
}

TEST_CASE("order equals the mark") {
  CHECK(order_of({DynkinDiagram::parse("G2"), 0}) == 3);
  CHECK(order_of({DynkinDiagram::parse("F4"), 0}) == 2);
  for (int node = 0; node < 6; ++node) CHECK(order_of({DynkinDiagram::parse("A6"), node}) == 1);
  for (int node = 0; node < 8; ++node)
    CHECK(order_of({DynkinDiagram::parse("E8"), node}) == oracle::printed_marks('E', 8)[node]);
}

TEST_CASE("grading element") {
  const auto gr = grade_of("A2", 1);
  CHECK(gr.grading_element() == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
}

TEST_CASE("level-zero subsystems") {
  const auto e8 = grade_of("E8", 2);
  const auto z3 = level_zero_subsystem(e8, 3);
  CHECK(z3.size() == 72);
  CHECK(closed_symmetric(e8.roots(), z3));
  std::vector<Root> expected = e8.level(0);
  for (int i : {-3, 3}) expected.insert(expected.end(), e8.level(i).begin(), e8.level(i).end());
  CHECK(as_set(z3) == as_set(expected));
  CHECK_THROWS_AS(level_zero_subsystem(e8, 2), DivisibilityError);

  const auto a3 = grade_of("A3", 2);
  CHECK(level_zero_subsystem(a3, 1).size() == a3.roots().size());
}

TEST_CASE("Z/m pieces") {
  const auto e7 = grade_of("E7", 2);
  REQUIRE(e7.order() == 2);
  const auto pieces = zm_pieces(e7, 2);
  CHECK(pieces.size() == 2);
  CHECK(pieces.at(0).size() + pieces.at(1).size() == e7.roots().size());
  CHECK(as_set(pieces.at(0)) == as_set(level_zero_subsystem(e7, 2)));

  const auto g2 = grade_of("G2", 1);
  const auto wide = zm_pieces(g2, 7);
  for (int j = 1; j <= 3; ++j) CHECK(as_set(wide.at(j)) == as_set(g2.level(j)));
}

TEST_CASE("closed symmetric subsets") {
  const auto a2 = grade_of("A2", 1);
  CHECK(closed_symmetric(a2.roots(), a2.roots().roots()));
  CHECK_FALSE(closed_symmetric(a2.roots(), {Root{{1, 0}}}));
  for (const char* name : {"B4", "E6", "F4"}) {
    const auto d = DynkinDiagram::parse(name);
    for (int node = 0; node < d.rank(); ++node) {
      const auto gr = grade({d, node});
      CHECK(closed_symmetric(gr.roots(), gr.level(0)));
    }
  }
}

TEST_CASE("extended marks and maximal subsystems") {
  CHECK(extended_marks(DynkinDiagram::parse("E8")) == std::vector<int>{1, 2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(borel_de_siebenthal(DynkinDiagram::parse("E8"), 1).name() == "D8");
  CHECK(borel_de_siebenthal(DynkinDiagram::parse("G2"), 1).name() == "A2");
  CHECK(borel_de_siebenthal(DynkinDiagram::parse("A5"), 3).name() == "A2xA2");
  CHECK(borel_de_siebenthal(DynkinDiagram::parse("A5"), 1).name() == "A4");
  CHECK_THROWS_AS(borel_de_siebenthal(DynkinDiagram::parse("E8"), 4), Unsupported);
}
