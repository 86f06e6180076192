#include <numeric>

#include "doctest.h"
#include "dynkin/random.hpp"
#include "dynkin/rootsys.hpp"
#include "oracles.hpp"

using namespace dynkin;

namespace {

std::vector<std::pair<char, int>> all_types() {
  std::vector<std::pair<char, int>> out;
  for (int n = 1; n <= 8; ++n) out.push_back({'A', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'B', n});
  for (int n = 3; n <= 8; ++n) out.push_back({'C', n});
  for (int n = 4; n <= 8; ++n) out.push_back({'D', n});
  for (int n = 6; n <= 8; ++n) out.push_back({'E', n});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

RootSystem rs_of(const std::string& name) { return build_root_system(DynkinDiagram::parse(name)); }

std::string name_of(char f, int n) { return std::string(1, f) + std::to_string(n); }

}  // namespace

TEST_CASE("Cartan matrices agree with the bond lists") {
  for (auto [f, n] : all_types()) {
    CAPTURE(name_of(f, n));
    CHECK(rs_of(name_of(f, n)).cartan().entries() == oracle::cartan(f, n));
  }
}

TEST_CASE("root sets agree with reflection closure") {
  for (auto [f, n] : all_types()) {
    CAPTURE(name_of(f, n));
    const auto rs = rs_of(name_of(f, n));
    std::set<std::vector<int>> mine;
    for (const auto& r : rs.roots()) mine.insert(r.coords);
    CHECK(mine == oracle::roots_by_reflection(oracle::cartan(f, n)));
    CHECK(rs.highest_roots().front().coords == oracle::highest_root(oracle::cartan(f, n)));
  }
}

TEST_CASE("root counts") {
  CHECK(rs_of("A1").size() == 2);
  CHECK(rs_of("E8").size() == 240);
  CHECK(rs_of("E7").size() == 126);
  CHECK(rs_of("E6").size() == 72);
  CHECK(rs_of("F4").size() == 48);
  const auto g2 = rs_of("G2");
  CHECK(g2.size() == 12);
  CHECK(highest_root(g2, 0).coords == std::vector<int>{3, 2});
  CHECK(highest_root(rs_of("A2"), 0).coords == std::vector<int>{1, 1});
  CHECK(highest_root(rs_of("E8"), 0).coords == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(highest_root(rs_of("F4"), 0).coords == std::vector<int>{2, 3, 4, 2});
}

TEST_CASE("positive roots come first and negate into the second half") {
  for (auto [f, n] : all_types()) {
    const auto rs = rs_of(name_of(f, n));
    for (std::size_t i = 0; i < rs.size(); ++i) {
      CHECK(rs.root(i).positive() == (i < rs.num_positive()));
      CHECK(rs.root(rs.negative_index(i)) == -rs.root(i));
    }
  }
}

TEST_CASE("inner products") {
  const auto a2 = rs_of("A2");
  const Root a1{{1, 0}}, b1{{0, 1}}, s{{1, 1}};
  CHECK(inner_product(a2, a1, b1) == -1);
  CHECK(inner_product(a2, s, s) == 2);
  const auto g2 = rs_of("G2");
  CHECK(g2.pairing(Root{{1, 0}}, 1) == g2.cartan()(0, 1));
  CHECK(g2.pairing(Root{{0, 1}}, 0) == g2.cartan()(1, 0));
}

TEST_CASE("Weyl orbits") {
  const auto a2 = rs_of("A2");
  const std::vector<int> g2{1};
  CHECK(weyl_orbit(a2, Root{{1, 0}}, g2) == std::vector<Root>{Root{{1, 0}}, Root{{1, 1}}});
  CHECK(weyl_orbit(a2, Root{{1, 0}}, std::vector<int>{}) == std::vector<Root>{Root{{1, 0}}});
  const auto a3 = rs_of("A3");
  const auto orbit = weyl_orbit(a3, Root{{1, 0, 0}}, std::vector<int>{1, 2});
  CHECK(orbit == std::vector<Root>{Root{{1, 0, 0}}, Root{{1, 1, 0}}, Root{{1, 1, 1}}});
}

TEST_CASE("Weyl group preserves the root set and the form") {
  Rng rng(subseed(0, "weyl-test"));
  for (auto [f, n] : all_types()) {
    const auto rs = rs_of(name_of(f, n));
    for (int trial = 0; trial < 20; ++trial) {
      const auto& a = rs.root(rng.below(rs.size()));
      const auto& b = rs.root(rng.below(rs.size()));
      const int i = static_cast<int>(rng.below(n));
      const auto ra = reflect(rs, a, i), rb = reflect(rs, b, i);
      CHECK(rs.contains(ra));
      CHECK(inner_product(rs, ra, rb) == inner_product(rs, a, b));
    }
  }
}

TEST_CASE("type identification") {
  SUBCASE("swapped A2") {
    const auto id = identify_cartan_type(CartanMatrix(IntMatrix{{2, -1}, {-1, 2}}));
    CHECK(id.diagram.name() == "A2");
    CHECK(id.permutation.size() == 2);
  }
  SUBCASE("swapped B2 keeps the long root first") {
    const auto id = identify_cartan_type(CartanMatrix(IntMatrix{{2, -1}, {-2, 2}}));
    CHECK(id.diagram.name() == "B2");
    CHECK(id.permutation == std::vector<int>{1, 0});
  }
  SUBCASE("affine matrix") {
    CHECK_THROWS_AS(identify_cartan_type(CartanMatrix(IntMatrix{{2, -2}, {-2, 2}})), NotFiniteType);
    CHECK_THROWS_AS(identify_cartan_type(CartanMatrix(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})),
                    NotFiniteType);
  }
  SUBCASE("random relabelings recover the type and a consistent permutation") {
    Rng rng(subseed(0, "identify-test"));
    for (auto [f, n] : all_types()) {
      const auto a = oracle::cartan(f, n);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
        IntMatrix b(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) b(p[i], p[j]) = a(i, j);
        const auto id = identify_cartan_type(CartanMatrix(b));
        CHECK(id.diagram.name() == name_of(f, n));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) CHECK(b(i, j) == a(id.permutation[i], id.permutation[j]));
      }
    }
  }
}

TEST_CASE("principal minors") {
  CHECK(principal_minors_positive(oracle::cartan('E', 8)));
  CHECK_FALSE(principal_minors_positive(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  CHECK(principal_minors_positive(IntMatrix{{2}}));
}

TEST_CASE("fundamental weights") {
  const auto a1 = rs_of("A1");
  CHECK(fundamental_weight_coords(a1, Weight{{1}}) == std::vector<Rational>{Rational(1, 2)});
  const auto a2 = rs_of("A2");
  CHECK(fundamental_weight_coords(a2, Weight{{1, 0}}) == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
  const Weight w{{Rational(3), Rational(-2, 5)}};
  CHECK(weight_from_root_coords(a2, fundamental_weight_coords(a2, w)) == w);
}

TEST_CASE("diagram parsing") {
  CHECK(DynkinDiagram::parse("A1xA4").name() == "A1xA4");
  CHECK(DynkinDiagram::parse("0").empty());
  CHECK_THROWS_AS(DynkinDiagram::parse("Q3"), ParseError);
  CHECK_THROWS(DynkinDiagram::parse("E9"));
}
