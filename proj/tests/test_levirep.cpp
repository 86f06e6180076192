#include "doctest.h"
#include "dynkin/levirep.hpp"
#include "dynkin/naming.hpp"
#include "oracles.hpp"

using namespace dynkin;

namespace {

NodeChoice choice(const std::string& name, int node1) { return {DynkinDiagram::parse(name), node1 - 1}; }

struct Setup {
  std::shared_ptr<const RootSystem> rs;
  Gradation gr;
  LeviData ld;
  Setup(const std::string& name, int node1)
      : rs(std::make_shared<const RootSystem>(build_root_system(DynkinDiagram::parse(name)))),
        gr(rs, node1 - 1),
        ld(rs, node1 - 1) {}
};

Weight w(std::initializer_list<int> v) {
  Weight out;
  for (int x : v) out.coeffs.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("Levi types") {
  CHECK(levi(choice("E6", 2)).diagram0().name() == "A5");
  CHECK(levi(choice("A2", 1)).diagram0().name() == "A1");
  CHECK(levi(choice("E8", 4)).diagram0().name() == "A1xA2xA4");
  CHECK(levi(choice("A1", 1)).diagram0().empty());
}

TEST_CASE("restriction of roots") {
  const Setup s("E6", 2);
  const auto& amb = s.ld.ambient_nodes();
  for (std::size_t t = 0; t < amb.size(); ++t) {
    Root a{std::vector<int>(6, 0)};
    a.coords[amb[t]] = 1;
    const auto r = restrict_weight(s.ld, a);
    for (std::size_t u = 0; u < amb.size(); ++u)
      CHECK(r.coeffs[u] == s.ld.diagram0().cartan()(static_cast<int>(t), static_cast<int>(u)));
  }
  Root minus_a0{std::vector<int>(6, 0)};
  minus_a0.coords[1] = -1;
  CHECK(restrict_weight(s.ld, minus_a0) == w({0, 0, 1, 0, 0}));

  const Setup a2("A2", 1);
  CHECK(restrict_weight(a2.ld, Root{{-1, 0}}) == w({1}));
}

TEST_CASE("graded pieces as Levi modules") {
  SUBCASE("E8 node 2") {
    const Setup s("E8", 2);
    const auto rep = piece_rep(s.gr, s.ld, -1);
    CHECK(rep.dim == 56);
    CHECK(rep.highest_weight == w({0, 0, 1, 0, 0, 0, 0}));
    CHECK(weyl_dim(s.ld, rep.highest_weight) == 56);
  }
  SUBCASE("D_n node n") {
    for (int n = 4; n <= 8; ++n) {
      const Setup s("D" + std::to_string(n), n);
      const auto rep = piece_rep(s.gr, s.ld, -1);
      CHECK(rep.dim == n * (n - 1) / 2);
      auto hw = rep.highest_weight.coeffs;
      CHECK((hw[1] == 1 || hw[n - 3] == 1));
    }
  }
  SUBCASE("B_n node n has two levels filling the algebra") {
    for (int n = 2; n <= 8; ++n) {
      const Setup s("B" + std::to_string(n), n);
      REQUIRE(s.gr.order() == 2);
      CHECK(s.gr.dim(-1) == n);
      CHECK(s.gr.dim(-2) == n * (n - 1) / 2);
      CHECK(s.gr.dim(0) + 2 * (s.gr.dim(-1) + s.gr.dim(-2)) == n * (2 * n + 1));
      CHECK(piece_rep(s.gr, s.ld, -2).dim == n * (n - 1) / 2);
    }
  }
  SUBCASE("every piece is irreducible for the gradations of E7") {
    for (int node = 1; node <= 7; ++node) {
      const Setup s("E7", node);
      for (int i = 1; i <= s.gr.order(); ++i) {
        const auto rep = piece_rep(s.gr, s.ld, -i);
        CHECK(weyl_dim(s.ld, rep.highest_weight) == rep.dim);
      }
    }
  }
}

TEST_CASE("Weyl dimension formula") {
  CHECK(weyl_dim(DynkinDiagram::parse("A1"), w({1})) == 2);
  CHECK(weyl_dim(DynkinDiagram::parse("A7"), w({0, 0, 1, 0, 0, 0, 0})) == 56);
  CHECK(weyl_dim(DynkinDiagram::parse("B3"), w({0, 0, 1})) == 8);
  CHECK(weyl_dim(DynkinDiagram::parse("E6"), w({1, 0, 0, 0, 0, 0})) == 27);
  CHECK(weyl_dim(DynkinDiagram::parse("E7"), w({0, 0, 0, 0, 0, 0, 1})) == 56);
  CHECK(weyl_dim(DynkinDiagram::parse("G2"), w({1, 0})) == 7);
  CHECK(weyl_dim(DynkinDiagram::parse("C3"), w({0, 0, 1})) == 14);
  CHECK(weyl_dim(DynkinDiagram::parse("A1xA2"), w({1, 2, 0})) == 12);
  CHECK_THROWS_AS(weyl_dim(DynkinDiagram::parse("A2"), w({-1, 0})), DomainError);
}

TEST_CASE("connecting multiplicities") {
  CHECK(connecting_multiplicities(choice("F4", 3)) == std::vector<int>{1, 2});
  CHECK(levi(choice("F4", 3)).diagram0().name() == "A1xA2");
  CHECK(connecting_multiplicities(choice("G2", 1)) == std::vector<int>{3});
  CHECK(connecting_multiplicities(choice("E6", 4)) == std::vector<int>{1, 1, 1});
  CHECK(connecting_multiplicities(choice("B5", 5)) == std::vector<int>{2});
  CHECK(connecting_multiplicities(choice("C5", 5)) == std::vector<int>{1});
}

TEST_CASE("twisted-affine dimension identities") {
  const auto results = twisted_affine_dim_check();
  REQUIRE(results.size() == 6);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK(r.pass);
    Integer total = r.level0_dim;
    for (const auto& d : r.piece_dims) total += d;
    CHECK(total == r.ambient_dim);
  }
  CHECK(results[0].ambient_dim == 45);
  CHECK(results[0].level0_dim == 15);
}

TEST_CASE("names") {
  CHECK(pvs_name(levi(choice("E6", 2))).space == "Lambda^3 C^6");
  CHECK(pvs_name(levi(choice("E6", 2))).group == "GL_6");
  CHECK(pvs_name(levi(choice("F4", 4))).group == "GL_1 x Spin_7");
  CHECK(pvs_name(levi(choice("G2", 2))).space == "S^3 C^2");
  CHECK(gln_module_name(8, w({1, 0, 0, 0, 0, 0, 0}), 9) == "C^8 (x) Lambda^8 C^8");
}
