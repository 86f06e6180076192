#include "doctest.h"
#include "dynkin/chevalley.hpp"
#include "dynkin/random.hpp"
#include "oracles.hpp"

using namespace dynkin;

namespace {

struct Alg {
  std::shared_ptr<const RootSystem> rs;
  ChevalleyAlgebra sc;
  explicit Alg(const std::string& name)
      : rs(std::make_shared<const RootSystem>(build_root_system(DynkinDiagram::parse(name)))), sc(rs) {}
};

AlgebraElement e(int i) { return AlgebraElement::basis(i); }

AlgebraElement jacobiator(const ChevalleyAlgebra& sc, const AlgebraElement& a, const AlgebraElement& b,
                          const AlgebraElement& c) {
  return sc.bracket(a, sc.bracket(b, c)) + sc.bracket(b, sc.bracket(c, a)) + sc.bracket(c, sc.bracket(a, b));
}

AlgebraElement cartan_part(const ChevalleyAlgebra& sc, const AlgebraElement& v) {
  AlgebraElement out;
  for (const auto& [i, c] : v.coeffs())
    if (i < sc.rank()) out.add(i, c);
  return out;
}

}  // namespace

TEST_CASE("sl2 relations") {
  const Alg a("A1");
  REQUIRE(a.sc.dim() == 3);
  const auto h = e(0), x = e(a.sc.root_basis(Root{{1}})), y = e(a.sc.root_basis(Root{{-1}}));
  CHECK(a.sc.bracket(x, y) == h);
  CHECK(a.sc.bracket(h, x) == Rational(2) * x);
  CHECK(a.sc.bracket(h, y) == Rational(-2) * y);
  CHECK(a.sc.killing_form(h, h) == 8);
}

TEST_CASE("dimensions") {
  CHECK(Alg("A2").sc.dim() == 8);
  CHECK(Alg("E8").sc.dim() == 248);
  CHECK(Alg("G2").sc.dim() == 14);
}

TEST_CASE("Jacobi identity on every basis triple") {
  for (const char* name : {"A2", "B2", "G2", "A3", "C3"}) {
    CAPTURE(name);
    const Alg a(name);
    const int n = a.sc.dim();
    int bad = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          if (!jacobiator(a.sc, e(i), e(j), e(k)).is_zero()) ++bad;
    CHECK(bad == 0);
  }
}

TEST_CASE("Jacobi identity on seeded random E8 triples") {
  const Alg a("E8");
  Rng rng(subseed(0, "jacobi-test"));
  for (int t = 0; t < 2000; ++t) {
    const int i = static_cast<int>(rng.below(248)), j = static_cast<int>(rng.below(248)),
              k = static_cast<int>(rng.below(248));
    CHECK(jacobiator(a.sc, e(i), e(j), e(k)).is_zero());
  }
}

TEST_CASE("structure constants are +-(p+1)") {
  for (const char* name : {"B3", "C3", "F4", "G2", "D4"}) {
    CAPTURE(name);
    const Alg a(name);
    const auto d = DynkinDiagram::parse(name);
    const auto roots = oracle::roots_by_reflection(d.cartan().entries());
    const auto& rs = *a.rs;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (std::size_t j = 0; j < rs.size(); ++j) {
        const auto& al = rs.root(i);
        const auto& be = rs.root(j);
        const int n = a.sc.structure_constant(i, j);
        if (!roots.count((al + be).coords)) {
          CHECK(n == 0);
          continue;
        }
        int p = 0;
        Root r = be - al;
        while (roots.count(r.coords)) {
          ++p;
          r = r - al;
        }
        CHECK(std::abs(n) == p + 1);
      }
    }
  }
}

TEST_CASE("brackets respect the grading and the Killing form pairs opposite levels") {
  const Alg a("A2");
  const auto x1 = e(a.sc.root_basis(Root{{1, 0}})), x2 = e(a.sc.root_basis(Root{{0, 1}}));
  const auto b = a.sc.bracket(x1, x2);
  CHECK(b.coeffs().size() == 1);
  CHECK(b.coeffs().begin()->first == a.sc.root_basis(Root{{1, 1}}));
  CHECK(abs(b.coeffs().begin()->second) == 1);
  CHECK(a.sc.bracket(x1, x1).is_zero());

  const Alg f("F4");
  const Gradation gr(f.rs, 1);
  for (int i = -gr.order(); i <= gr.order(); ++i)
    for (int j = -gr.order(); j <= gr.order(); ++j) {
      if (i == 0 || j == 0) continue;
      for (const auto& r : gr.level(i))
        for (const auto& s : gr.level(j)) {
          const auto v = f.sc.bracket(e(f.sc.root_basis(r)), e(f.sc.root_basis(s)));
          if (i + j != 0 && !v.is_zero()) CHECK(element_level(f.sc, gr, v) == i + j);
          const int k = f.sc.killing_basis(f.sc.root_basis(r), f.sc.root_basis(s));
          if (r != -s) CHECK(k == 0);
          else CHECK(k != 0);
        }
    }
}

TEST_CASE("grading element") {
  const Alg a1("A1");
  CHECK(grading_element(a1.sc, Gradation(a1.rs, 0)) == AlgebraElement::basis(0, Rational(1, 2)));

  const Alg e6("E6");
  for (int node = 0; node < 6; ++node) {
    const Gradation gr(e6.rs, node);
    const auto c = grading_element(e6.sc, gr);
    for (std::size_t i = 0; i < e6.rs->size(); ++i) {
      const auto x = e(e6.sc.root_basis(i));
      CHECK(e6.sc.bracket(c, x) == Rational(gr.level_of(e6.rs->root(i))) * x);
    }
  }
}

TEST_CASE("generic pairs") {
  SUBCASE("A1") {
    const Alg a("A1");
    const Gradation gr(a.rs, 0);
    const auto p = generic_pair(a.sc, gr);
    CHECK(p.scale == Rational(1, 2));
    CHECK(a.sc.bracket(p.x, p.y) == grading_element(a.sc, gr));
    CHECK(orbit_dimension(a.sc, gr, p.x) == gr.dim(1));
  }
  SUBCASE("D5 node 1") {
    const Alg a("D5");
    const Gradation gr(a.rs, 0);
    const auto p = generic_pair(a.sc, gr);
    CHECK(a.sc.bracket(p.x, p.y) == grading_element(a.sc, gr));
    CHECK(orbit_dimension(a.sc, gr, p.x) == gr.dim(1));
  }
  SUBCASE("A2 node 1: Cartan part is c but cross terms survive") {
    const Alg a("A2");
    const Gradation gr(a.rs, 0);
    CHECK_THROWS_AS(generic_pair(a.sc, gr), RegularityFailed);
    const auto p = generic_pair_candidate(a.sc, gr);
    CHECK(p.scale == Rational(1, 3));
    CHECK(p.orbit.size() == 2);
    const auto b = a.sc.bracket(p.x, p.y);
    CHECK(cartan_part(a.sc, b) == grading_element(a.sc, gr));
    CHECK_FALSE(b == grading_element(a.sc, gr));
  }
  SUBCASE("non-simply-laced input") {
    const Alg a("B3");
    CHECK_THROWS_AS(generic_pair(a.sc, Gradation(a.rs, 0)), Unsupported);
  }
}

TEST_CASE("orbit dimensions") {
  const Alg a("E8");
  const Gradation gr(a.rs, 1);
  CHECK(orbit_dimension(a.sc, gr, AlgebraElement{}) == 0);
  Root a0{std::vector<int>(8, 0)};
  a0.coords[1] = 1;
  const int single = orbit_dimension(a.sc, gr, e(a.sc.root_basis(a0)));
  CHECK(single < 56);
  CHECK(single > 0);
  Rng rng(subseed(0, "orbit-test"));
  AlgebraElement v;
  for (const auto& r : gr.level(1)) v.add(a.sc.root_basis(r), rng.nonzero_rational(9, 4));
  CHECK(orbit_dimension(a.sc, gr, v) == 56);
}

TEST_CASE("orbit sums") {
  const Alg a("A2");
  const auto rep = orbit_sums(a.sc, Gradation(a.rs, 0));
  CHECK(rep.orbit_size == 2);
  CHECK(rep.sums == std::vector<Rational>{Rational(3), Rational(0)});
  CHECK(rep.restriction_commutes);
  CHECK(rep.pass());
  CHECK(orthogonal_part_norm(*a.rs, 0) == Rational(3, 2));
  for (const char* name : {"D5", "E6", "E7"}) {
    const Alg b(name);
    for (int node = 0; node < b.rs->rank(); ++node) CHECK(orbit_sums(b.sc, Gradation(b.rs, node)).pass());
  }
}
