#include "dynkin/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dynkin/augment.hpp"
#include "dynkin/chevalley.hpp"
#include "dynkin/glorbits.hpp"
#include "dynkin/random.hpp"
#include "dynkin/tables.hpp"

namespace dynkin {

namespace {

constexpr std::size_t kMaxExamples = 8;

std::string where(const SimpleType& t, int node) { return t.name() + " node " + std::to_string(node + 1); }

std::shared_ptr<const RootSystem> simple_rs(const SimpleType& t) {
  return std::make_shared<const RootSystem>(build_root_system(DynkinDiagram({t})));
}

int classical_dim(const SimpleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * n + 2 * n;
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

bool equivalent_nodes(const SimpleType& t, int a, int b) {
  for (const auto& p : diagram_automorphisms(cartan_matrix(t)))
    if (p[a] == b) return true;
  return false;
}

using Sparse = std::map<int, long long>;

void add_bracket(const ChevalleyAlgebra& sc, int i, const Sparse& v, long long scale, Sparse& out) {
  for (const auto& [b, c] : v)
    for (const auto& [k, n] : sc.bracket_basis(i, b)) out[k] += scale * c * n;
}

Sparse basis_bracket(const ChevalleyAlgebra& sc, int i, int j) {
  Sparse s;
  for (const auto& [k, n] : sc.bracket_basis(i, j)) s[k] += n;
  return s;
}

bool jacobi_holds(const ChevalleyAlgebra& sc, int i, int j, int k) {
  Sparse total;
  add_bracket(sc, i, basis_bracket(sc, j, k), 1, total);
  add_bracket(sc, j, basis_bracket(sc, k, i), 1, total);
  add_bracket(sc, k, basis_bracket(sc, i, j), 1, total);
  return std::all_of(total.begin(), total.end(), [](const auto& kv) { return kv.second == 0; });
}

std::vector<int> basis_coords(const ChevalleyAlgebra& sc, int b) {
  if (auto r = sc.root_of(b)) return sc.roots().root(*r).coords;
  return std::vector<int>(sc.rank(), 0);
}

AlgebraElement random_level_element(const ChevalleyAlgebra& sc, const Gradation& gr, int k, Rng& rng) {
  AlgebraElement v;
  for (const auto& r : gr.level(k)) v.add(sc.root_basis(r), rng.nonzero_rational(9, 4));
  return v;
}

RatMatrix random_sl(int n, Rng& rng) {
  RatMatrix g = RatMatrix::identity(n);
  for (int step = 0; step < 3 * n; ++step) {
    const int i = rng.uniform(0, n - 1);
    int j = rng.uniform(0, n - 2);
    if (j >= i) ++j;
    RatMatrix e = RatMatrix::identity(n);
    e(i, j) = rng.rational(3, 2);
    g = g * e;
  }
  return g;
}

RatMatrix random_gl2(Rng& rng) {
  for (;;) {
    RatMatrix A{{rng.rational(5, 3), rng.rational(5, 3)}, {rng.rational(5, 3), rng.rational(5, 3)}};
    if (A(0, 0) * A(1, 1) != A(0, 1) * A(1, 0)) return A;
  }
}

RatMatrix random_antisymmetric(int n, Rng& rng) {
  RatMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      M(i, j) = rng.rational(5, 3);
      M(j, i) = -M(i, j);
    }
  return M;
}

}  // namespace

void CheckResult::record(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++failures;
  if (examples.size() < kMaxExamples) examples.push_back(what);
}

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

CheckResult check_root_systems(int max_rank) {
  CheckResult res{"root_systems"};
  for (const auto& t : simple_types(max_rank)) {
    const auto rs = simple_rs(t);
    res.record(rs->dimension() == classical_dim(t),
               t.name() + ": dim " + std::to_string(rs->dimension()) + ", expected " + std::to_string(classical_dim(t)));
    bool closed = true;
    for (const auto& r : rs->roots()) {
      closed = closed && rs->contains(-r);
      for (int i = 0; i < rs->rank(); ++i) closed = closed && rs->contains(reflect(*rs, r, i));
    }
    res.record(closed, t.name() + ": root set not closed under negation and simple reflections");
    std::vector<int> all(rs->rank());
    for (int i = 0; i < rs->rank(); ++i) all[i] = i;
    const auto orbit = weyl_orbit(*rs, highest_root(*rs, 0), all);
    const std::set<Root> in(orbit.begin(), orbit.end());
    bool orbit_closed = true;
    for (const auto& r : orbit)
      for (int i = 0; i < rs->rank(); ++i) orbit_closed = orbit_closed && in.count(reflect(*rs, r, i));
    res.record(orbit_closed, t.name() + ": Weyl orbit of the highest root is not reflection-closed");
  }
  return res;
}

CheckResult check_weyl_invariance(int max_rank) {
  CheckResult res{"weyl_invariance"};
  for (const auto& t : simple_types(max_rank)) {
    const auto rs = simple_rs(t);
    bool ok = true;
    for (int i = 0; i < rs->rank() && ok; ++i) {
      std::vector<Root> img;
      for (const auto& r : rs->roots()) img.push_back(reflect(*rs, r, i));
      for (std::size_t a = 0; a < rs->size() && ok; ++a)
        for (std::size_t b = a; b < rs->size() && ok; ++b)
          ok = rs->form(img[a], img[b]) == rs->form(rs->root(a), rs->root(b));
    }
    res.record(ok, t.name() + ": a simple reflection does not preserve the form");
  }
  return res;
}

CheckResult check_identification(std::uint64_t seed, int max_rank) {
  CheckResult res{"identification"};
  Rng rng(subseed(seed, "identification"));
  const auto types = simple_types(max_rank);
  std::vector<std::vector<SimpleType>> diagrams;
  for (const auto& t : types) diagrams.push_back({t});
  for (std::size_t a = 0; a < types.size(); ++a)
    for (std::size_t b = a; b < types.size(); ++b)
      if (types[a].rank + types[b].rank <= max_rank && (a + b) % 5 == 0) diagrams.push_back({types[a], types[b]});
  for (const auto& comps : diagrams) {
    const DynkinDiagram d(comps);
    const auto canon = d.cartan();
    const auto direct = identify_cartan_type(canon);
    res.record(direct.diagram.name() == d.name(), d.name() + ": canonical matrix identified as " + direct.diagram.name());
    const int n = d.rank();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    IntMatrix shuffled(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) shuffled(i, j) = canon(perm[i], perm[j]);
    const auto id = identify_cartan_type(CartanMatrix(shuffled));
    bool ok = id.diagram.name() == d.name();
    const auto target = id.diagram.cartan();
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) ok = shuffled(i, j) == target(id.permutation[i], id.permutation[j]);
    res.record(ok, d.name() + ": shuffled matrix identified as " + id.diagram.name());
  }
  return res;
}

CheckResult check_gradations(int max_rank) {
  CheckResult res{"gradations"};
  for (const auto& t : simple_types(max_rank)) {
    const auto rs = simple_rs(t);
    const auto marks = highest_root(*rs, 0).coords;
    for (int node = 0; node < t.rank; ++node) {
      const Gradation gr(rs, node);
      const int n = gr.order();
      int total = rs->rank();
      bool symmetric = true;
      for (const auto& [i, roots] : gr.levels()) {
        total += static_cast<int>(roots.size());
        std::set<Root> neg;
        for (const auto& r : gr.level(-i)) neg.insert(-r);
        symmetric = symmetric && std::set<Root>(roots.begin(), roots.end()) == neg;
      }
      const auto w = where(t, node);
      res.record(total == rs->dimension(), w + ": level dimensions do not add up");
      res.record(symmetric, w + ": level -i is not the negative of level i");
      res.record(n == marks[node] && n == order_of({DynkinDiagram({t}), node}), w + ": order differs from the mark");
      res.record(n >= 1 && n <= 6 && (n != 6 || (t == SimpleType{Family::E, 8} && node == 3)),
                 w + ": order " + std::to_string(n) + " outside the expected range");
      for (int m = 1; m <= n; ++m) {
        if (n % m) continue;
        res.record(closed_symmetric(*rs, level_zero_subsystem(gr, m)),
                   w + ": level-zero subsystem mod " + std::to_string(m) + " is not closed and symmetric");
      }
    }
  }
  return res;
}

CheckResult check_levi_pieces(int max_rank) {
  CheckResult res{"levi_pieces"};
  for (const auto& t : simple_types(max_rank)) {
    const auto rs = simple_rs(t);
    for (int node = 0; node < t.rank; ++node) {
      const Gradation gr(rs, node);
      const LeviData ld(rs, node);
      const auto w = where(t, node);
      for (int i = -gr.order(); i <= gr.order(); ++i) {
        if (i == 0) continue;
        const auto rep = piece_rep(gr, ld, i);
        res.record(weyl_dim(ld, rep.highest_weight) == rep.dim,
                   w + ": level " + std::to_string(i) + " is not irreducible of dimension " + std::to_string(rep.dim));
        bool ok = std::set<Weight>(rep.weights.begin(), rep.weights.end()).size() == rep.weights.size();
        if (!ld.diagram0().empty())
          for (const auto& x : rep.weights) {
            Weight d{x.coeffs};
            for (std::size_t k = 0; k < d.coeffs.size(); ++k) d.coeffs[k] -= rep.weights[0].coeffs[k];
            for (const auto& c : ld.root_system0().to_root_coords(d)) ok = ok && c.get_den() == 1;
          }
        res.record(ok, w + ": weights of level " + std::to_string(i) + " are not distinct and congruent");
      }
      Root a0{std::vector<int>(t.rank, 0)};
      a0.coords[node] = 1;
      res.record(piece_rep(gr, ld, -1).highest_weight == restrict_weight(ld, -a0) && ld.omega() == restrict_weight(ld, -a0),
                 w + ": highest weight of level -1 is not the restriction of -alpha_0");
      const auto nu = ld.nu();
      const int multiple = static_cast<int>(std::count_if(nu.begin(), nu.end(), [](int x) { return x > 1; }));
      const bool range = std::all_of(nu.begin(), nu.end(), [](int x) { return x >= 1 && x <= 3; });
      res.record(range && multiple <= 1, w + ": connecting multiplicities out of range");
    }
  }
  return res;
}

CheckResult check_round_trip(int max_rank) {
  CheckResult res{"augmentation_round_trip"};
  for (const auto& t : simple_types(max_rank))
    for (int node = 0; node < t.rank; ++node) {
      const LeviData ld(simple_rs(t), node);
      const auto w = where(t, node);
      try {
        const auto amb = identify_ambient({ld.diagram0(), ld.omega(), ld.nu()});
        res.record(amb.diagram.name() == t.name() && equivalent_nodes(t, node, amb.node),
                   w + ": recovered " + amb.diagram.name() + " node " + std::to_string(amb.node + 1));
      } catch (const Error& e) {
        res.record(false, w + ": " + e.what());
      }
    }
  return res;
}

CheckResult check_enumeration(int max_rank) {
  CheckResult res{"augmentation_enumeration"};
  std::map<std::string, DynkinDiagram> levis;
  std::set<std::pair<std::string, int>> expected;
  for (const auto& t : simple_types(max_rank))
    for (int node = 0; node < t.rank; ++node) {
      const LeviData ld(simple_rs(t), node);
      levis.emplace(ld.diagram0().name(), ld.diagram0());
      int rep = node;
      for (const auto& p : diagram_automorphisms(cartan_matrix(t))) rep = std::min(rep, p[node]);
      expected.emplace(t.name(), rep);
    }
  std::set<std::pair<std::string, int>> found;
  for (const auto& [name, d] : levis)
    for (const auto& aug : enumerate_augmentations(d)) {
      const auto& amb = aug.ambient;
      res.record(principal_minors_positive(build_augmented_matrix(aug.input).matrix),
                 name + ": enumerated matrix has a non-positive principal minor");
      if (!amb.diagram.simple() || amb.diagram.rank() > max_rank) continue;
      const auto t = amb.diagram.components()[0];
      const LeviData back(simple_rs(t), amb.node);
      res.record(back.diagram0().name() == name,
                 name + ": augmentation to " + where(t, amb.node) + " has Levi " + back.diagram0().name());
      int rep = amb.node;
      for (const auto& p : diagram_automorphisms(cartan_matrix(t))) rep = std::min(rep, p[amb.node]);
      found.emplace(t.name(), rep);
    }
  for (const auto& e : expected)
    res.record(found.count(e) > 0, e.first + " node " + std::to_string(e.second + 1) + " not reached by enumeration");
  return res;
}

CheckResult check_jacobi(std::uint64_t seed, int max_rank, int samples) {
  CheckResult res{"jacobi"};
  std::size_t triples = 0;
  for (const auto& t : simple_types(max_rank)) {
    const ChevalleyAlgebra sc(simple_rs(t));
    const int d = sc.dim();
    bool ok = true;
    if (t.rank <= 4) {
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
          for (int k = j + 1; k < d; ++k) {
            ok = ok && jacobi_holds(sc, i, j, k);
            ++triples;
          }
    } else {
      Rng rng(subseed(seed, "jacobi/" + t.name()));
      const int n = t.family == Family::E && t.rank >= 7 ? samples : samples / 10;
      for (int s = 0; s < n; ++s) {
        ok = ok && jacobi_holds(sc, rng.uniform(0, d - 1), rng.uniform(0, d - 1), rng.uniform(0, d - 1));
        ++triples;
      }
    }
    res.record(ok, t.name() + ": Jacobi identity fails");
  }
  res.note = std::to_string(triples) + " triples";
  return res;
}

CheckResult check_grading_killing(int max_rank) {
  CheckResult res{"grading_and_killing"};
  for (const auto& t : simple_types(max_rank)) {
    const auto rs = simple_rs(t);
    const ChevalleyAlgebra sc(rs);
    const int d = sc.dim();
    std::vector<std::vector<int>> coords(d);
    for (int b = 0; b < d; ++b) coords[b] = basis_coords(sc, b);
    bool graded = true, orthogonal = true;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<int> sum(t.rank);
        for (int q = 0; q < t.rank; ++q) sum[q] = coords[i][q] + coords[j][q];
        for (const auto& [k, n] : sc.bracket_basis(i, j)) graded = graded && coords[k] == sum;
        if (sc.killing_basis(i, j) != 0) orthogonal = orthogonal && std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; });
      }
    res.record(graded, t.name() + ": bracket does not respect the root grading");
    res.record(orthogonal, t.name() + ": Killing form pairs levels not summing to zero");
    for (int node = 0; node < t.rank; ++node) {
      const Gradation gr(rs, node);
      for (int i = 0; i <= gr.order(); ++i) {
        std::vector<int> left, right;
        if (i == 0)
          for (int h = 0; h < sc.rank(); ++h) left.push_back(h);
        right = left;
        for (const auto& r : gr.level(i)) left.push_back(sc.root_basis(r));
        for (const auto& r : gr.level(-i)) right.push_back(sc.root_basis(r));
        RatMatrix k(left.size(), right.size());
        for (std::size_t a = 0; a < left.size(); ++a)
          for (std::size_t b = 0; b < right.size(); ++b) k(a, b) = Rational(static_cast<long>(sc.killing_basis(left[a], right[b])));
        res.record(left.size() == right.size() && rank(k) == left.size(),
                   where(t, node) + ": Killing form degenerate on levels " + std::to_string(i) + ", " + std::to_string(-i));
      }
    }
  }
  return res;
}

CheckResult check_nilpotency(std::uint64_t seed, int max_rank) {
  CheckResult res{"nilpotency"};
  for (const auto& t : simple_types(std::min(max_rank, 6))) {
    if (t.dimension() > 80) continue;
    const auto rs = simple_rs(t);
    const ChevalleyAlgebra sc(rs);
    Rng rng(subseed(seed, "nilpotency/" + t.name()));
    for (int node = 0; node < t.rank; ++node) {
      const Gradation gr(rs, node);
      const int n = gr.order();
      for (int k = -n; k <= n; ++k) {
        if (k == 0) continue;
        const auto v = random_level_element(sc, gr, k, rng);
        const int power = (2 * n + std::abs(k) - 1) / std::abs(k) + 1;
        bool ok = true;
        for (int b = 0; b < sc.dim() && ok; ++b) {
          AlgebraElement x = AlgebraElement::basis(b);
          for (int p = 0; p < power && !x.is_zero(); ++p) x = sc.bracket(v, x);
          ok = x.is_zero();
        }
        res.record(ok, where(t, node) + ": ad v not nilpotent on level " + std::to_string(k));
      }
    }
  }
  res.note = "all gradations of algebras of dimension <= 80";
  return res;
}

CheckResult check_generic_pairs(int max_rank) {
  CheckResult res{"generic_pairs"};
  std::size_t regular = 0, generic = 0;
  for (const auto& t : simple_types(max_rank)) {
    const auto rs = simple_rs(t);
    if (!rs->cartan().simply_laced()) continue;
    const ChevalleyAlgebra sc(rs);
    for (int node = 0; node < t.rank; ++node) {
      const Gradation gr(rs, node);
      const auto cand = generic_pair_candidate(sc, gr);
      const auto xy = sc.bracket(cand.x, cand.y);
      std::size_t cross = 0;
      for (const auto& [b, c] : xy.coeffs()) cross += sc.root_of(b).has_value();
      const bool bracket_ok = xy == grading_element(sc, gr);
      const int od = orbit_dimension(sc, gr, cand.x);
      regular += bracket_ok;
      generic += od == gr.dim(1);
      res.record(bracket_ok && od == gr.dim(1), where(t, node) + ": [X,Y] has " + std::to_string(cross) +
                                                    " root-vector terms, orbit dim " + std::to_string(od) + "/" +
                                                    std::to_string(gr.dim(1)));
    }
  }
  res.note = std::to_string(regular) + " with [X,Y] = c, " + std::to_string(generic) + " with X generic";
  return res;
}

CheckResult check_orbit_sums(int max_rank) {
  CheckResult res{"orbit_sums"};
  for (const auto& t : simple_types(max_rank)) {
    const auto rs = simple_rs(t);
    if (!rs->cartan().simply_laced()) continue;
    const ChevalleyAlgebra sc(rs);
    for (int node = 0; node < t.rank; ++node) {
      const auto rep = orbit_sums(sc, Gradation(rs, node));
      res.record(rep.pass(), where(t, node) + ": orbit sums differ from the projection formula");
    }
  }
  return res;
}

CheckResult check_open_orbits(std::uint64_t seed, int max_rank, int retries) {
  CheckResult res{"open_orbits"};
  std::size_t draws = 0;
  for (const auto& t : simple_types(max_rank)) {
    const auto rs = simple_rs(t);
    const ChevalleyAlgebra sc(rs);
    for (int node = 0; node < t.rank; ++node) {
      const Gradation gr(rs, node);
      for (int k = -gr.order(); k <= gr.order(); ++k) {
        if (k == 0) continue;
        Rng rng(subseed(seed, "open_orbit/" + t.name(), static_cast<std::uint64_t>(node * 16 + k + 8)));
        bool ok = false;
        for (int attempt = 0; attempt < retries && !ok; ++attempt) {
          ++draws;
          ok = orbit_dimension(sc, gr, random_level_element(sc, gr, k, rng)) == gr.dim(k);
        }
        res.record(ok, where(t, node) + ": no generic vector in level " + std::to_string(k) + " after " +
                           std::to_string(retries) + " draws");
      }
    }
  }
  res.note = std::to_string(draws) + " draws";
  return res;
}

CheckResult check_glorbits(std::uint64_t seed) {
  CheckResult res{"two_form_pairs"};
  Rng rng(subseed(seed, "glorbits"));
  for (int m = 1; m <= 3; ++m)
    for (int s = 0; s < 100; ++s) {
      const auto pair = make_pair(m, random_antisymmetric(2 * m, rng), random_antisymmetric(2 * m, rng));
      const auto f = phi(pair);
      const Rational l = rng.rational(4, 3), mu = rng.rational(4, 3);
      Rational value = 0, lp = 1;
      for (int k = m; k >= 0; --k) {
        Rational term = f.coeffs[k] * lp;
        for (int q = 0; q < k; ++q) term *= mu;
        value += term;
        lp *= l;
      }
      RatMatrix pencil(2 * m, 2 * m);
      for (int i = 0; i < 2 * m; ++i)
        for (int j = 0; j < 2 * m; ++j) pencil(i, j) = l * pair.M1(i, j) + mu * pair.M2(i, j);
      Rational fact = 1;
      for (int q = 2; q <= m; ++q) fact *= q;
      res.record(value * value == fact * fact * determinant(pencil),
                 "m=" + std::to_string(m) + ": phi^2 differs from (m!)^2 det");
    }
  for (int m = 1; m <= 4; ++m)
    for (int s = 0; s < 100; ++s) {
      const auto pair = make_pair(m, random_antisymmetric(2 * m, rng), random_antisymmetric(2 * m, rng));
      res.record(covariance_check(pair, random_gl2(rng), random_sl(2 * m, rng)),
                 "m=" + std::to_string(m) + ": covariance identity fails");
    }
  for (int m = 1; m <= 4; ++m)
    for (int s = 0; s < 20; ++s) {
      PointConfig pts;
      for (int i = 0; i < m; ++i)
        pts.points.push_back(rng.below(6) == 0 ? ProjectivePoint{1, 0} : ProjectivePoint{rng.rational(6, 4), 1});
      std::sort(pts.points.begin(), pts.points.end());
      res.record(point_config_invariant(construct_from_points(pts)).points == pts.points,
                 "m=" + std::to_string(m) + ": point configuration does not round-trip");
    }
  {
    const auto p1 = make_pair(1, random_antisymmetric(3, rng), random_antisymmetric(3, rng));
    res.record(orbit_dim_gl2sl(p1) == pair_space_dim(3), "m=1: random pair is not generic");
    const auto k4 = kronecker_pair(4);
    res.record(orbit_dim_gl2sl(k4) == 72 && classify_u1_u2(k4) == Stratum::U2, "m=4: regular pencil does not reach 72");
  }
  for (int m = 1; m <= 3; ++m) {
    RatMatrix u1a(2 * m + 1, 2 * m + 1), u1b(2 * m + 1, 2 * m + 1);
    for (int i = 0; i < m; ++i) {
      u1a(2 * i, 2 * i + 1) = 1;
      u1a(2 * i + 1, 2 * i) = -1;
      u1b(0, 2 * i + 1) = i + 1;
      u1b(2 * i + 1, 0) = -(i + 1);
    }
    const auto u1 = make_pair(m, u1a, u1b);
    const auto u2 = kronecker_pair(m);
    bool stable = true;
    for (int s = 0; s < 50; ++s) {
      const auto A = random_gl2(rng);
      const auto g = random_sl(2 * m + 1, rng);
      stable = stable && classify_u1_u2(act(u1, A, g)) == Stratum::U1 && classify_u1_u2(act(u2, A, g)) == Stratum::U2;
    }
    res.record(stable, "m=" + std::to_string(m) + ": stratum changes along the group orbit");
  }
  {
    const PointConfig a{{{0, 1}, {1, 1}, {-1, 1}, {1, 0}}};
    const PointConfig b{{{0, 1}, {1, 1}, {3, 1}, {1, 0}}};
    const auto pa = construct_from_points(a), pb = construct_from_points(b);
    const auto ja = j_invariant(point_config_invariant(pa)), jb = j_invariant(point_config_invariant(pb));
    res.record(orbit_dim_gl2sl(pa) == orbit_dim_gl2sl(pb) && ja != jb,
               "m=4: configurations with different cross-ratios are not separated");
  }
  return res;
}

CheckResult check_twisted() {
  CheckResult res{"twisted_affine_dimensions"};
  for (const auto& r : twisted_affine_dim_check()) res.record(r.pass, r.name);
  return res;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport rep;
  rep.seed = opts.seed;
  rep.max_rank = opts.max_rank;
  const int r = opts.max_rank;
  rep.checks.push_back(check_root_systems(r));
  rep.checks.push_back(check_weyl_invariance(r));
  rep.checks.push_back(check_identification(opts.seed, r));
  rep.checks.push_back(check_gradations(r));
  rep.checks.push_back(check_levi_pieces(r));
  rep.checks.push_back(check_round_trip(r));
  rep.checks.push_back(check_enumeration(r));
  rep.checks.push_back(check_jacobi(opts.seed, r, opts.jacobi_samples));
  rep.checks.push_back(check_grading_killing(r));
  rep.checks.push_back(check_nilpotency(opts.seed, r));
  rep.checks.push_back(check_orbit_sums(r));
  rep.checks.push_back(check_generic_pairs(r));
  rep.checks.push_back(check_open_orbits(opts.seed, r, opts.retries));
  rep.checks.push_back(check_glorbits(opts.seed));
  rep.checks.push_back(check_twisted());
  return rep;
}

nlohmann::ordered_json to_json(const CheckResult& c) {
  nlohmann::ordered_json j{{"name", c.name}, {"pass", c.pass()}, {"cases", c.cases}, {"failures", c.failures}};
  if (!c.note.empty()) j["note"] = c.note;
  if (!c.examples.empty()) j["examples"] = c.examples;
  return j;
}

nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j{{"seed", r.seed}, {"max_rank", r.max_rank}, {"pass", r.pass()}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  return j;
}

}  // namespace dynkin
