#include "dynkin/chevalley.hpp"

#include <algorithm>
#include <set>

#include "dynkin/levirep.hpp"

namespace dynkin {

AlgebraElement AlgebraElement::basis(int index, Rational coeff) {
  AlgebraElement e;
  e.add(index, coeff);
  return e;
}

Rational AlgebraElement::coeff(int index) const {
  auto it = c_.find(index);
  return it == c_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(int index, const Rational& v) {
  if (v == 0) return;
  auto [it, fresh] = c_.emplace(index, v);
  if (fresh) return;
  it->second += v;
  if (it->second == 0) c_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [i, v] : o.c_) add(i, v);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [i, v] : o.c_) add(i, -v);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [i, v] : c_) v *= s;
  return *this;
}

// ---------------------------------------------------------------------------

namespace {

class ConstantSolver {
 public:
  explicit ConstantSolver(const RootSystem& rs) : rs_(rs), m_(rs.size()), pos_(rs.num_positive()) {
    norm_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) norm_[i] = rs.form(rs.root(i), rs.root(i));
    sum_.assign(m_ * m_, -1);
    for (std::size_t a = 0; a < m_; ++a)
      for (std::size_t b = 0; b < m_; ++b)
        if (auto s = rs.index_of(rs.root(a) + rs.root(b))) sum_[a * m_ + b] = static_cast<long>(*s);
    npos_.assign(pos_ * pos_, 0);
  }

  std::vector<int> solve() {
    for (std::size_t xi = 0; xi < pos_; ++xi) {
      std::vector<std::pair<std::size_t, std::size_t>> special;
      for (std::size_t a = 0; a < xi; ++a)
        for (std::size_t b = a + 1; b < xi; ++b)
          if (sum_[a * m_ + b] == static_cast<long>(xi)) special.emplace_back(a, b);
      if (special.empty()) continue;
      const auto [a1, b1] = special.front();
      int p = 0;
      while (true) {
        Root probe = rs_.root(b1);
        for (int k = 0; k <= p; ++k) probe = probe - rs_.root(a1);
        if (!rs_.contains(probe)) break;
        ++p;
      }
      npos_[a1 * pos_ + b1] = p + 1;
      for (std::size_t s = 1; s < special.size(); ++s) {
        const auto [a, b] = special[s];
        const std::size_t na = rs_.negative_index(a), nb = rs_.negative_index(b);
        Rational acc = 0;
        const long eta = sum_[b1 * m_ + na];  // beta1 - alpha
        if (eta >= 0) acc += Rational(n(b1, na) * n(a1, nb)) / norm_[eta];
        const long zeta = sum_[a1 * m_ + na];  // alpha1 - alpha
        if (zeta >= 0) acc += Rational(n(na, a1) * n(b1, nb)) / norm_[zeta];
        Rational v = norm_[xi] / npos_[a1 * pos_ + b1] * acc;
        if (v.get_den() != 1) throw DomainError("non-integral structure constant");
        npos_[a * pos_ + b] = static_cast<int>(v.get_num().get_si());
      }
    }
    std::vector<int> out(m_ * m_, 0);
    for (std::size_t a = 0; a < m_; ++a)
      for (std::size_t b = 0; b < m_; ++b)
        if (sum_[a * m_ + b] >= 0) out[a * m_ + b] = n(a, b);
    return out;
  }

 private:
  bool positive(std::size_t i) const { return i < pos_; }

  int scaled(const Rational& num, const Rational& den, int v) const {
    Rational q = num / den * v;
    if (q.get_den() != 1) throw DomainError("non-integral structure constant");
    return static_cast<int>(q.get_num().get_si());
  }

  // N_{a,b} for a + b a root, from the positive-pair table.
  int n(std::size_t a, std::size_t b) const {
    if (positive(a) && positive(b)) return a < b ? npos_[a * pos_ + b] : -npos_[b * pos_ + a];
    if (!positive(a) && !positive(b)) return -n(rs_.negative_index(a), rs_.negative_index(b));
    const std::size_t c = rs_.negative_index(static_cast<std::size_t>(sum_[a * m_ + b]));
    // N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b) with a + b + c = 0.
    if (positive(a) == positive(c)) return scaled(norm_[c], norm_[b], n(c, a));
    return scaled(norm_[c], norm_[a], n(b, c));
  }

  const RootSystem& rs_;
  std::size_t m_, pos_;
  std::vector<Rational> norm_;
  std::vector<long> sum_;
  std::vector<int> npos_;
};

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(std::shared_ptr<const RootSystem> rs)
    : rs_(std::move(rs)), dim_(rs_->dimension()) {
  const auto& R = *rs_;
  const int r = R.rank();
  const std::size_t m = R.size();
  n_ = ConstantSolver(R).solve();

  table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  const auto& d = R.symmetrizer();
  for (std::size_t a = 0; a < m; ++a) {
    const int ea = root_basis(a);
    const Root& ra = R.root(a);
    for (int i = 0; i < r; ++i) {
      const int v = R.pairing(ra, i);
      if (v == 0) continue;
      table_[i * dim_ + ea].emplace_back(ea, v);
      table_[ea * dim_ + i].emplace_back(ea, -v);
    }
    // [x_a, x_{-a}] = h_a, the coroot of a in the basis of simple coroots.
    const std::size_t na = R.negative_index(a);
    Rational da = R.form(ra, ra) / 2;
    auto& hv = table_[ea * dim_ + root_basis(na)];
    for (int i = 0; i < r; ++i) {
      if (ra.coords[i] == 0) continue;
      Rational c = ra.coords[i] * d[i] / da;
      hv.emplace_back(i, static_cast<int>(c.get_num().get_si()));
    }
    for (std::size_t b = 0; b < m; ++b) {
      const int nab = n_[a * m + b];
      if (nab == 0) continue;
      const auto s = *R.index_of(ra + R.root(b));
      table_[ea * dim_ + root_basis(b)].emplace_back(root_basis(s), nab);
    }
  }

  killing_.assign(static_cast<std::size_t>(dim_) * dim_, 0);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      long long tr = 0;
      for (int b = 0; b < dim_; ++b)
        for (const auto& [k, c1] : table_[j * dim_ + b])
          for (const auto& [l, c2] : table_[i * dim_ + k])
            if (l == b) tr += static_cast<long long>(c1) * c2;
      killing_[i * dim_ + j] = killing_[j * dim_ + i] = tr;
    }
}

int ChevalleyAlgebra::root_basis(const Root& r) const {
  auto idx = rs_->index_of(r);
  if (!idx) throw DomainError(to_string(r) + " is not a root");
  return root_basis(*idx);
}

std::optional<std::size_t> ChevalleyAlgebra::root_of(int basis) const {
  if (basis < rank() || basis >= dim_) return std::nullopt;
  return static_cast<std::size_t>(basis - rank());
}

std::string ChevalleyAlgebra::basis_name(int basis) const {
  if (basis < rank()) return "h" + std::to_string(basis + 1);
  return "x" + to_string(rs_->root(*root_of(basis)));
}

int ChevalleyAlgebra::structure_constant(std::size_t a, std::size_t b) const { return n_.at(a * rs_->size() + b); }

AlgebraElement ChevalleyAlgebra::bracket(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [i, u] : a.coeffs()) {
    if (i < 0 || i >= dim_) throw ShapeError("basis index outside the algebra");
    for (const auto& [j, v] : b.coeffs()) {
      if (j < 0 || j >= dim_) throw ShapeError("basis index outside the algebra");
      const auto& terms = bracket_basis(i, j);
      if (terms.empty()) continue;
      const Rational uv = u * v;
      for (const auto& [k, c] : terms) out.add(k, uv * c);
    }
  }
  return out;
}

Rational ChevalleyAlgebra::killing_form(const AlgebraElement& a, const AlgebraElement& b) const {
  Rational s = 0;
  for (const auto& [i, u] : a.coeffs())
    for (const auto& [j, v] : b.coeffs()) {
      if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw ShapeError("basis index outside the algebra");
      const long long k = killing_basis(i, j);
      if (k != 0) s += u * v * Rational(static_cast<long>(k));
    }
  return s;
}

ChevalleyAlgebra build_chevalley(const RootSystem& rs) {
  return ChevalleyAlgebra(std::make_shared<const RootSystem>(rs));
}

AlgebraElement grading_element(const ChevalleyAlgebra& sc, const Gradation& gr) {
  if (sc.rank() != gr.roots().rank()) throw ShapeError("gradation and algebra have different rank");
  AlgebraElement c;
  const auto& coords = gr.grading_element();
  for (int i = 0; i < sc.rank(); ++i) c.add(i, coords[i]);
  return c;
}

int element_level(const ChevalleyAlgebra& sc, const Gradation& gr, const AlgebraElement& v) {
  std::optional<int> level;
  for (const auto& [i, c] : v.coeffs()) {
    const auto r = sc.root_of(i);
    if (!r) throw ShapeError("element has a Cartan component");
    const int lv = gr.level_of(sc.roots().root(*r));
    if (level && *level != lv) throw ShapeError("element is not level-homogeneous");
    level = lv;
  }
  if (!level) throw ShapeError("zero element has no level");
  return *level;
}

int orbit_dimension(const ChevalleyAlgebra& sc, const Gradation& gr, const AlgebraElement& v) {
  if (v.is_zero()) return 0;
  const int k = element_level(sc, gr, v);
  if (k == 0) throw ShapeError("element lies in level 0");
  std::vector<int> source;
  for (int i = 0; i < sc.rank(); ++i) source.push_back(i);
  for (const auto& r : gr.level(0)) source.push_back(sc.root_basis(r));
  std::map<int, std::size_t> column;
  for (const auto& r : gr.level(k)) column.emplace(sc.root_basis(r), column.size());
  RatMatrix m(source.size(), column.size());
  for (std::size_t s = 0; s < source.size(); ++s) {
    const auto img = sc.bracket(AlgebraElement::basis(source[s]), v);
    for (const auto& [idx, c] : img.coeffs()) m(s, column.at(idx)) = c;
  }
  return static_cast<int>(rank(m));
}

Rational orthogonal_part_norm(const RootSystem& rs, int node) {
  const int n = rs.rank();
  std::vector<int> others;
  for (int j = 0; j < n; ++j)
    if (j != node) others.push_back(j);
  auto simple = [n](int i) {
    Root r{std::vector<int>(n, 0)};
    r.coords[i] = 1;
    return r;
  };
  const Root a0 = simple(node);
  const Rational full = rs.form(a0, a0);
  if (others.empty()) return full;
  RatMatrix gram(others.size(), others.size());
  std::vector<Rational> rhs(others.size());
  for (std::size_t i = 0; i < others.size(); ++i) {
    rhs[i] = rs.form(a0, simple(others[i]));
    for (std::size_t j = 0; j < others.size(); ++j) gram(i, j) = rs.form(simple(others[i]), simple(others[j]));
  }
  const auto t = solve(gram, rhs);
  Rational proj = 0;
  for (std::size_t i = 0; i < others.size(); ++i) proj += t[i] * rhs[i];
  return full - proj;
}

namespace {

std::vector<int> other_nodes(int n, int node) {
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if (j != node) out.push_back(j);
  return out;
}

}  // namespace

GenericPair generic_pair_candidate(const ChevalleyAlgebra& sc, const Gradation& gr) {
  const auto& R = sc.roots();
  if (!R.cartan().simply_laced()) throw Unsupported("generic pair construction requires a simply-laced algebra");
  const int node = gr.node();
  Root a0{std::vector<int>(R.rank(), 0)};
  a0.coords[node] = 1;
  const auto gens = other_nodes(R.rank(), node);
  GenericPair gp;
  gp.orbit = weyl_orbit(R, a0, gens);
  gp.scale = R.form(a0, a0) / (2 * static_cast<long>(gp.orbit.size()) * orthogonal_part_norm(R, node));
  for (const auto& a : gp.orbit) {
    gp.x.add(sc.root_basis(a), 1);
    gp.y.add(sc.root_basis(-a), gp.scale);
  }
  return gp;
}

GenericPair generic_pair(const ChevalleyAlgebra& sc, const Gradation& gr) {
  auto gp = generic_pair_candidate(sc, gr);
  const auto xy = sc.bracket(gp.x, gp.y);
  std::size_t off = 0;
  for (const auto& [i, c] : xy.coeffs())
    if (sc.root_of(i)) ++off;
  if (off > 0)
    throw RegularityFailed("[X,Y] has " + std::to_string(off) + " root-vector component(s) outside the Cartan subalgebra");
  return gp;
}

bool OrbitSumReport::pass() const { return restriction_commutes && orbit_size == restricted_orbit_size && sums == expected; }

OrbitSumReport orbit_sums(const ChevalleyAlgebra& sc, const Gradation& gr) {
  const auto& R = sc.roots();
  if (!R.cartan().simply_laced()) throw Unsupported("orbit sums are stated for simply-laced algebras");
  const int node = gr.node();
  const int n = R.rank();
  Root a0{std::vector<int>(n, 0)};
  a0.coords[node] = 1;
  const LeviData ld(sc.root_system(), node);

  // Walk the orbit carrying both the ambient root and the restricted weight.
  std::vector<int> position(n, -1);
  for (std::size_t p = 0; p < ld.ambient_nodes().size(); ++p) position[ld.ambient_nodes()[p]] = static_cast<int>(p);
  std::vector<std::pair<Root, Weight>> walk{{a0, restrict_weight(ld, a0)}};
  std::set<Root> seen{a0};
  bool commutes = true;
  const auto gens = other_nodes(n, node);
  for (std::size_t k = 0; k < walk.size(); ++k)
    for (int j : gens) {
      Root r = reflect(R, walk[k].first, j);
      Weight w = reflect(ld.root_system0().cartan(), walk[k].second, position[j]);
      if (restrict_weight(ld, r) != w) commutes = false;
      if (seen.insert(r).second) walk.emplace_back(std::move(r), std::move(w));
    }

  OrbitSumReport rep;
  rep.orbit_size = walk.size();
  rep.restriction_commutes = commutes;
  std::vector<int> gens0(ld.diagram0().rank());
  for (std::size_t p = 0; p < gens0.size(); ++p) gens0[p] = static_cast<int>(p);
  rep.restricted_orbit_size = weyl_orbit(ld.root_system0(), restrict_weight(ld, a0), gens0).size();
  for (int k = 0; k < n; ++k) {
    Rational s = 0;
    for (const auto& [r, w] : walk) s += R.pairing(r, k);
    rep.sums.push_back(s);
    if (k != node) {
      rep.expected.emplace_back(0);
    } else {
      rep.expected.push_back(2 * static_cast<long>(rep.restricted_orbit_size) * orthogonal_part_norm(R, node) /
                             R.form(a0, a0));
    }
  }
  return rep;
}

}  // namespace dynkin
