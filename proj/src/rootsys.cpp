#include "dynkin/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace dynkin {

char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

std::string SimpleType::name() const { return family_letter(family) + std::to_string(rank); }

int SimpleType::dimension() const {
  const int n = rank;
  switch (family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

bool is_canonical_type(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

// ---------------------------------------------------------------------------
// CartanMatrix

CartanMatrix::CartanMatrix(IntMatrix entries) : a_(std::move(entries)) {
  if (!a_.square()) throw ShapeError("Cartan matrix must be square");
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (a_(i, i) != 2) throw ShapeError("Cartan matrix diagonal entry (" + std::to_string(i) + ") is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int v = a_(i, j);
      if (v > 0 || v < -3)
        throw ShapeError("Cartan matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") = " + std::to_string(v) + " outside {0,-1,-2,-3}");
      if ((v == 0) != (a_(j, i) == 0))
        throw ShapeError("Cartan matrix zero pattern is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    }
  }
  if (!symmetrizer()) throw ShapeError("Cartan matrix is not symmetrizable");
}

CartanMatrix CartanMatrix::principal(const std::vector<int>& nodes) const {
  IntMatrix s(nodes.size(), nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) s(i, j) = a_(nodes[i], nodes[j]);
  return CartanMatrix(std::move(s));
}

bool CartanMatrix::simply_laced() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && a_(i, j) < -1) return false;
  return true;
}

std::vector<std::vector<int>> CartanMatrix::components() const {
  const int n = size();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v = 0; v < n; ++v)
        if (v != u && a_(u, v) != 0 && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<std::vector<Rational>> CartanMatrix::symmetrizer() const {
  const int n = size();
  std::vector<Rational> d(n);
  std::vector<int> seen(n, 0);
  for (const auto& comp : components()) {
    d[comp.front()] = 1;
    seen[comp.front()] = 1;
    std::vector<int> queue{comp.front()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int i = queue[q];
      for (int j = 0; j < n; ++j) {
        if (j == i || a_(i, j) == 0) continue;
        // a_ij d_j = a_ji d_i
        Rational dj = Rational(a_(j, i)) * d[i] / a_(i, j);
        if (!seen[j]) {
          seen[j] = 1;
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    Rational top = 0;
    for (int i : comp) top = std::max(top, d[i]);
    for (int i : comp) d[i] /= top;
  }
  return d;
}

CartanMatrix cartan_matrix(const SimpleType& t) {
  if (!is_canonical_type(t.family, t.rank)) throw ShapeError("not a canonical simple type: " + t.name());
  const int n = t.rank;
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto bond = [&](int i, int j, int aij = -1, int aji = -1) {
    a(i - 1, j - 1) = aij;
    a(j - 1, i - 1) = aji;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 1, n, -2, -1);
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 1, n, -1, -2);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3, -2, -1);
      bond(3, 4);
      break;
    case Family::G:
      bond(1, 2, -1, -3);
      break;
  }
  return CartanMatrix(std::move(a));
}

// ---------------------------------------------------------------------------
// DynkinDiagram

DynkinDiagram::DynkinDiagram(std::vector<SimpleType> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (!is_canonical_type(c.family, c.rank)) throw ShapeError("not a canonical simple type: " + c.name());
    offsets_.push_back(rank_);
    rank_ += c.rank;
  }
}

DynkinDiagram DynkinDiagram::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty diagram name");
  if (s == "0") return DynkinDiagram{};
  std::vector<SimpleType> comps;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
    if (letter < 'A' || letter > 'G') throw ParseError("bad diagram name '" + std::string(text) + "'");
    ++pos;
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos || end - pos > 3) throw ParseError("bad diagram name '" + std::string(text) + "'");
    const int rank = std::stoi(s.substr(pos, end - pos));
    const auto fam = static_cast<Family>(letter - 'A');
    if (!is_canonical_type(fam, rank))
      throw ParseError("'" + std::string(1, letter) + std::to_string(rank) + "' is not a canonical type label");
    comps.push_back({fam, rank});
    pos = end;
    if (pos < s.size()) {
      if (s[pos] != 'x' && s[pos] != '*') throw ParseError("bad diagram name '" + std::string(text) + "'");
      ++pos;
      if (pos == s.size()) throw ParseError("bad diagram name '" + std::string(text) + "'");
    }
  }
  return DynkinDiagram(std::move(comps));
}

std::string DynkinDiagram::name() const {
  if (components_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += 'x';
    out += components_[i].name();
  }
  return out;
}

int DynkinDiagram::component_of(int node) const {
  if (node < 0 || node >= rank_) throw IndexError("node " + std::to_string(node) + " out of range");
  for (std::size_t c = components_.size(); c-- > 0;)
    if (node >= offsets_[c]) return static_cast<int>(c);
  return 0;
}

CartanMatrix DynkinDiagram::cartan() const {
  IntMatrix a(rank_, rank_);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto block = cartan_matrix(components_[c]);
    const int off = offsets_[c];
    for (int i = 0; i < block.size(); ++i)
      for (int j = 0; j < block.size(); ++j) a(off + i, off + j) = block(i, j);
  }
  return CartanMatrix(std::move(a));
}

int DynkinDiagram::dimension() const {
  int d = 0;
  for (const auto& c : components_) d += c.dimension();
  return d;
}

// ---------------------------------------------------------------------------
// Root / Weight

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::positive() const {
  return std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  if (a.coords.size() != b.coords.size()) throw ShapeError("root length mismatch");
  Root r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

std::string to_string(const Root& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r.coords[i]);
  }
  return out + ")";
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
    if (i) out += ',';
    out += to_string(w.coeffs[i]);
  }
  return out + ")";
}

bool is_dominant_integral(const Weight& w) {
  return std::all_of(w.coeffs.begin(), w.coeffs.end(),
                     [](const Rational& q) { return q >= 0 && q.get_den() == 1; });
}

// ---------------------------------------------------------------------------
// RootSystem

namespace {

bool root_order(const Root& a, const Root& b) {
  const int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coords > b.coords;
}

}  // namespace

RootSystem RootSystem::from_cartan(const CartanMatrix& cartan) {
  if (!principal_minors_positive(cartan.entries()))
    throw NotFiniteType("Cartan matrix is not of finite type");
  RootSystem rs;
  rs.cartan_ = cartan;
  rs.d_ = *cartan.symmetrizer();
  const int n = cartan.size();

  std::set<std::vector<int>> known;
  std::vector<Root> layer;
  for (int i = 0; i < n; ++i) {
    Root r{std::vector<int>(n, 0)};
    r.coords[i] = 1;
    layer.push_back(r);
    known.insert(r.coords);
  }
  std::vector<Root> positives;
  while (!layer.empty()) {
    std::vector<Root> next;
    for (const auto& beta : layer) {
      positives.push_back(beta);
      for (int i = 0; i < n; ++i) {
        // q = largest k with beta - k alpha_i a root
        int q = 0;
        Root probe = beta;
        while (true) {
          probe.coords[i] -= 1;
          if (probe.coords[i] < 0 || !known.count(probe.coords)) break;
          ++q;
        }
        const int p = q - rs.pairing(beta, i);
        if (p <= 0) continue;
        Root up = beta;
        up.coords[i] += 1;
        if (known.insert(up.coords).second) next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  std::sort(positives.begin(), positives.end(), root_order);
  rs.roots_ = positives;
  for (const auto& r : positives) rs.roots_.push_back(-r);
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.index_.emplace(rs.roots_[i].coords, i);

  rs.components_ = cartan.components();
  rs.node_component_.assign(n, 0);
  for (std::size_t c = 0; c < rs.components_.size(); ++c)
    for (int v : rs.components_[c]) rs.node_component_[v] = static_cast<int>(c);
  for (std::size_t c = 0; c < rs.components_.size(); ++c) {
    const Root* best = nullptr;
    for (const auto& r : positives)
      if (rs.node_component_[std::find_if(r.coords.begin(), r.coords.end(), [](int x) { return x != 0; }) -
                             r.coords.begin()] == static_cast<int>(c))
        best = &r;  // positives are sorted by height, so the last hit is highest
    rs.highest_.push_back(*best);
  }
  if (n > 0) rs.to_root_ = inverse(to_rational(cartan.entries().transposed()));
  return rs;
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r.coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::component_of_node(int node) const {
  if (node < 0 || node >= rank()) throw IndexError("node " + std::to_string(node) + " out of range");
  return node_component_[node];
}

Rational RootSystem::form(std::span<const Rational> x, std::span<const Rational> y) const {
  const int n = rank();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw ShapeError("vector length does not match the rank");
  Rational s = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0 || cartan_(i, j) == 0) continue;
      s += x[i] * y[j] * cartan_(i, j) * d_[j];
    }
  }
  return s;
}

Rational RootSystem::form(const Root& x, const Root& y) const {
  const int n = rank();
  if (static_cast<int>(x.coords.size()) != n || static_cast<int>(y.coords.size()) != n)
    throw ShapeError("root length does not match the rank");
  Rational s = 0;
  for (int i = 0; i < n; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y.coords[j] == 0 || cartan_(i, j) == 0) continue;
      s += Rational(x.coords[i] * y.coords[j] * cartan_(i, j)) * d_[j];
    }
  }
  return s;
}

int RootSystem::pairing(const Root& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += beta.coords[j] * cartan_(j, i);
  return s;
}

std::vector<Rational> RootSystem::to_root_coords(const Weight& w) const {
  if (static_cast<int>(w.coeffs.size()) != rank()) throw ShapeError("weight length does not match the rank");
  return to_root_ * w.coeffs;
}

Weight RootSystem::to_weight(std::span<const Rational> x) const {
  const int n = rank();
  if (static_cast<int>(x.size()) != n) throw ShapeError("vector length does not match the rank");
  Weight w{std::vector<Rational>(n)};
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (x[i] != 0) w.coeffs[j] += x[i] * cartan_(i, j);
  return w;
}

Weight RootSystem::to_weight(const Root& r) const {
  std::vector<Rational> x(r.coords.begin(), r.coords.end());
  return to_weight(x);
}

RootSystem build_root_system(const DynkinDiagram& diagram) { return RootSystem::from_cartan(diagram.cartan()); }

Root highest_root(const RootSystem& rs, int component) {
  if (component < 0 || component >= static_cast<int>(rs.highest_roots().size()))
    throw IndexError("component " + std::to_string(component) + " out of range");
  return rs.highest_roots()[component];
}

Rational inner_product(const RootSystem& rs, const Root& a, const Root& b) { return rs.form(a, b); }

Rational inner_product(const RootSystem& rs, const Weight& a, const Weight& b) {
  return rs.form(rs.to_root_coords(a), rs.to_root_coords(b));
}

Rational inner_product(const RootSystem& rs, const Root& a, const Weight& b) {
  if (static_cast<int>(a.coords.size()) != rs.rank()) throw ShapeError("root length does not match the rank");
  std::vector<Rational> x(a.coords.begin(), a.coords.end());
  return rs.form(x, rs.to_root_coords(b));
}

Rational inner_product(const RootSystem& rs, const Weight& a, const Root& b) { return inner_product(rs, b, a); }

Root reflect(const RootSystem& rs, const Root& v, int i) {
  Root r = v;
  r.coords[i] -= rs.pairing(v, i);
  return r;
}

Weight reflect(const CartanMatrix& cartan, const Weight& v, int i) {
  Weight w = v;
  const Rational c = v.coeffs[i];
  if (c == 0) return w;
  for (int j = 0; j < cartan.size(); ++j) w.coeffs[j] -= c * cartan(i, j);
  return w;
}

namespace {

template <class T, class Reflect>
std::vector<T> orbit(const T& v, std::span<const int> gens, int rank, Reflect refl) {
  for (int g : gens)
    if (g < 0 || g >= rank) throw IndexError("reflection index " + std::to_string(g) + " out of range");
  std::vector<T> out{v};
  std::set<T> seen{v};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int g : gens) {
      T w = refl(out[k], g);
      if (seen.insert(w).second) out.push_back(std::move(w));
    }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<Root> weyl_orbit(const RootSystem& rs, const Root& v, std::span<const int> generators) {
  if (static_cast<int>(v.coords.size()) != rs.rank()) throw ShapeError("root length does not match the rank");
  return orbit(v, generators, rs.rank(), [&](const Root& r, int i) { return reflect(rs, r, i); });
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& v, std::span<const int> generators) {
  if (static_cast<int>(v.coeffs.size()) != rs.rank()) throw ShapeError("weight length does not match the rank");
  return orbit(v, generators, rs.rank(), [&](const Weight& w, int i) { return reflect(rs.cartan(), w, i); });
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

// Sorted off-diagonal (row, column) entry pairs; invariant under relabeling.
std::vector<std::pair<int, int>> node_signature(const IntMatrix& a, const std::vector<int>& nodes, int u) {
  std::vector<std::pair<int, int>> sig;
  for (int v : nodes)
    if (v != u && a(u, v) != 0) sig.emplace_back(a(u, v), a(v, u));
  std::sort(sig.begin(), sig.end());
  return sig;
}

// Enumerates bijections nodes -> [0, k) with a(u, v) == c(sigma u, sigma v),
// in lexicographic order. The callback returns false to stop.
void match(const IntMatrix& a, const std::vector<int>& nodes, const IntMatrix& c,
           const std::function<bool(const std::vector<int>&)>& visit) {
  const int k = static_cast<int>(nodes.size());
  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<std::pair<int, int>>> sa(k), sc(k);
  for (int t = 0; t < k; ++t) {
    sa[t] = node_signature(a, nodes, nodes[t]);
    sc[t] = node_signature(c, all, t);
  }
  std::vector<int> sigma(k, -1);
  std::vector<char> used(k, 0);
  bool stop = false;
  std::function<void(int)> go = [&](int t) {
    if (stop) return;
    if (t == k) {
      if (!visit(sigma)) stop = true;
      return;
    }
    for (int x = 0; x < k && !stop; ++x) {
      if (used[x] || sa[t] != sc[x]) continue;
      bool ok = true;
      for (int s = 0; s < t && ok; ++s)
        ok = a(nodes[t], nodes[s]) == c(x, sigma[s]) && a(nodes[s], nodes[t]) == c(sigma[s], x);
      if (!ok) continue;
      used[x] = 1;
      sigma[t] = x;
      go(t + 1);
      used[x] = 0;
      sigma[t] = -1;
    }
  };
  go(0);
}

}  // namespace

bool principal_minors_positive(const IntMatrix& m) {
  if (!m.square()) throw ShapeError("principal minors of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 24) throw Unsupported("principal minor enumeration limited to 24 nodes");
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    if (determinant(m.principal(idx)) <= 0) return false;
  }
  return true;
}

Identification identify_cartan_type(const CartanMatrix& m) {
  if (!principal_minors_positive(m.entries())) throw NotFiniteType("Cartan matrix is not of finite type");
  struct Found {
    SimpleType type;
    std::vector<int> nodes;
    std::vector<int> sigma;
  };
  std::vector<Found> found;
  for (const auto& comp : m.components()) {
    const int k = static_cast<int>(comp.size());
    bool ok = false;
    for (int f = 0; f < 7 && !ok; ++f) {
      const auto fam = static_cast<Family>(f);
      if (!is_canonical_type(fam, k)) continue;
      const auto canon = cartan_matrix({fam, k});
      match(m.entries(), comp, canon.entries(), [&](const std::vector<int>& sigma) {
        found.push_back({{fam, k}, comp, sigma});
        ok = true;
        return false;
      });
    }
    if (!ok) throw NotFiniteType("component is not a finite Dynkin diagram");
  }
  std::stable_sort(found.begin(), found.end(), [](const Found& x, const Found& y) {
    if (x.type != y.type) return x.type < y.type;
    return x.nodes.front() < y.nodes.front();
  });
  Identification id;
  std::vector<SimpleType> types;
  id.permutation.assign(m.size(), -1);
  int offset = 0;
  for (const auto& f : found) {
    types.push_back(f.type);
    for (std::size_t t = 0; t < f.nodes.size(); ++t) id.permutation[f.nodes[t]] = offset + f.sigma[t];
    offset += f.type.rank;
  }
  id.diagram = DynkinDiagram(std::move(types));
  return id;
}

std::vector<std::vector<int>> diagram_automorphisms(const CartanMatrix& m) {
  std::vector<int> nodes(m.size());
  std::iota(nodes.begin(), nodes.end(), 0);
  std::vector<std::vector<int>> out;
  match(m.entries(), nodes, m.entries(), [&](const std::vector<int>& sigma) {
    out.push_back(sigma);
    return true;
  });
  return out;
}

std::vector<Rational> fundamental_weight_coords(const RootSystem& rs, const Weight& w) {
  return rs.to_root_coords(w);
}

Weight weight_from_root_coords(const RootSystem& rs, std::span<const Rational> root_coords) {
  return rs.to_weight(root_coords);
}

}  // namespace dynkin
