#include "dynkin/levirep.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dynkin {

LeviData::LeviData(std::shared_ptr<const RootSystem> ambient, int node) : ambient_(std::move(ambient)), node_(node) {
  const auto& a = ambient_->cartan();
  const int n = a.size();
  if (node < 0 || node >= n) throw IndexError("node " + std::to_string(node + 1) + " out of range 1.." + std::to_string(n));
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (i != node) keep.push_back(i);
  const auto id = identify_cartan_type(a.principal(keep));

  const auto& types = id.diagram.components();
  for (std::size_t c = 0; c < types.size(); ++c) {
    LeviComponent comp;
    comp.type = types[c];
    const int off = id.diagram.offset(static_cast<int>(c));
    comp.nodes.assign(types[c].rank, -1);
    for (std::size_t p = 0; p < keep.size(); ++p) {
      const int q = id.permutation[p] - off;
      if (q >= 0 && q < types[c].rank) comp.nodes[q] = keep[p];
    }
    // Orient the component so the restriction of -alpha_0 is lexicographically largest.
    const auto canon = cartan_matrix(types[c]);
    std::vector<int> best;
    Weight best_w;
    for (const auto& tau : diagram_automorphisms(canon)) {
      std::vector<int> nodes(comp.nodes.size());
      Weight w{std::vector<Rational>(nodes.size())};
      for (std::size_t t = 0; t < nodes.size(); ++t) {
        nodes[t] = comp.nodes[tau[t]];
        w.coeffs[t] = -a(node, nodes[t]);
      }
      if (best.empty() || best_w < w) {
        best = nodes;
        best_w = w;
      }
    }
    comp.nodes = best;
    comp.weight = best_w;
    for (int v : comp.nodes) comp.nu = std::max(comp.nu, -a(v, node));
    components_.push_back(std::move(comp));
  }
  std::stable_sort(components_.begin(), components_.end(), [](const LeviComponent& x, const LeviComponent& y) {
    if (x.type != y.type) return x.type < y.type;
    if (x.nu != y.nu) return x.nu > y.nu;
    if (x.weight != y.weight) return y.weight < x.weight;
    return *std::min_element(x.nodes.begin(), x.nodes.end()) < *std::min_element(y.nodes.begin(), y.nodes.end());
  });
  std::vector<SimpleType> ordered;
  for (const auto& c : components_) {
    ordered.push_back(c.type);
    ambient_nodes_.insert(ambient_nodes_.end(), c.nodes.begin(), c.nodes.end());
  }
  diagram0_ = DynkinDiagram(std::move(ordered));
  rs0_ = std::make_shared<const RootSystem>(build_root_system(diagram0_));
}

std::vector<int> LeviData::nu() const {
  std::vector<int> out;
  for (const auto& c : components_) out.push_back(c.nu);
  return out;
}

Weight LeviData::omega() const {
  Weight w;
  for (const auto& c : components_) w.coeffs.insert(w.coeffs.end(), c.weight.coeffs.begin(), c.weight.coeffs.end());
  return w;
}

LeviData levi(const NodeChoice& choice) {
  return LeviData(std::make_shared<const RootSystem>(build_root_system(choice.diagram)), choice.node);
}

Weight restrict_weight(const LeviData& ld, const Root& alpha) {
  if (static_cast<int>(alpha.coords.size()) != ld.ambient().rank())
    throw ShapeError("root length does not match the ambient rank");
  Weight w;
  for (int j : ld.ambient_nodes()) w.coeffs.emplace_back(ld.ambient().pairing(alpha, j));
  return w;
}

std::vector<Weight> component_weights(const DynkinDiagram& d, const Weight& w) {
  if (static_cast<int>(w.coeffs.size()) != d.rank()) throw ShapeError("weight length does not match the diagram rank");
  std::vector<Weight> out;
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    const int off = d.offset(static_cast<int>(c));
    out.push_back(Weight{{w.coeffs.begin() + off, w.coeffs.begin() + off + d.components()[c].rank}});
  }
  return out;
}

std::vector<Weight> component_weights(const LeviData& ld, const Weight& w) {
  return component_weights(ld.diagram0(), w);
}

PieceRep piece_rep(const Gradation& gr, const LeviData& ld, int level) {
  if (level == 0) throw DomainError("level 0 is not a graded piece over g0^ss");
  const auto& roots = gr.level(level);
  if (roots.empty()) throw EmptyLevel("level " + std::to_string(level) + " is empty");
  PieceRep rep;
  rep.level = level;
  rep.dim = static_cast<int>(roots.size());
  const Root* top = nullptr;
  std::set<Root> members(roots.begin(), roots.end());
  for (const auto& beta : roots) {
    rep.weights.push_back(restrict_weight(ld, beta));
    bool maximal = true;
    for (int j : ld.ambient_nodes()) {
      Root up = beta;
      up.coords[j] += 1;
      if (members.count(up)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    if (!top || beta.height() > top->height() || (beta.height() == top->height() && beta.coords > top->coords))
      top = &beta;
  }
  rep.highest_weight = restrict_weight(ld, *top);
  return rep;
}

Integer weyl_dim(const DynkinDiagram& d, const Weight& w) {
  if (static_cast<int>(w.coeffs.size()) != d.rank()) throw ShapeError("weight length does not match the diagram rank");
  if (!is_dominant_integral(w)) throw DomainError("weight " + to_string(w) + " is not dominant integral");
  if (d.empty()) return 1;
  const auto rs = build_root_system(d);
  const auto& dd = rs.symmetrizer();
  Rational prod = 1;
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const auto& b = rs.root(k).coords;
    Rational num = 0, den = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      if (b[i] == 0) continue;
      num += (w.coeffs[i] + 1) * b[i] * dd[i];
      den += b[i] * dd[i];
    }
    prod *= num / den;
  }
  if (prod.get_den() != 1) throw DomainError("non-integral Weyl dimension");
  return prod.get_num();
}

Integer weyl_dim(const LeviData& ld, const Weight& w) { return weyl_dim(ld.diagram0(), w); }

std::vector<int> connecting_multiplicities(const NodeChoice& choice) { return levi(choice).nu(); }

namespace {

Weight wt(std::initializer_list<int> xs) {
  Weight w;
  for (int x : xs) w.coeffs.emplace_back(x);
  return w;
}

}  // namespace

std::vector<TwistedCase> twisted_affine_cases() {
  const auto D = [](const char* s) { return DynkinDiagram::parse(s); };
  return {
      {"so10 = gl1xG2 + 2(C7 + C7*) + C + C*", D("D5"), 1, D("G2"),
       {{4, D("G2"), wt({1, 0})}, {2, D("G2"), wt({0, 0})}}},
      {"E6 = gl2xG2 + 2(C2(x)C7 + dual) + C2 + C2*", D("E6"), 1, D("A1xG2"),
       {{4, D("A1xG2"), wt({1, 1, 0})}, {2, D("A1xG2"), wt({1, 0, 0})}}},
      {"so12 = gl2xso7 + C7 + C2(x)S + dual + C + C*", D("D6"), 1, D("A1xB3"),
       {{1, D("A1xB3"), wt({0, 1, 0, 0})}, {2, D("A1xB3"), wt({1, 0, 0, 1})}, {2, D("A1xB3"), wt({0, 0, 0, 0})}}},
      {"E7 = gl3xso7 + C7 + 2(C3(x)S + dual)", D("E7"), 1, D("A2xB3"),
       {{1, D("A2xB3"), wt({0, 0, 1, 0, 0})}, {4, D("A2xB3"), wt({1, 0, 0, 0, 1})}}},
      {"E6 = gl1xso9 + C9 + C(x)S + dual", D("E6"), 1, D("B4"),
       {{1, D("B4"), wt({1, 0, 0, 0})}, {2, D("B4"), wt({0, 0, 0, 1})}}},
      {"E7 = gl1xso11 + C11 + C(x)S + dual + C + C*", D("E7"), 1, D("B5"),
       {{1, D("B5"), wt({1, 0, 0, 0, 0})}, {2, D("B5"), wt({0, 0, 0, 0, 1})}, {2, D("B5"), wt({0, 0, 0, 0, 0})}}},
  };
}

std::vector<TwistedCaseResult> twisted_affine_dim_check() {
  std::vector<TwistedCaseResult> out;
  for (const auto& c : twisted_affine_cases()) {
    TwistedCaseResult r;
    r.name = c.name;
    r.ambient_dim = c.ambient.dimension();
    r.level0_dim = c.center_dim + c.reductive.dimension();
    Integer total = r.level0_dim;
    for (const auto& p : c.pieces) {
      Integer d = p.count * weyl_dim(p.diagram, p.weight);
      r.piece_dims.push_back(d);
      total += d;
    }
    r.pass = total == r.ambient_dim;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace dynkin
