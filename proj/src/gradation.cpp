#include "dynkin/gradation.hpp"

#include <algorithm>
#include <set>

namespace dynkin {

Gradation::Gradation(std::shared_ptr<const RootSystem> rs, int node) : rs_(std::move(rs)), node_(node) {
  const int n = rs_->rank();
  if (node < 0 || node >= n) throw IndexError("node " + std::to_string(node + 1) + " out of range 1.." + std::to_string(n));
  for (const auto& r : rs_->roots()) {
    const int lv = r.coords[node];
    levels_[lv].push_back(r);
    order_ = std::max(order_, lv);
  }
  std::vector<Rational> e(n);
  e[node] = 1;
  c_ = solve(to_rational(rs_->cartan().entries()), e);
}

const std::vector<Root>& Gradation::level(int i) const {
  static const std::vector<Root> empty;
  auto it = levels_.find(i);
  return it == levels_.end() ? empty : it->second;
}

int Gradation::dim(int i) const {
  const int n = static_cast<int>(level(i).size());
  return i == 0 ? n + rs_->rank() : n;
}

Gradation grade(const NodeChoice& choice) {
  return Gradation(std::make_shared<const RootSystem>(build_root_system(choice.diagram)), choice.node);
}

int order_of(const NodeChoice& choice) {
  const auto rs = build_root_system(choice.diagram);
  if (choice.node < 0 || choice.node >= rs.rank()) throw IndexError("node out of range");
  return highest_root(rs, rs.component_of_node(choice.node)).coords[choice.node];
}

std::vector<Root> level_zero_subsystem(const Gradation& gr, int m) {
  if (m <= 0 || gr.order() % m != 0)
    throw DivisibilityError(std::to_string(m) + " does not divide the order " + std::to_string(gr.order()));
  std::vector<Root> out;
  for (const auto& [lv, roots] : gr.levels())
    if (lv % m == 0) out.insert(out.end(), roots.begin(), roots.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, std::vector<Root>> zm_pieces(const Gradation& gr, int m) {
  if (m < 1) throw DomainError("modulus must be positive");
  std::map<int, std::vector<Root>> out;
  for (int j = 0; j < m; ++j) out[j];
  for (const auto& [lv, roots] : gr.levels()) {
    auto& piece = out[((lv % m) + m) % m];
    piece.insert(piece.end(), roots.begin(), roots.end());
  }
  for (auto& [j, roots] : out) std::sort(roots.begin(), roots.end());
  return out;
}

bool closed_symmetric(const RootSystem& rs, const std::vector<Root>& subset) {
  std::set<Root> s(subset.begin(), subset.end());
  for (const auto& a : s) {
    if (!rs.contains(a)) return false;
    if (!s.count(-a)) return false;
  }
  for (const auto& a : s)
    for (const auto& b : s) {
      Root c = a + b;
      if (rs.contains(c) && !s.count(c)) return false;
    }
  return true;
}

std::vector<int> extended_marks(const DynkinDiagram& diagram) {
  if (!diagram.simple()) throw DomainError("extended diagram requires a simple diagram");
  const auto rs = build_root_system(diagram);
  std::vector<int> marks{1};
  for (int c : highest_root(rs, 0).coords) marks.push_back(c);
  return marks;
}

IntMatrix pairing_matrix(const RootSystem& rs, const std::vector<Root>& gens) {
  const std::size_t k = gens.size();
  IntMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational v = 2 * rs.form(gens[i], gens[j]) / rs.form(gens[j], gens[j]);
      if (v.get_den() != 1) throw DomainError("non-integral pairing between generators");
      a(i, j) = static_cast<int>(v.get_num().get_si());
    }
  return a;
}

DynkinDiagram borel_de_siebenthal(const DynkinDiagram& diagram, int extended_node) {
  if (!diagram.simple()) throw DomainError("extended diagram requires a simple diagram");
  const auto rs = build_root_system(diagram);
  const int n = rs.rank();
  if (extended_node < 0 || extended_node > n)
    throw IndexError("extended node " + std::to_string(extended_node) + " out of range 0.." + std::to_string(n));
  const Root top = highest_root(rs, 0);
  const int mark = extended_node == 0 ? 1 : top.coords[extended_node - 1];
  if (mark == 1) {
    if (extended_node == 0) return diagram;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (i != extended_node - 1) keep.push_back(i);
    return identify_cartan_type(rs.cartan().principal(keep)).diagram;
  }
  if (mark != 2 && mark != 3 && mark != 5)
    throw Unsupported("mark " + std::to_string(mark) + " is neither 1 nor prime");
  std::vector<Root> gens{-top};
  for (int i = 0; i < n; ++i) {
    if (i == extended_node - 1) continue;
    Root r{std::vector<int>(n, 0)};
    r.coords[i] = 1;
    gens.push_back(r);
  }
  return identify_cartan_type(CartanMatrix(pairing_matrix(rs, gens))).diagram;
}

}  // namespace dynkin
