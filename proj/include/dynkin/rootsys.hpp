#pragma once

// Finite-type Cartan matrices, Dynkin diagrams and root systems.
//
// Conventions (Bourbaki): a_ij = <alpha_i, alpha_j> = 2(alpha_i, alpha_j) / (alpha_j, alpha_j),
// nodes numbered as in the Bourbaki plates, long roots of every simple
// component have squared length 2. Roots are integer coefficient vectors over
// the simple roots; weights are rational vectors over the fundamental weights.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <map>
#include <vector>

#include "dynkin/linalg.hpp"

namespace dynkin {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  /// Dimension of the simple Lie algebra of this type.
  int dimension() const;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// True for the canonical labels A_{n>=1}, B_{n>=2}, C_{n>=3}, D_{n>=4}, E6-8, F4, G2.
bool is_canonical_type(Family f, int rank);

class CartanMatrix {
 public:
  CartanMatrix() = default;
  /// Checks: square, diagonal 2, off-diagonal in {0,-1,-2,-3}, matching zero
  /// pattern. Throws ShapeError otherwise.
  explicit CartanMatrix(IntMatrix entries);

  int size() const noexcept { return static_cast<int>(a_.rows()); }
  int operator()(int i, int j) const { return a_(i, j); }
  const IntMatrix& entries() const noexcept { return a_; }

  CartanMatrix principal(const std::vector<int>& nodes) const;
  bool simply_laced() const;

  /// Connected components of the underlying graph, each sorted ascending,
  /// ordered by smallest node.
  std::vector<std::vector<int>> components() const;

  /// d_i with (alpha_i, alpha_j) = a_ij d_j, scaled so the longest simple root
  /// of each component has d = 1. nullopt when no positive symmetrizer exists.
  std::optional<std::vector<Rational>> symmetrizer() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  IntMatrix a_;
};

CartanMatrix cartan_matrix(const SimpleType& t);

class DynkinDiagram {
 public:
  DynkinDiagram() = default;
  explicit DynkinDiagram(std::vector<SimpleType> components);

  /// Accepts "E8", "A1xA4" (also "A1*A4"), and "0" for the empty diagram.
  static DynkinDiagram parse(std::string_view text);

  std::string name() const;
  int rank() const noexcept { return rank_; }
  bool empty() const noexcept { return components_.empty(); }
  bool simple() const noexcept { return components_.size() == 1; }
  const std::vector<SimpleType>& components() const noexcept { return components_; }

  int component_of(int node) const;
  int offset(int component) const { return offsets_.at(component); }
  /// 1-based Bourbaki label of a node inside its component.
  int bourbaki_label(int node) const { return node - offsets_.at(component_of(node)) + 1; }

  CartanMatrix cartan() const;
  /// Dimension of the semisimple Lie algebra.
  int dimension() const;

  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<SimpleType> components_;
  std::vector<int> offsets_;
  int rank_ = 0;
};

struct Root {
  std::vector<int> coords;

  int height() const;
  bool positive() const;
  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend auto operator<=>(const Root&, const Root&) = default;
};

std::string to_string(const Root& r);

struct Weight {
  std::vector<Rational> coeffs;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.coeffs < b.coeffs; }
};

std::string to_string(const Weight& w);
bool is_dominant_integral(const Weight& w);

class RootSystem {
 public:
  /// Throws NotFiniteType when some principal minor is not positive.
  static RootSystem from_cartan(const CartanMatrix& cartan);

  const CartanMatrix& cartan() const noexcept { return cartan_; }
  int rank() const noexcept { return cartan_.size(); }
  std::size_t size() const noexcept { return roots_.size(); }
  std::size_t num_positive() const noexcept { return roots_.size() / 2; }
  int dimension() const noexcept { return rank() + static_cast<int>(roots_.size()); }

  /// Positive roots ordered by height then descending coordinates, followed
  /// by their negatives in the same order.
  const std::vector<Root>& roots() const noexcept { return roots_; }
  const Root& root(std::size_t i) const { return roots_.at(i); }
  std::optional<std::size_t> index_of(const Root& r) const;
  bool contains(const Root& r) const { return index_of(r).has_value(); }
  std::size_t negative_index(std::size_t i) const {
    return i < num_positive() ? i + num_positive() : i - num_positive();
  }

  const std::vector<Rational>& symmetrizer() const noexcept { return d_; }
  const std::vector<std::vector<int>>& components() const noexcept { return components_; }
  int component_of_node(int node) const;
  const std::vector<Root>& highest_roots() const noexcept { return highest_; }

  /// (x, y) for vectors in simple-root coordinates.
  Rational form(std::span<const Rational> x, std::span<const Rational> y) const;
  Rational form(const Root& x, const Root& y) const;
  /// <beta, alpha_i> = 2(beta, alpha_i) / (alpha_i, alpha_i).
  int pairing(const Root& beta, int i) const;

  std::vector<Rational> to_root_coords(const Weight& w) const;
  Weight to_weight(std::span<const Rational> root_coords) const;
  Weight to_weight(const Root& r) const;

 private:
  CartanMatrix cartan_;
  std::vector<Rational> d_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::vector<int>> components_;
  std::vector<int> node_component_;
  std::vector<Root> highest_;
  RatMatrix to_root_;  // (A^T)^{-1}
};

RootSystem build_root_system(const DynkinDiagram& diagram);

/// Highest root of the given simple component (index into rs.components()).
Root highest_root(const RootSystem& rs, int component);

Rational inner_product(const RootSystem& rs, const Root& a, const Root& b);
Rational inner_product(const RootSystem& rs, const Weight& a, const Weight& b);
Rational inner_product(const RootSystem& rs, const Root& a, const Weight& b);
Rational inner_product(const RootSystem& rs, const Weight& a, const Root& b);

/// Orbit under the subgroup generated by the listed simple reflections,
/// sorted ascending.
std::vector<Root> weyl_orbit(const RootSystem& rs, const Root& v, std::span<const int> generators);
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& v, std::span<const int> generators);

Root reflect(const RootSystem& rs, const Root& v, int i);
Weight reflect(const CartanMatrix& cartan, const Weight& v, int i);

struct Identification {
  DynkinDiagram diagram;
  /// permutation[input node] = canonical node of `diagram`.
  std::vector<int> permutation;
};

/// Recognizes a Cartan matrix up to relabeling. Components are ordered by
/// (family, rank, smallest input node); within a component the
/// lexicographically smallest matching permutation is returned.
Identification identify_cartan_type(const CartanMatrix& m);

/// Diagram automorphisms sigma with a(sigma i, sigma j) = a(i, j), identity first.
std::vector<std::vector<int>> diagram_automorphisms(const CartanMatrix& m);

bool principal_minors_positive(const IntMatrix& m);

/// Fundamental-weight coordinates to simple-root coordinates and back.
std::vector<Rational> fundamental_weight_coords(const RootSystem& rs, const Weight& w);
Weight weight_from_root_coords(const RootSystem& rs, std::span<const Rational> root_coords);

}  // namespace dynkin
