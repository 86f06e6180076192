#pragma once

// Exact Chevalley-basis realization of a semisimple Lie algebra.
//
// Basis: h_1..h_r (simple coroots) followed by x_alpha for every root in
// RootSystem::roots() order. Structure constants N_{a,b} = +-(p+1) with
// signs fixed by taking N = +(p+1) on extraspecial pairs, where roots are
// ordered by their index in RootSystem::roots().

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynkin/gradation.hpp"

namespace dynkin {

class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement basis(int index, Rational coeff = 1);

  const std::map<int, Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(int index) const;
  bool is_zero() const noexcept { return c_.empty(); }
  void add(int index, const Rational& v);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::map<int, Rational> c_;
};

class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(std::shared_ptr<const RootSystem> rs);

  const RootSystem& roots() const noexcept { return *rs_; }
  std::shared_ptr<const RootSystem> root_system() const noexcept { return rs_; }
  int rank() const noexcept { return rs_->rank(); }
  int dim() const noexcept { return dim_; }

  int root_basis(std::size_t root_index) const { return rank() + static_cast<int>(root_index); }
  int root_basis(const Root& r) const;
  /// Root index of a basis element, nullopt for Cartan elements.
  std::optional<std::size_t> root_of(int basis) const;
  std::string basis_name(int basis) const;

  /// N_{a,b} for root indices a, b; zero when a + b is not a root.
  int structure_constant(std::size_t a, std::size_t b) const;
  /// [e_i, e_j] as sparse (basis, integer coefficient) pairs.
  const std::vector<std::pair<int, int>>& bracket_basis(int i, int j) const { return table_[i * dim_ + j]; }

  AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) const;
  /// tr(ad e_i ad e_j).
  long long killing_basis(int i, int j) const { return killing_[i * dim_ + j]; }
  Rational killing_form(const AlgebraElement& a, const AlgebraElement& b) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  int dim_;
  std::vector<int> n_;  // structure constants, indexed a * |roots| + b
  std::vector<std::vector<std::pair<int, int>>> table_;
  std::vector<long long> killing_;
};

ChevalleyAlgebra build_chevalley(const RootSystem& rs);

AlgebraElement grading_element(const ChevalleyAlgebra& sc, const Gradation& gr);

/// Level of a level-homogeneous element without Cartan part; ShapeError otherwise.
int element_level(const ChevalleyAlgebra& sc, const Gradation& gr, const AlgebraElement& v);

/// Rank of Z -> [Z, v] from g_0 to g_k. Zero for v = 0.
int orbit_dimension(const ChevalleyAlgebra& sc, const Gradation& gr, const AlgebraElement& v);

struct GenericPair {
  AlgebraElement x;
  AlgebraElement y;
  Rational scale;
  std::vector<Root> orbit;
};

/// X = sum of x_alpha over the orbit of alpha_0 under the reflections fixing
/// level 0, Y = s * sum of x_{-alpha}. Unsupported for non-simply-laced
/// algebras; RegularityFailed when [X, Y] leaves the Cartan subalgebra.
GenericPair generic_pair(const ChevalleyAlgebra& sc, const Gradation& gr);

/// The candidate pair and its bracket, without the regularity check.
GenericPair generic_pair_candidate(const ChevalleyAlgebra& sc, const Gradation& gr);

/// Component of alpha_0 orthogonal to the other simple roots: its squared norm.
Rational orthogonal_part_norm(const RootSystem& rs, int node);

struct OrbitSumReport {
  std::size_t orbit_size = 0;
  std::size_t restricted_orbit_size = 0;
  /// sum over the orbit of <alpha, alpha_k>, for every node k.
  std::vector<Rational> sums;
  std::vector<Rational> expected;
  bool restriction_commutes = false;
  bool pass() const;
};

OrbitSumReport orbit_sums(const ChevalleyAlgebra& sc, const Gradation& gr);

}  // namespace dynkin
