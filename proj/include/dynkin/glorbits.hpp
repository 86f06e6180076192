#pragma once

// Pairs of 2-forms (w1, w2), i.e. vectors of C^2 (x) Lambda^2 C^n, and the
// binary form f(l, m) defined by (l w1 + m w2)^m = f(l, m) e^1 ^ ... ^ e^2m.
// A 2-form is stored as its antisymmetric coefficient matrix:
// w = sum_{i<j} M_ij e^i ^ e^j.

#include <compare>
#include <vector>

#include "dynkin/linalg.hpp"

namespace dynkin {

struct TwoFormPair {
  int m = 0;
  int n = 0;
  RatMatrix M1;
  RatMatrix M2;
};

/// Checks shapes (n == 2m or 2m + 1) and antisymmetry; ShapeError otherwise.
TwoFormPair make_pair(int m, RatMatrix M1, RatMatrix M2);

/// Coefficients c_0..c_m of sum_k c_k l^(m-k) mu^k.
struct BinaryForm {
  std::vector<Rational> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const;
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

/// f(l, m) -> f(a l + c m, b l + d m) for A = [[a, b], [c, d]], i.e. f((l, m) A).
BinaryForm substitute(const BinaryForm& f, const RatMatrix& A);

/// Projective point (l : mu), normalized to (r : 1) or (1 : 0).
struct ProjectivePoint {
  Rational lambda;
  Rational mu;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (auto c = cmp(a.mu, b.mu); c != 0) return c <=> 0;
    return cmp(a.lambda, b.lambda) <=> 0;
  }
};

ProjectivePoint normalize(const Rational& lambda, const Rational& mu);

struct PointConfig {
  std::vector<ProjectivePoint> points;
};

/// m! Pf(l M1 + mu M2). ShapeError unless n == 2m.
BinaryForm phi(const TwoFormPair& pair);

/// Pfaffian of an even antisymmetric matrix.
Rational pfaffian(const RatMatrix& M);

/// A (w1, w2) = (a w1 + b w2, c w1 + d w2) and g w = g M g^T.
TwoFormPair act(const TwoFormPair& pair, const RatMatrix& A, const RatMatrix& g);

/// f_{A(g w1, g w2)}(l, mu) == f_{(w1, w2)}((l, mu) A). DomainError unless
/// det g == 1 and A is invertible.
bool covariance_check(const TwoFormPair& pair, const RatMatrix& A, const RatMatrix& g);

/// Block-diagonal pair with w1 = sum mu_i e^{2i-1}^e^{2i}, w2 = -sum l_i e^{2i-1}^e^{2i}.
TwoFormPair construct_from_points(const PointConfig& pts);

enum class Stratum { U1, U2 };
const char* stratum_name(Stratum s);

/// U1 when both forms live on a common 2m-dimensional subspace. ShapeError unless n == 2m + 1.
Stratum classify_u1_u2(const TwoFormPair& pair);

/// Rank of the tangent map of gl_2 + sl_n at the pair.
int orbit_dim_gl2sl(const TwoFormPair& pair);

/// Dimension of C^2 (x) Lambda^2 C^n.
int pair_space_dim(int n);

/// Roots of phi as a sorted multiset. Degenerate when phi vanishes, NotSplit
/// when phi has an irreducible factor of degree > 1 over Q.
PointConfig point_config_invariant(const TwoFormPair& pair);
PointConfig roots_of(const BinaryForm& f);

/// Cross-ratio (p1, p2; p3, p4) and the PGL_2-invariant j of four distinct points.
Rational cross_ratio(const PointConfig& pts);
Rational j_invariant(const PointConfig& pts);

/// Regular pencil of rank 2m on C^{2m+1}: w1 = sum e_i ^ f_i, w2 = sum e_i ^ f_{i+1}.
TwoFormPair kronecker_pair(int m);

}  // namespace dynkin
