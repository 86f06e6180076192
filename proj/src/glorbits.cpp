#include "dynkin/glorbits.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace dynkin {

namespace {

using Poly = std::vector<Rational>;  // homogeneous binary form, coefficients of l^(d-k) mu^k

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void check_antisymmetric(const RatMatrix& M, int n, const char* name) {
  if (static_cast<int>(M.rows()) != n || static_cast<int>(M.cols()) != n)
    throw ShapeError(std::string(name) + " is not " + std::to_string(n) + "x" + std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (M(i, j) != -M(j, i)) throw ShapeError(std::string(name) + " is not antisymmetric");
}

Integer factorial(int m) {
  Integer f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// Pfaffian of a pencil by expansion along the first remaining index.
class PencilPfaffian {
 public:
  PencilPfaffian(const RatMatrix& M1, const RatMatrix& M2) : M1_(M1), M2_(M2) {}

  Poly operator()(unsigned mask) {
    if (mask == 0) return {Rational(1)};
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int first = std::countr_zero(mask);
    const unsigned rest = mask & ~(1u << first);
    Poly out(std::popcount(mask) / 2 + 1);
    int sign = 1;
    for (unsigned r = rest; r; r &= r - 1) {
      const int j = std::countr_zero(r);
      const Poly entry{M1_(first, j), M2_(first, j)};
      if (entry[0] != 0 || entry[1] != 0) {
        const Poly sub = mul(entry, (*this)(rest & ~(1u << j)));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += sign * sub[k];
      }
      sign = -sign;
    }
    memo_.emplace(mask, out);
    return out;
  }

 private:
  const RatMatrix& M1_;
  const RatMatrix& M2_;
  std::unordered_map<unsigned, Poly> memo_;
};

RatMatrix congruence(const RatMatrix& g, const RatMatrix& M) { return g * M * g.transposed(); }

Rational det2(const RatMatrix& A) { return A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0); }

std::vector<Integer> divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Value of the dehomogenized polynomial sum_k p[k] t^(d-k) at t.
Rational eval(const Poly& p, const Rational& t) {
  Rational v = 0;
  for (const auto& c : p) v = v * t + c;
  return v;
}

Poly divide_linear(const Poly& p, const Rational& t) {
  Poly q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    carry = carry * t + p[k];
    q[k] = carry;
  }
  return q;
}

}  // namespace

TwoFormPair make_pair(int m, RatMatrix M1, RatMatrix M2) {
  if (m < 1) throw ShapeError("m must be at least 1");
  const int n = static_cast<int>(M1.rows());
  if (n != 2 * m && n != 2 * m + 1)
    throw ShapeError("ambient dimension " + std::to_string(n) + " is neither 2m nor 2m+1 for m=" + std::to_string(m));
  check_antisymmetric(M1, n, "M1");
  check_antisymmetric(M2, n, "M2");
  return {m, n, std::move(M1), std::move(M2)};
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

BinaryForm substitute(const BinaryForm& f, const RatMatrix& A) {
  const int d = f.degree();
  const Poly l{A(0, 0), A(1, 0)};
  const Poly m{A(0, 1), A(1, 1)};
  std::vector<Poly> lp{{Rational(1)}}, mp{{Rational(1)}};
  for (int k = 1; k <= d; ++k) {
    lp.push_back(mul(lp.back(), l));
    mp.push_back(mul(mp.back(), m));
  }
  BinaryForm out{Poly(d + 1)};
  for (int k = 0; k <= d; ++k) {
    if (f.coeffs[k] == 0) continue;
    const Poly term = mul(lp[d - k], mp[k]);
    for (int i = 0; i <= d; ++i) out.coeffs[i] += f.coeffs[k] * term[i];
  }
  return out;
}

ProjectivePoint normalize(const Rational& lambda, const Rational& mu) {
  if (mu != 0) return {lambda / mu, 1};
  if (lambda == 0) throw DomainError("(0:0) is not a projective point");
  return {1, 0};
}

Rational pfaffian(const RatMatrix& M) {
  const int n = static_cast<int>(M.rows());
  if (n % 2) throw ShapeError("Pfaffian of an odd-sized matrix");
  check_antisymmetric(M, n, "matrix");
  const RatMatrix zero(n, n);
  PencilPfaffian pf(M, zero);
  return pf((1u << n) - 1)[0];
}

BinaryForm phi(const TwoFormPair& pair) {
  if (pair.n != 2 * pair.m)
    throw ShapeError("phi needs n = 2m, got n=" + std::to_string(pair.n) + " m=" + std::to_string(pair.m));
  PencilPfaffian pf(pair.M1, pair.M2);
  BinaryForm f{pf((1u << pair.n) - 1)};
  const Rational s = factorial(pair.m);
  for (auto& c : f.coeffs) c *= s;
  return f;
}

TwoFormPair act(const TwoFormPair& pair, const RatMatrix& A, const RatMatrix& g) {
  const RatMatrix G1 = congruence(g, pair.M1), G2 = congruence(g, pair.M2);
  RatMatrix N1(pair.n, pair.n), N2(pair.n, pair.n);
  for (int i = 0; i < pair.n; ++i)
    for (int j = 0; j < pair.n; ++j) {
      N1(i, j) = A(0, 0) * G1(i, j) + A(0, 1) * G2(i, j);
      N2(i, j) = A(1, 0) * G1(i, j) + A(1, 1) * G2(i, j);
    }
  return {pair.m, pair.n, std::move(N1), std::move(N2)};
}

bool covariance_check(const TwoFormPair& pair, const RatMatrix& A, const RatMatrix& g) {
  if (A.rows() != 2 || A.cols() != 2) throw ShapeError("A must be 2x2");
  if (static_cast<int>(g.rows()) != pair.n || !g.square()) throw ShapeError("g has the wrong shape");
  if (det2(A) == 0) throw DomainError("A is singular");
  if (determinant(g) != 1) throw DomainError("det g = " + to_string(determinant(g)) + ", expected 1");
  return phi(act(pair, A, g)) == substitute(phi(pair), A);
}

TwoFormPair construct_from_points(const PointConfig& pts) {
  const int m = static_cast<int>(pts.points.size());
  if (m < 1) throw ShapeError("need at least one point");
  RatMatrix M1(2 * m, 2 * m), M2(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    const auto& p = pts.points[i];
    if (p.lambda == 0 && p.mu == 0) throw DomainError("(0:0) is not a projective point");
    M1(2 * i, 2 * i + 1) = p.mu;
    M1(2 * i + 1, 2 * i) = -p.mu;
    M2(2 * i, 2 * i + 1) = -p.lambda;
    M2(2 * i + 1, 2 * i) = p.lambda;
  }
  return {m, 2 * m, std::move(M1), std::move(M2)};
}

const char* stratum_name(Stratum s) { return s == Stratum::U1 ? "U1" : "U2"; }

Stratum classify_u1_u2(const TwoFormPair& pair) {
  if (pair.n != 2 * pair.m + 1)
    throw ShapeError("classification needs n = 2m+1, got n=" + std::to_string(pair.n));
  RatMatrix stacked(pair.n, 2 * pair.n);
  for (int i = 0; i < pair.n; ++i)
    for (int j = 0; j < pair.n; ++j) {
      stacked(i, j) = pair.M1(i, j);
      stacked(i, pair.n + j) = pair.M2(i, j);
    }
  return static_cast<int>(rank(stacked)) <= 2 * pair.m ? Stratum::U1 : Stratum::U2;
}

int pair_space_dim(int n) { return n * (n - 1); }

int orbit_dim_gl2sl(const TwoFormPair& pair) {
  const int n = pair.n;
  std::vector<std::pair<int, int>> coords;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) coords.emplace_back(i, j);
  const int half = static_cast<int>(coords.size());

  std::vector<std::vector<Rational>> rows;
  auto push = [&](const RatMatrix& D1, const RatMatrix& D2) {
    std::vector<Rational> row(2 * half);
    for (int k = 0; k < half; ++k) {
      row[k] = D1(coords[k].first, coords[k].second);
      row[half + k] = D2(coords[k].first, coords[k].second);
    }
    rows.push_back(std::move(row));
  };
  const RatMatrix zero(n, n);
  // gl_2: E_ab sends (w1, w2) to the pair with w_b placed in slot a.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const RatMatrix& src = b == 0 ? pair.M1 : pair.M2;
      if (a == 0) push(src, zero);
      else push(zero, src);
    }
  // sl_n: Z acts by Z M + M Z^T.
  auto tangent = [&](const RatMatrix& Z) {
    const RatMatrix Zt = Z.transposed();
    RatMatrix D1 = Z * pair.M1, D2 = Z * pair.M2;
    const RatMatrix E1 = pair.M1 * Zt, E2 = pair.M2 * Zt;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        D1(i, j) += E1(i, j);
        D2(i, j) += E2(i, j);
      }
    push(D1, D2);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && i == n - 1) continue;
      RatMatrix Z(n, n);
      Z(i, j) = 1;
      if (i == j) Z(n - 1, n - 1) = -1;
      tangent(Z);
    }

  RatMatrix T(rows.size(), 2 * half);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < 2 * half; ++c) T(r, c) = rows[r][c];
  return static_cast<int>(rank(T));
}

PointConfig roots_of(const BinaryForm& f) {
  if (f.is_zero()) throw Degenerate("binary form vanishes identically");
  Poly p = f.coeffs;
  PointConfig out;
  // Leading zeros: factors of mu, i.e. the point (1:0).
  while (!p.empty() && p.front() == 0) {
    out.points.push_back({1, 0});
    p.erase(p.begin());
  }
  while (p.size() > 1) {
    if (p.back() == 0) {
      out.points.push_back({0, 1});
      p.pop_back();
      continue;
    }
    Integer den = 1;
    for (const auto& c : p) den = lcm(den, c.get_den());
    std::vector<Integer> z;
    for (const auto& c : p) z.push_back(c.get_num() * (den / c.get_den()));
    bool found = false;
    for (const auto& num : divisors(z.back())) {
      for (const auto& dd : divisors(z.front())) {
        for (int s : {1, -1}) {
          Rational t(s * num, dd);
          t.canonicalize();
          if (eval(p, t) != 0) continue;
          out.points.push_back({t, 1});
          p = divide_linear(p, t);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) throw NotSplit("binary form has no rational root on a factor of degree " + std::to_string(p.size() - 1));
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

PointConfig point_config_invariant(const TwoFormPair& pair) { return roots_of(phi(pair)); }

Rational cross_ratio(const PointConfig& pts) {
  if (pts.points.size() != 4) throw ShapeError("cross-ratio needs exactly four points");
  const auto& p = pts.points;
  auto br = [&](int i, int j) -> Rational { return p[i].lambda * p[j].mu - p[i].mu * p[j].lambda; };
  const Rational den = br(0, 3) * br(1, 2);
  if (den == 0 || br(0, 2) == 0 || br(1, 3) == 0) throw Degenerate("points are not distinct");
  return br(0, 2) * br(1, 3) / den;
}

Rational j_invariant(const PointConfig& pts) {
  const Rational x = cross_ratio(pts);
  const Rational a = x * x - x + 1;
  const Rational b = x * (x - 1);
  return 256 * a * a * a / (b * b);
}

TwoFormPair kronecker_pair(int m) {
  if (m < 1) throw ShapeError("m must be at least 1");
  const int n = 2 * m + 1;
  RatMatrix M1(n, n), M2(n, n);
  for (int i = 0; i < m; ++i) {
    M1(i, m + i) = 1;
    M1(m + i, i) = -1;
    M2(i, m + i + 1) = 1;
    M2(m + i + 1, i) = -1;
  }
  return {m, n, std::move(M1), std::move(M2)};
}

}  // namespace dynkin
