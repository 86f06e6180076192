#include "dynkin/linalg.hpp"

#include <utility>

namespace dynkin {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw ParseError("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v) {
  if (a.cols() != v.size()) throw ShapeError("matrix-vector shape mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

namespace {

// Bareiss elimination in place. Returns the rank; when `det` is non-null and
// the matrix is square, stores the determinant.
std::size_t bareiss(Matrix<Integer>& m, Integer* det) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  if (det) {
    if (rows == cols && r == rows)
      *det = sign * m(rows - 1, cols - 1);
    else
      *det = 0;
  }
  return r;
}

Matrix<Integer> clear_denominators(const RatMatrix& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& d = m(i, j).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (q == 0) continue;
      out(i, j) = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw ShapeError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Matrix<Integer> z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = m(i, j);
  Integer det;
  bareiss(z, &det);
  return det;
}

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw ShapeError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Rational scale = 1;
  Matrix<Integer> z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  Integer det;
  bareiss(z, &det);
  Rational out(det);
  out /= scale;
  return out;
}

std::size_t rank(const RatMatrix& m) { return rank(clear_denominators(m)); }

std::size_t rank(Matrix<Integer> m) { return bareiss(m, nullptr); }

std::vector<Rational> solve(const RatMatrix& a, const std::vector<Rational>& b) {
  if (!a.square() || a.rows() != b.size()) throw ShapeError("solve: shape mismatch");
  const std::size_t n = a.rows();
  RatMatrix m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) throw ShapeError("solve: singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j <= n; ++j) std::swap(m(piv, j), m(c, j));
    const Rational inv = 1 / m(c, c);
    for (std::size_t j = c; j <= n; ++j) m(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j <= n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m(i, n);
  return x;
}

RatMatrix inverse(const RatMatrix& a) {
  if (!a.square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rational> e(n);
    e[c] = 1;
    auto col = solve(a, e);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
  }
  return inv;
}

}  // namespace dynkin
