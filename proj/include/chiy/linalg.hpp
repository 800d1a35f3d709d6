#pragma once

#include <utility>
#include <vector>

#include "chiy/polynomial.hpp"
#include "chiy/rational.hpp"

namespace chiy {

// Dense matrix of rationals. Rectangular by construction.
class ExactMatrix {
public:
  ExactMatrix(int rows, int cols)
      : rows_(static_cast<std::size_t>(rows),
              std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0))) {
    if (rows < 0 || cols < 0) throw DimensionError("ExactMatrix: negative extent");
  }
  explicit ExactMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.size() != rows_.front().size()) throw DimensionError("ExactMatrix: ragged rows");
  }

  static ExactMatrix identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int row_count() const { return static_cast<int>(rows_.size()); }
  int col_count() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  bool is_square() const { return row_count() == col_count(); }

  Rational& at(int i, int j) { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Rational& at(int i, int j) const {
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.col_count() != b.row_count()) throw DimensionError("ExactMatrix: product shape mismatch");
    ExactMatrix c(a.row_count(), b.col_count());
    for (int i = 0; i < a.row_count(); ++i)
      for (int k = 0; k < a.col_count(); ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < b.col_count(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return c;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
  std::vector<std::vector<Rational>> rows_;
};

// Exact solve of M x = rhs by Gaussian elimination with partial pivoting.
// The right-hand side may hold any value type that supports subtraction and
// scaling by Rational (rationals, polynomials, graded classes).
template <typename T>
std::vector<T> solve_linear(ExactMatrix m, std::vector<T> rhs) {
  if (!m.is_square()) throw DimensionError("solve_linear: matrix must be square");
  const int n = m.row_count();
  if (static_cast<int>(rhs.size()) != n) throw ArityError("solve_linear: rhs length mismatch");

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      if (pivot < 0 || m.at(r, col).abs() > m.at(pivot, col).abs()) pivot = r;
    }
    if (pivot < 0) throw SingularMatrixError("solve_linear: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(col)]);
    }
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Rational factor = m.at(r, col) / m.at(col, col);
      for (int j = col; j < n; ++j) m.at(r, j) -= factor * m.at(col, j);
      rhs[static_cast<std::size_t>(r)] =
          rhs[static_cast<std::size_t>(r)] - factor * rhs[static_cast<std::size_t>(col)];
    }
  }

  std::vector<T> x = rhs;  // sized copy; every entry is overwritten below
  for (int i = n - 1; i >= 0; --i) {
    T acc = rhs[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) acc = acc - m.at(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = m.at(i, i).reciprocal() * acc;
  }
  return x;
}

inline Rational determinant(ExactMatrix m) {
  if (!m.is_square()) throw DimensionError("determinant: matrix must be square");
  const int n = m.row_count();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      if (pivot < 0 || m.at(r, col).abs() > m.at(pivot, col).abs()) pivot = r;
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Rational factor = m.at(r, col) / m.at(col, col);
      for (int j = col; j < n; ++j) m.at(r, j) -= factor * m.at(col, j);
    }
  }
  return det;
}

// Row i is [1, a_i, a_i^2, ..., a_i^n].
inline ExactMatrix vandermonde_matrix(const std::vector<Rational>& nodes) {
  const int n = static_cast<int>(nodes.size());
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    Rational p = 1;
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = p;
      p *= nodes[static_cast<std::size_t>(i)];
    }
  }
  return m;
}

// prod_{i<j} (a_j - a_i); zero whenever two nodes coincide.
inline Rational vandermonde_det(const std::vector<Rational>& nodes) {
  Rational det = 1;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) det *= nodes[j] - nodes[i];
  return det;
}

// Upper-triangular change-of-basis matrix M with M[p][k] = C(k,p) alpha^(k-p):
// it maps monomial coefficients b to the Taylor coefficients a at alpha.
inline ExactMatrix taylor_matrix(const Rational& alpha, int n) {
  ExactMatrix m(n + 1, n + 1);
  for (int p = 0; p <= n; ++p)
    for (int k = p; k <= n; ++k) m.at(p, k) = Rational(binomial(k, p)) * pow(alpha, k - p);
  return m;
}

namespace detail {
inline void require_distinct(const std::vector<Rational>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j])
        throw DistinctNodesError("duplicate interpolation node " + nodes[i].str());
}
}  // namespace detail

// Unique polynomial of degree < len(nodes) through the given points.
inline Polynomial lagrange_interpolate(const std::vector<Rational>& nodes,
                                       const std::vector<Rational>& values) {
  if (nodes.empty()) throw ArityError("lagrange_interpolate: need at least one node");
  if (nodes.size() != values.size())
    throw ArityError("lagrange_interpolate: node/value count mismatch");
  detail::require_distinct(nodes);

  Polynomial result;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Polynomial basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      basis *= Polynomial{-nodes[j], Rational(1)};
      denom *= nodes[i] - nodes[j];
    }
    result += basis * (values[i] / denom);
  }
  return result;
}

}  // namespace chiy
