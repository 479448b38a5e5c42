#pragma once

#include <cstddef>
#include <vector>

#include "deborder/eps.hpp"
#include "deborder/errors.hpp"
#include "deborder/homopoly.hpp"
#include "deborder/rational.hpp"

namespace deborder {

/// Dense row-major matrix over a field (Rational or EpsScalar).
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<S> row(std::size_t i) const {
    return std::vector<S>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  std::vector<S> column(std::size_t j) const {
    std::vector<S> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> a_;
};

using RationalMatrix = Matrix<Rational>;
using EpsMatrix = Matrix<EpsScalar>;

/// Row vector times matrix: the coefficients of l(Mx) for l(x) = v . x.
template <class S>
std::vector<S> row_times(const std::vector<S>& v, const Matrix<S>& m) {
  if (v.size() != m.rows()) throw DimensionMismatch("row vector length");
  std::vector<S> out(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

/// Reduced row echelon form with the list of pivot columns.
template <class S>
struct Echelon {
  Matrix<S> reduced;
  std::vector<std::size_t> pivot_cols;
};

template <class S>
Echelon<S> row_reduce(Matrix<S> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const S inv = S(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class S>
std::size_t rank(const Matrix<S>& m) {
  return row_reduce(m).pivot_cols.size();
}

/// Basis of {v : m v = 0}, one vector per free column.
template <class S>
std::vector<std::vector<S>> nullspace(const Matrix<S>& m) {
  const Echelon<S> e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<S> v(m.cols());
    v[free] = S(1);
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = S() - e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact inverse; throws Singular.
template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = S(1);
  }
  Echelon<S> e = row_reduce(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) throw Singular("matrix is singular");
  Matrix<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Solves the square system m x = b; throws Singular.
template <class S>
std::vector<S> solve(const Matrix<S>& m, const std::vector<S>& b) {
  if (!m.is_square() || b.size() != m.rows()) throw DimensionMismatch("linear system shape");
  const std::size_t n = m.rows();
  Matrix<S> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  Echelon<S> e = row_reduce(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) throw Singular("linear system is singular");
  std::vector<S> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.reduced(i, n);
  return x;
}

EpsMatrix invert_matrix(const EpsMatrix& m);
EpsMatrix lift(const RationalMatrix& m);
/// Entrywise value at eps = 0; throws PoleAtZero.
RationalMatrix limit_at_zero(const EpsMatrix& m);
/// Entries regular at eps = 0 and the eps = 0 part invertible.
bool is_unit_at_zero(const EpsMatrix& m);

/// p(Mx): every x_i is replaced by the i-th row form of M.
template <class S>
HomoPoly<S> substitute_linear(const HomoPoly<S>& p, const Matrix<S>& m) {
  if (!m.is_square() || m.rows() != p.nvars())
    throw DimensionMismatch("substitution matrix does not match polynomial arity");
  const std::size_t n = p.nvars();
  // cache[i][e] = (row_i . x)^e
  std::vector<std::vector<HomoPoly<S>>> cache(n);
  auto row_power = [&](std::size_t i, unsigned e) -> const HomoPoly<S>& {
    auto& c = cache[i];
    if (c.empty()) c.push_back(HomoPoly<S>::constant(n, S(1)));
    while (c.size() <= e) c.push_back(c.back() * power_of_linear(m.row(i), 1));
    return c[e];
  };
  HomoPoly<S> out(n, p.degree());
  for (const auto& [mono, coef] : p.terms()) {
    HomoPoly<S> term = HomoPoly<S>::constant(n, coef);
    for (std::size_t i = 0; i < n; ++i)
      if (mono[i] > 0) term = term * row_power(i, mono[i]);
    out += term;
  }
  return out;
}

/// Interpolation system: coefficients c with sum_s c_s nodes_j^s = rhs_j for
/// every j (Newton divided differences, expanded to the monomial basis).
std::vector<Rational> solve_vandermonde(const std::vector<Rational>& nodes,
                                        const std::vector<Rational>& rhs);

/// Power-sum system: weights c with sum_j c_j nodes_j^s = rhs_s for
/// s = 0..n-1 (Lagrange basis of the nodes).
std::vector<Rational> solve_vandermonde_transposed(const std::vector<Rational>& nodes,
                                                   const std::vector<Rational>& rhs);

}  // namespace deborder
