#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gchar/error.hpp"
#include "gchar/exactmath/rational.hpp"

namespace gchar {

class Cyclotomic;

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  using Context = std::monostate;
  static Rational zero(Context) { return Rational(0); }
  static Rational one(Context) { return Rational(1); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

/// Dense rectangular matrix over an exact field. The context carries whatever
/// the field needs to build its constants (nothing for Q, the order N for
/// Q(zeta_N)).
template <class F>
class ExactMatrix {
 public:
  using Traits = FieldTraits<F>;
  using Context = typename Traits::Context;

  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, Context ctx = {})
      : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols, Traits::zero(ctx)) {}

  static ExactMatrix identity(std::size_t n, Context ctx = {}) {
    ExactMatrix m(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Traits::one(ctx);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Context context() const { return ctx_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  std::vector<F> row(std::size_t r) const {
    return std::vector<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  void append_row(const std::vector<F>& r) {
    if (r.size() != cols_) fail(ErrorKind::InvalidArgument, "row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) fail(ErrorKind::InvalidArgument, "vector length mismatch");
    std::vector<F> out(rows_, Traits::zero(ctx_));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!Traits::is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
      }
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Context ctx_{};
  std::vector<F> data_;
};

using RationalMatrix = ExactMatrix<Rational>;

template <class F>
struct RowEchelon {
  ExactMatrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination; the pivot in each
/// column is the first nonzero entry at or below the current row.
template <class F>
RowEchelon<F> rref(ExactMatrix<F> m) {
  using T = FieldTraits<F>;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && T::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const F inv = T::one(m.context()) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || T::is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!T::is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Basis of {x : m x = 0}; one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
template <class F>
std::vector<std::vector<F>> nullspace(const ExactMatrix<F>& m) {
  using T = FieldTraits<F>;
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), T::zero(m.context()));
    v[free] = T::one(m.context());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = rhs (free variables set to zero); throws Unsolvable
/// for inconsistent systems.
template <class F>
std::vector<F> solve(const ExactMatrix<F>& m, const std::vector<F>& rhs) {
  using T = FieldTraits<F>;
  if (rhs.size() != m.rows()) fail(ErrorKind::InvalidArgument, "rhs length mismatch");
  ExactMatrix<F> aug(m.rows(), m.cols() + 1, m.context());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) {
    fail(ErrorKind::Unsolvable, "inconsistent linear system");
  }
  std::vector<F> x(m.cols(), T::zero(m.context()));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

template <class F>
std::size_t rank(const ExactMatrix<F>& m) {
  return rref(m).pivots.size();
}

/// Rank over Q by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing row denominators.
std::size_t rank(const RationalMatrix& m);

/// Determinant over Q by Bareiss elimination.
Rational determinant(const RationalMatrix& m);

}  // namespace gchar
