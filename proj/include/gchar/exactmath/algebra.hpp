#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "gchar/exactmath/matrix.hpp"
#include "gchar/exactmath/sparse.hpp"

namespace gchar {

/// Finite-dimensional algebra over Q given by structure constants:
/// b_i * b_j = sum_k c_ij^k b_k.
class FiniteAlgebra {
 public:
  using ProductFn = std::function<SparseVector(std::size_t, std::size_t)>;

  FiniteAlgebra(std::size_t dim, const ProductFn& product);

  std::size_t dim() const { return dim_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  /// True when every basis product is zero or a single basis vector with
  /// coefficient 1 (a contracted semigroup algebra).
  bool is_monomial() const { return monomial_; }
  bool is_commutative() const { return commutative_; }
  /// Index of a basis element acting as two-sided identity, if any.
  std::optional<std::size_t> unit_index() const { return unit_; }

  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  SparseVector power(const SparseVector& x, unsigned k) const;

  /// Trace of left multiplication by x.
  Rational trace_left(const SparseVector& x) const;

 private:
  std::size_t dim_;
  std::vector<SparseVector> table_;
  std::vector<int> mono_;  // basis product index, -1 for zero; valid when monomial_
  bool monomial_ = true;
  bool commutative_ = true;
  std::optional<std::size_t> unit_;
  friend void verify_associative(const FiniteAlgebra&);
};

/// Throws NonAssociative if (b_i b_j) b_k != b_i (b_j b_k) for some basis triple.
void verify_associative(const FiniteAlgebra& alg);

/// Linear map A -> A/J given by rows whose common kernel is the radical J.
class QuotientMap {
 public:
  QuotientMap() = default;
  explicit QuotientMap(std::vector<SparseVector> rows) : rows_(std::move(rows)) {}

  std::size_t dim() const { return rows_.size(); }
  std::vector<Rational> apply(const SparseVector& v) const;
  bool kills(const SparseVector& v) const;

 private:
  std::vector<SparseVector> rows_;
};

struct RadicalResult {
  std::vector<SparseVector> basis;
  QuotientMap quotient;
  bool is_two_sided_ideal = false;
  /// Smallest k with J^k = 0; empty if the power chain stalls above zero.
  std::optional<std::size_t> nilpotency_index;
  std::vector<std::size_t> power_dims;  // dim J, dim J^2, ...

  std::size_t dim() const { return basis.size(); }
};

/// Jacobson radical over Q via the trace form: J = {x : tr(L_{xy}) = 0 for all
/// basis y}. The result is checked to be a two-sided ideal and nilpotent.
RadicalResult algebra_radical(const FiniteAlgebra& alg, bool check_associativity = true);

/// Gram matrix of the trace form tr(L_{b_i b_j}).
RationalMatrix trace_form(const FiniteAlgebra& alg);

/// Span of the two-sided ideal generated by `gens`. Generators already in the
/// span are skipped; when `stop_at` is reached the loop ends early.
EchelonBasis ideal_span(const FiniteAlgebra& alg, const std::vector<SparseVector>& gens,
                        std::size_t stop_at = static_cast<std::size_t>(-1));

/// Dimensions of the power chain I, I^2, ... for the two-sided ideal spanned
/// by `ideal`; stops at zero or when the chain stops shrinking. For
/// commutative algebras with a basis unit, I^{k+1} is spanned by products of
/// a basis of I^k with ideal generators of I; otherwise by all of I^k * I.
std::vector<std::size_t> power_chain(const FiniteAlgebra& alg, const std::vector<SparseVector>& ideal);

}  // namespace gchar
