#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gchar/exactmath/rational.hpp"

namespace gchar {

/// Coordinates with respect to a numbered basis; zero entries are never stored.
using SparseVector = std::map<std::size_t, Rational>;

/// v += c * w, dropping entries that cancel.
void add_scaled(SparseVector& v, const SparseVector& w, const Rational& c);

SparseVector scaled(const SparseVector& v, const Rational& c);
SparseVector difference(const SparseVector& a, const SparseVector& b);

std::vector<Rational> to_dense(const SparseVector& v, std::size_t dim);
SparseVector to_sparse(const std::vector<Rational>& v);

/// Incrementally built basis of a subspace of Q^n. Each stored row has a
/// leading (smallest) index with coefficient 1 and no other row shares that
/// leading index, which is enough for exact membership tests.
class EchelonBasis {
 public:
  /// Reduces v against the stored rows; the result has no entry at any pivot.
  SparseVector reduce(SparseVector v) const;

  /// Adds v to the span. Returns true if the dimension grew.
  bool insert(SparseVector v);

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t dim() const { return rows_.size(); }
  std::vector<SparseVector> vectors() const;

 private:
  std::map<std::size_t, SparseVector> rows_;  // keyed by pivot index
};

}  // namespace gchar
