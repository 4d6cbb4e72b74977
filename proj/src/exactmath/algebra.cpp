#include "gchar/exactmath/algebra.hpp"

#include <string>

namespace gchar {

FiniteAlgebra::FiniteAlgebra(std::size_t dim, const ProductFn& product)
    : dim_(dim), table_(dim * dim), mono_(dim * dim, -1) {
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      SparseVector p = product(i, j);
      for (const auto& [k, c] : p) {
        if (k >= dim) fail(ErrorKind::InvalidArgument, "structure constant index out of range");
      }
      if (p.size() == 1 && p.begin()->second == 1) {
        mono_[i * dim + j] = static_cast<int>(p.begin()->first);
      } else if (!p.empty()) {
        monomial_ = false;
      }
      table_[i * dim + j] = std::move(p);
    }
  }
  for (std::size_t i = 0; i < dim && commutative_; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (table_[i * dim + j] != table_[j * dim + i]) {
        commutative_ = false;
        break;
      }
  for (std::size_t e = 0; e < dim && !unit_; ++e) {
    bool is_unit = true;
    for (std::size_t j = 0; j < dim && is_unit; ++j) {
      const SparseVector b{{j, Rational(1)}};
      is_unit = table_[e * dim + j] == b && table_[j * dim + e] == b;
    }
    if (is_unit) unit_ = e;
  }
}

SparseVector FiniteAlgebra::multiply(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      const SparseVector& p = product(i, j);
      if (p.empty()) continue;
      add_scaled(out, p, a * b);
    }
  }
  return out;
}

SparseVector FiniteAlgebra::power(const SparseVector& x, unsigned k) const {
  if (k == 0) fail(ErrorKind::InvalidArgument, "zeroth power needs a unit");
  SparseVector out = x;
  for (unsigned i = 1; i < k; ++i) out = multiply(out, x);
  return out;
}

Rational FiniteAlgebra::trace_left(const SparseVector& x) const {
  Rational t = 0;
  for (const auto& [i, a] : x) {
    for (std::size_t j = 0; j < dim_; ++j) {
      auto it = product(i, j).find(j);
      if (it != product(i, j).end()) t += a * it->second;
    }
  }
  return t;
}

void verify_associative(const FiniteAlgebra& alg) {
  const std::size_t n = alg.dim();
  auto report = [](std::size_t i, std::size_t j, std::size_t k) {
    fail(ErrorKind::NonAssociative, "basis triple (" + std::to_string(i) + "," + std::to_string(j) +
                                        "," + std::to_string(k) + ")");
  };
  if (alg.monomial_) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const int ij = alg.mono_[i * n + j];
        for (std::size_t k = 0; k < n; ++k) {
          const int jk = alg.mono_[j * n + k];
          const int left = ij < 0 ? -1 : alg.mono_[static_cast<std::size_t>(ij) * n + k];
          const int right = jk < 0 ? -1 : alg.mono_[i * n + static_cast<std::size_t>(jk)];
          if (left != right) report(i, j, k);
        }
      }
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        SparseVector left;
        for (const auto& [m, c] : alg.product(i, j)) add_scaled(left, alg.product(m, k), c);
        SparseVector right;
        for (const auto& [m, c] : alg.product(j, k)) add_scaled(right, alg.product(i, m), c);
        if (left != right) report(i, j, k);
      }
    }
  }
}

std::vector<Rational> QuotientMap::apply(const SparseVector& v) const {
  std::vector<Rational> out(rows_.size(), Rational(0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const SparseVector& row = rows_[r];
    // iterate over the shorter of the two maps
    if (row.size() < v.size()) {
      for (const auto& [k, c] : row) {
        auto it = v.find(k);
        if (it != v.end()) out[r] += c * it->second;
      }
    } else {
      for (const auto& [k, c] : v) {
        auto it = row.find(k);
        if (it != row.end()) out[r] += c * it->second;
      }
    }
  }
  return out;
}

bool QuotientMap::kills(const SparseVector& v) const {
  for (const auto& x : apply(v)) {
    if (!is_zero(x)) return false;
  }
  return true;
}

RationalMatrix trace_form(const FiniteAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Rational> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = alg.trace_left(SparseVector{{k, Rational(1)}});
  RationalMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (const auto& [k, c] : alg.product(i, j)) s += c * t[k];
      gram(i, j) = s;
    }
  }
  return gram;
}

EchelonBasis ideal_span(const FiniteAlgebra& alg, const std::vector<SparseVector>& gens, std::size_t stop_at) {
  EchelonBasis span;
  const std::size_t n = alg.dim();
  const bool quick = alg.is_commutative() && alg.unit_index().has_value();
  for (const auto& g : gens) {
    if (span.dim() >= stop_at) break;
    if (span.contains(g)) continue;
    span.insert(g);
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector bj{{j, Rational(1)}};
      const SparseVector gb = alg.multiply(g, bj);
      span.insert(gb);
      if (!quick) {
        span.insert(alg.multiply(bj, g));
        for (std::size_t i = 0; i < n; ++i) span.insert(alg.multiply(SparseVector{{i, Rational(1)}}, gb));
      }
    }
  }
  return span;
}

std::vector<std::size_t> power_chain(const FiniteAlgebra& alg, const std::vector<SparseVector>& ideal) {
  std::vector<std::size_t> dims;
  EchelonBasis first;
  for (const auto& v : ideal) first.insert(v);
  dims.push_back(first.dim());
  const std::vector<SparseVector> basis = first.vectors();
  std::vector<SparseVector> factors = basis;
  if (alg.is_commutative() && alg.unit_index()) {
    // a small generating set of I as an ideal
    factors.clear();
    EchelonBasis span;
    for (const auto& r : basis) {
      if (span.contains(r)) continue;
      factors.push_back(r);
      for (std::size_t j = 0; j < alg.dim(); ++j) span.insert(alg.multiply(r, SparseVector{{j, Rational(1)}}));
      if (span.dim() == basis.size()) break;
    }
  }
  std::vector<SparseVector> current = basis;
  while (!current.empty()) {
    EchelonBasis next;
    const std::size_t cap = current.size();
    for (const auto& x : current) {
      for (const auto& g : factors) {
        next.insert(alg.multiply(x, g));
        if (next.dim() == cap) break;
      }
      if (next.dim() == cap) break;
    }
    dims.push_back(next.dim());
    if (next.dim() == cap) break;  // stalled: I^k = I^{k+1} != 0
    current = next.vectors();
  }
  return dims;
}

RadicalResult algebra_radical(const FiniteAlgebra& alg, bool check_associativity) {
  if (check_associativity) verify_associative(alg);
  RadicalResult res;
  const RationalMatrix gram = trace_form(alg);
  auto echelon = rref(gram);
  std::vector<SparseVector> rows;
  for (std::size_t r = 0; r < echelon.pivots.size(); ++r) rows.push_back(to_sparse(echelon.reduced.row(r)));
  res.quotient = QuotientMap(std::move(rows));
  for (auto& v : nullspace(gram)) res.basis.push_back(to_sparse(v));

  res.is_two_sided_ideal = true;
  for (const auto& r : res.basis) {
    for (std::size_t j = 0; j < alg.dim() && res.is_two_sided_ideal; ++j) {
      const SparseVector b{{j, Rational(1)}};
      if (!res.quotient.kills(alg.multiply(r, b)) || !res.quotient.kills(alg.multiply(b, r))) {
        res.is_two_sided_ideal = false;
      }
    }
    if (!res.is_two_sided_ideal) break;
  }

  res.power_dims = power_chain(alg, res.basis);
  // power_dims[k] is dim J^{k+1}
  if (res.power_dims.back() == 0) res.nilpotency_index = res.power_dims.size();
  return res;
}

}  // namespace gchar
