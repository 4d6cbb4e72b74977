#include "gchar/exactmath/sparse.hpp"

namespace gchar {

void add_scaled(SparseVector& v, const SparseVector& w, const Rational& c) {
  if (is_zero(c)) return;
  for (const auto& [idx, val] : w) {
    auto [it, fresh] = v.try_emplace(idx, c * val);
    if (!fresh) {
      it->second += c * val;
      if (is_zero(it->second)) v.erase(it);
    }
  }
}

SparseVector scaled(const SparseVector& v, const Rational& c) {
  SparseVector out;
  if (is_zero(c)) return out;
  for (const auto& [idx, val] : v) out.emplace(idx, val * c);
  return out;
}

SparseVector difference(const SparseVector& a, const SparseVector& b) {
  SparseVector out = a;
  add_scaled(out, b, Rational(-1));
  return out;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t dim) {
  std::vector<Rational> out(dim, Rational(0));
  for (const auto& [idx, val] : v) out.at(idx) = val;
  return out;
}

SparseVector to_sparse(const std::vector<Rational>& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) out.emplace(i, v[i]);
  }
  return out;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t pivot = it->first;
    const Rational c = it->second;
    add_scaled(v, row->second, -c);
    it = v.upper_bound(pivot);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t pivot = v.begin()->first;
  const Rational inv = Rational(1) / v.begin()->second;
  for (auto& [idx, val] : v) val *= inv;
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<SparseVector> EchelonBasis::vectors() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(row);
  return out;
}

}  // namespace gchar
