#include "gchar/charring/charring.hpp"

#include <algorithm>
#include <map>

#include "gchar/error.hpp"
#include "gchar/parse.hpp"

namespace gchar {

std::string to_string(ContractionMode m) {
  return m == ContractionMode::ModEmpty ? "mod-empty" : "mod-empty-g";
}

ContractionMode parse_mode(const std::string& text) {
  const std::string t = trim(text);
  if (t == "mod-empty") return ContractionMode::ModEmpty;
  if (t == "mod-empty-g") return ContractionMode::ModEmptyAndG;
  fail(ErrorKind::Parse, "unknown mode '" + t + "' (expected mod-empty or mod-empty-g)");
}

CountedProduct subset_product_counted(const AbelianGroup& g, Subset a, Subset b) {
  CountedProduct out;
  std::vector<unsigned long> m(g.size(), 0);
  const auto ea = subset_elements(a);
  const auto eb = subset_elements(b);
  for (auto x : ea)
    for (auto y : eb) ++m[g.mul(x, y)];
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (m[x] == 0) continue;
    out.set |= singleton(x);
    out.collisions += Integer(m[x]) * (m[x] - 1) / 2;
  }
  return out;
}

CharAlgebra::CharAlgebra(const AbelianGroup& g, ContractionMode mode) : group_(g), mode_(mode) {
  require_subset_group(g);
  if (g.size() > 16) fail(ErrorKind::InvalidArgument, "character rings are limited to |G| <= 16");
  full_ = full_subset(g.size());
  for (Subset s = 1; s <= full_; ++s) {
    if (!is_contracted(s)) labels_.push_back(s);
  }
}

std::size_t CharAlgebra::index_of(Subset s) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), s);
  if (it == labels_.end() || *it != s) fail(ErrorKind::InvalidArgument, "label is contracted or out of range");
  return static_cast<std::size_t>(it - labels_.begin());
}

FiniteAlgebra CharAlgebra::finite_algebra() const {
  return FiniteAlgebra(dim(), [this](std::size_t i, std::size_t j) {
    const Subset c = subset_product(group_, labels_[i], labels_[j]);
    if (is_contracted(c)) return SparseVector{};
    return SparseVector{{index_of(c), Rational(1)}};
  });
}

RingElement RingElement::chi(const CharAlgebra& alg, Subset s, const Rational& c) {
  RingElement x(alg);
  x.add_term(s, c);
  return x;
}

Rational RingElement::coefficient(Subset s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RingElement::add_term(Subset s, const Rational& c) {
  if (gchar::is_zero(c) || alg_.is_contracted(s)) return;
  if ((s & ~alg_.full()) != 0) fail(ErrorKind::InvalidArgument, "label outside the group");
  auto [it, fresh] = terms_.try_emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (gchar::is_zero(it->second)) terms_.erase(it);
  }
}

void RingElement::check_same(const RingElement& o) const {
  if (alg_ != o.alg_) fail(ErrorKind::MixedGroups, "elements of different character algebras");
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same(o);
  RingElement r = *this;
  for (const auto& [s, c] : o.terms_) r.add_term(s, c);
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_same(o);
  RingElement r = *this;
  for (const auto& [s, c] : o.terms_) r.add_term(s, -c);
  return r;
}

RingElement RingElement::operator*(const Rational& c) const {
  RingElement r(alg_);
  for (const auto& [s, v] : terms_) r.add_term(s, v * c);
  return r;
}

RingElement RingElement::operator*(const RingElement& o) const { return mul(*this, o); }

RingElement mul(const RingElement& x, const RingElement& y) {
  if (x.algebra() != y.algebra()) fail(ErrorKind::MixedGroups, "elements of different character algebras");
  RingElement r(x.algebra());
  const AbelianGroup& g = x.algebra().group();
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r.add_term(subset_product(g, a, b), ca * cb);
  return r;
}

SparseVector RingElement::coordinates() const {
  SparseVector v;
  for (const auto& [s, c] : terms_) v.emplace(alg_.index_of(s), c);
  return v;
}

RingElement RingElement::from_coordinates(const CharAlgebra& alg, const SparseVector& v) {
  RingElement r(alg);
  for (const auto& [i, c] : v) r.add_term(alg.label(i), c);
  return r;
}

std::vector<std::pair<Subset, Rational>> RingElement::sorted_terms() const {
  std::vector<std::pair<Subset, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return subset_elements(a.first) < subset_elements(b.first);
  });
  return out;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : sorted_terms()) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (a != 1) out += a.get_str() + "*";
    out += subset_string(alg_.group(), s);
  }
  return out;
}

RingElement parse_ring_element(const CharAlgebra& alg, const std::string& text) {
  RingElement r(alg);
  for (const auto& [coef, label] : split_linear_combination(text)) {
    const Subset s = parse_subset(alg.group(), label);
    r.add_term(s, parse_rational(coef[0] == '+' ? coef.substr(1) : coef));
  }
  return r;
}

namespace {

bool is_subgroup_subset(const AbelianGroup& g, Subset s) {
  return subset_has(s, g.identity()) && subset_product(g, s, s) == s;
}

// A, A^2, ... until the first repeat; returns the list of distinct powers.
std::vector<Subset> power_sequence(const AbelianGroup& g, Subset a, std::size_t* repeat_from) {
  if (a == 0) fail(ErrorKind::InvalidArgument, "powers of the empty set");
  std::vector<Subset> seq;
  std::map<Subset, std::size_t> seen;
  Subset p = a;
  while (!seen.count(p)) {
    seen.emplace(p, seq.size());
    seq.push_back(p);
    p = subset_product(g, p, a);
  }
  if (repeat_from) *repeat_from = seen[p];
  return seq;
}

}  // namespace

Subgroup n_of(const AbelianGroup& g, Subset a) {
  for (Subset p : power_sequence(g, a, nullptr)) {
    if (is_subgroup_subset(g, p)) return Subgroup(g, subset_elements(p));
  }
  fail(ErrorKind::InvalidArgument, "no idempotent among the powers");
}

unsigned n_exponent(const AbelianGroup& g, Subset a) {
  const auto seq = power_sequence(g, a, nullptr);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (is_subgroup_subset(g, seq[k])) return static_cast<unsigned>(k + 1);
  }
  fail(ErrorKind::InvalidArgument, "no idempotent among the powers");
}

std::pair<std::size_t, Subgroup> coset_cover(const AbelianGroup& g, Subset a) {
  Subgroup n = n_of(g, a);
  QuotientGroup q(g, n);
  const std::size_t first = subset_elements(a).front();
  const std::size_t rep = q.representatives()[q.coset_of(first)];
  for (auto x : subset_elements(a)) {
    if (q.coset_of(x) != q.coset_of(first)) fail(ErrorKind::InvalidArgument, "subset not inside one coset of n(A)");
  }
  return {rep, std::move(n)};
}

std::vector<RingElement> radical_generators(const CharAlgebra& alg) {
  if (alg.mode() != ContractionMode::ModEmptyAndG) {
    fail(ErrorKind::InvalidArgument, "radical generators live in the mod-empty-g algebra");
  }
  const AbelianGroup& g = alg.group();
  std::vector<RingElement> out;
  for (Subset a = 1; a <= alg.full(); ++a) {
    auto [x, n] = coset_cover(g, a);
    const Subset coset = subset_translate(g, x, subset_of(n.elements()));
    RingElement r = RingElement::chi(alg, coset) - RingElement::chi(alg, a);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::size_t> omega_map(const Subgroup& h) {
  QuotientGroup q(h.owner(), h);
  const Presentation p = q.presentation();
  std::vector<std::size_t> map(h.owner().size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = p.from_local[q.coset_of(x)];
  return map;
}

CharAlgebra omega_target(const Subgroup& h) {
  QuotientGroup q(h.owner(), h);
  return CharAlgebra(q.presentation().group, ContractionMode::ModEmpty);
}

RingElement omega(const Subgroup& h, const RingElement& x) {
  if (x.algebra().mode() != ContractionMode::ModEmpty) {
    fail(ErrorKind::InvalidArgument, "omega is defined on the mod-empty algebra");
  }
  if (x.algebra().group() != h.owner()) fail(ErrorKind::MixedGroups, "subgroup of a different group");
  const auto map = omega_map(h);
  RingElement r(omega_target(h));
  for (const auto& [s, c] : x.terms()) r.add_term(subset_image(map, s), c);
  return r;
}

RingElement psi(const CharAlgebra& alg, const Subgroup& h) {
  if (h.owner() != alg.group()) fail(ErrorKind::MixedGroups, "subgroup of a different group");
  if (h.is_whole()) fail(ErrorKind::HNotProper, "psi(G,H) needs a proper subgroup H");
  const Subset sh = subset_of(h.elements());
  RingElement r = RingElement::one(alg);
  for (const auto& l : minimal_overgroups(alg.group(), h)) {
    r = r * (RingElement::chi(alg, sh) - RingElement::chi(alg, subset_of(l.elements())));
  }
  return r;
}

RingElement check_of(const CharAlgebra& alg, Subset a) {
  if (a == 0) fail(ErrorKind::InvalidArgument, "check of the empty set");
  const Rational w(1, static_cast<unsigned long>(subset_size(a)));
  RingElement r(alg);
  for (auto x : subset_elements(a)) r.add_term(singleton(x), w);
  return r;
}

RingElement epsilon_check(const CharAlgebra& alg, const Subgroup& n) {
  if (n.owner() != alg.group()) fail(ErrorKind::MixedGroups, "subgroup of a different group");
  RingElement r = check_of(alg, subset_of(n.elements()));
  const RingElement one = RingElement::one(alg);
  for (const auto& l : minimal_overgroups(alg.group(), n)) r = r * (one - check_of(alg, subset_of(l.elements())));
  return r;
}

std::vector<PrimitiveIdempotent> primitive_central_idempotents(const CharAlgebra& alg) {
  if (alg.mode() != ContractionMode::ModEmpty) {
    fail(ErrorKind::InvalidArgument, "primitive central idempotents are listed in the mod-empty algebra");
  }
  const AbelianGroup& g = alg.group();
  const auto subs = enumerate_subgroups(g);
  std::vector<PrimitiveIdempotent> out;
  for (const auto& n : subs) {
    if (!QuotientGroup(g, n).cyclic_generator()) continue;
    const RingElement eps = epsilon_check(alg, n);
    for (const auto& h : subs) {
      if (!h.is_subgroup_of(n)) continue;
      RingElement e = h.is_whole() ? RingElement::chi(alg, alg.full()) : psi(alg, h) * eps;
      out.push_back({h, n, std::move(e)});
    }
  }
  return out;
}

std::pair<unsigned, unsigned> integrality_witness(const AbelianGroup& g, Subset a) {
  std::size_t from = 0;
  const auto seq = power_sequence(g, a, &from);
  return {static_cast<unsigned>(from + 1), static_cast<unsigned>(seq.size() + 1)};
}

std::size_t quotient_dimension_target(const AbelianGroup& g) {
  std::size_t total = 0;
  for (const auto& h : enumerate_subgroups(g)) {
    if (!h.is_whole()) total += g.size() / h.size();
  }
  return total;
}

}  // namespace gchar
