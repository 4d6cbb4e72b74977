#include "gchar/chainring/chainring.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "gchar/error.hpp"
#include "gchar/parse.hpp"

namespace gchar {

namespace {

Subset map_subset(const std::vector<std::size_t>& table, Subset s) {
  Subset out = 0;
  for (auto x : subset_elements(s)) {
    if (table[x] == Presentation::npos) fail(ErrorKind::InvalidArgument, "element outside the subgroup");
    out |= singleton(table[x]);
  }
  return out;
}

}  // namespace

Chain2::Chain2(const AbelianGroup& g, const Subgroup& h, const std::optional<std::vector<std::size_t>>& h_basis)
    : g_(g),
      h_(h),
      pi_(duality_projection(g, h, h_basis)),
      pres_(h_basis ? h.presentation(*h_basis) : h.presentation()),
      h_alg_(pres_.group, ContractionMode::ModEmpty) {
  if (h.owner() != g) fail(ErrorKind::MixedGroups, "subgroup of a different group");
  if (h.is_whole()) fail(ErrorKind::HNotProper, "the chain needs H strictly inside G");
  require_subset_group(g);
  if (g.size() > 16) fail(ErrorKind::InvalidArgument, "chain rings need |G| <= 16");
}

Subset Chain2::to_h_local(Subset b) const { return map_subset(pres_.from_local, b); }
Subset Chain2::from_h_local(Subset b) const { return map_subset(pres_.to_local, b); }

ChainLabel ChainLabel::full(const Chain2& c, Subset a) {
  if (a == 0) return {};
  if (a >> c.group().size()) fail(ErrorKind::InvalidArgument, "subset outside G");
  return {Kind::Full, a, c.pi_set(a)};
}

ChainLabel ChainLabel::lower(const Chain2& c, Subset b) {
  if (b == 0) return {};
  for (auto x : subset_elements(b)) {
    if (x >= c.group().size() || !c.sub().contains(x)) fail(ErrorKind::InvalidArgument, "lower label outside H");
  }
  return {Kind::Lower, b, 0};
}

ChainRingElement ChainRingElement::basis(const Chain2& c, const ChainLabel& l, const Rational& coef) {
  ChainRingElement x(c);
  x.add_term(l, coef);
  return x;
}

ChainRingElement ChainRingElement::one(const Chain2& c) {
  return basis(c, ChainLabel::full(c, singleton(c.group().identity())));
}

Rational ChainRingElement::coefficient(const ChainLabel& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ChainRingElement::add_term(const ChainLabel& l, const Rational& c) {
  if (l.kind == ChainLabel::Kind::Zero || gchar::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(l, c);
  if (inserted) return;
  it->second += c;
  if (gchar::is_zero(it->second)) terms_.erase(it);
}

void ChainRingElement::check_same(const ChainRingElement& o) const {
  if (chain_ != o.chain_) fail(ErrorKind::MixedChains, "elements of different chain rings");
}

ChainRingElement ChainRingElement::operator+(const ChainRingElement& o) const {
  check_same(o);
  ChainRingElement r = *this;
  for (const auto& [l, c] : o.terms_) r.add_term(l, c);
  return r;
}

ChainRingElement ChainRingElement::operator-(const ChainRingElement& o) const { return *this + o * Rational(-1); }

ChainRingElement ChainRingElement::operator*(const Rational& c) const {
  ChainRingElement r(chain_);
  if (gchar::is_zero(c)) return r;
  for (const auto& [l, v] : terms_) r.terms_.emplace(l, v * c);
  return r;
}

ChainRingElement ChainRingElement::operator*(const ChainRingElement& o) const { return chain_mul(*this, o); }

namespace {

// Product of two basis labels, with the chi_(empty,empty) part dropped.
void add_label_product(ChainRingElement& out, const Chain2& ch, const ChainLabel& x, const ChainLabel& y,
                       const Rational& coef) {
  using K = ChainLabel::Kind;
  const AbelianGroup& g = ch.group();
  if (x.kind == K::Full && y.kind == K::Full) {
    const Subset ab = subset_product(g, x.set, y.set);
    out.add_term(ChainLabel::full(ch, ab), coef);
    std::map<std::size_t, long> n;
    for (auto h : subset_elements(x.image))
      for (auto h2 : subset_elements(y.image)) ++n[g.mul(h, h2)];
    for (const auto& [c, count] : n)
      if (count > 1) out.add_term(ChainLabel::lower(ch, singleton(c)), coef * (count - 1));
    return;
  }
  if (x.kind == K::Lower && y.kind == K::Lower) {
    out.add_term(ChainLabel::lower(ch, subset_product(g, x.set, y.set)), coef);
    return;
  }
  const ChainLabel& full = x.kind == K::Full ? x : y;
  const ChainLabel& low = x.kind == K::Full ? y : x;
  for (auto h : subset_elements(full.image)) out.add_term(ChainLabel::lower(ch, subset_translate(g, h, low.set)), coef);
}

}  // namespace

ChainRingElement chain_mul(const ChainRingElement& x, const ChainRingElement& y) {
  if (x.chain() != y.chain()) fail(ErrorKind::MixedChains, "elements of different chain rings");
  ChainRingElement out(x.chain());
  for (const auto& [lx, cx] : x.terms())
    for (const auto& [ly, cy] : y.terms()) add_label_product(out, x.chain(), lx, ly, cx * cy);
  return out;
}

SparseVector ChainRingElement::coordinates() const {
  SparseVector v;
  for (const auto& [l, c] : terms_) {
    const std::size_t i = l.kind == ChainLabel::Kind::Full
                              ? static_cast<std::size_t>(l.set - 1)
                              : chain_.full_count() + static_cast<std::size_t>(chain_.to_h_local(l.set) - 1);
    v.emplace(i, c);
  }
  return v;
}

ChainLabel chain_label_at(const Chain2& c, std::size_t i) {
  if (i < c.full_count()) return ChainLabel::full(c, static_cast<Subset>(i + 1));
  if (i >= c.dim()) fail(ErrorKind::InvalidArgument, "coordinate index out of range");
  return ChainLabel::lower(c, c.from_h_local(static_cast<Subset>(i - c.full_count() + 1)));
}

ChainRingElement ChainRingElement::from_coordinates(const Chain2& c, const SparseVector& v) {
  ChainRingElement x(c);
  for (const auto& [i, coef] : v) x.add_term(chain_label_at(c, i), coef);
  return x;
}

std::string ChainRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<ChainLabel, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.kind != b.first.kind) return a.first.kind < b.first.kind;
    return subset_elements(a.first.set) < subset_elements(b.first.set);
  });
  std::string out;
  bool first = true;
  for (const auto& [l, c] : sorted) {
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    const Rational a = abs(c);
    if (a != 1) out += a.get_str() + "*";
    out += l.kind == ChainLabel::Kind::Full ? "full:" : "lower:";
    out += subset_string(chain_.group(), l.set);
  }
  return out;
}

ChainRingElement parse_chain_element(const Chain2& c, const std::string& text) {
  ChainRingElement r(c);
  for (const auto& [coef, label] : split_linear_combination(text)) {
    const auto colon = label.find(':');
    if (colon == std::string::npos) fail(ErrorKind::Parse, "expected full:{...} or lower:{...} in '" + label + "'");
    const std::string kind = trim(label.substr(0, colon));
    const Subset s = parse_subset(c.group(), label.substr(colon + 1));
    if (s == 0) fail(ErrorKind::Parse, "empty label; chi_(empty,empty) is zero");
    ChainLabel l;
    if (kind == "full") {
      l = ChainLabel::full(c, s);
    } else if (kind == "lower") {
      try {
        l = ChainLabel::lower(c, s);
      } catch (const Error& e) {
        fail(ErrorKind::Parse, e.what());
      }
    } else {
      fail(ErrorKind::Parse, "unknown label kind '" + kind + "'");
    }
    r.add_term(l, parse_rational(coef[0] == '+' ? coef.substr(1) : coef));
  }
  return r;
}

ChainRingElement f_map(const Chain2& c, Subset a) {
  const ChainLabel l = ChainLabel::full(c, a);
  ChainRingElement r = ChainRingElement::basis(c, l);
  for (auto h : subset_elements(l.image)) r.add_term(ChainLabel::lower(c, singleton(h)), -1);
  return r;
}

std::pair<ChainRingElement, RingElement> split_iso(const ChainRingElement& x) {
  const Chain2& c = x.chain();
  ChainRingElement t(c);
  RingElement h(c.h_algebra());
  for (const auto& [l, coef] : x.terms()) {
    if (l.kind == ChainLabel::Kind::Full) {
      t = t + f_map(c, l.set) * coef;
      for (auto e : subset_elements(l.image)) h.add_term(c.to_h_local(singleton(e)), coef);
    } else {
      h.add_term(c.to_h_local(l.set), coef);
    }
  }
  return {t, h};
}

ChainRingElement lift(const Chain2& c, const RingElement& h) {
  if (h.algebra() != c.h_algebra()) fail(ErrorKind::MixedGroups, "element of a different algebra");
  ChainRingElement r(c);
  for (const auto& [b, coef] : h.terms()) r.add_term(ChainLabel::lower(c, c.from_h_local(b)), coef);
  return r;
}

FiniteAlgebra chain_algebra(const Chain2& c) {
  return FiniteAlgebra(c.dim(), [&c](std::size_t i, std::size_t j) {
    ChainRingElement out(c);
    add_label_product(out, c, chain_label_at(c, i), chain_label_at(c, j), 1);
    return out.coordinates();
  });
}

namespace {

using Clock = std::chrono::steady_clock;

json chain_inputs(const Chain2& c) {
  return {{"group", c.group().to_string()}, {"sub", c.sub().to_string()}};
}

}  // namespace

Report verify_t_quotient(const Chain2& c) {
  const auto t0 = Clock::now();
  Report rep;
  rep.inputs = chain_inputs(c);
  const AbelianGroup& g = c.group();
  const FiniteAlgebra fa = chain_algebra(c);

  EchelonBasis t_span;
  for (Subset a = 1; a <= full_subset(g.size()); ++a) t_span.insert(f_map(c, a).coordinates());

  // f(chi_A - chi_(gN)) over coset covers, together with f(chi_G)
  std::vector<SparseVector> gens;
  for (Subset a = 1; a <= full_subset(g.size()); ++a) {
    const auto [x, n] = coset_cover(g, a);
    const Subset cover = subset_translate(g, x, subset_of(n.elements()));
    const SparseVector v = (f_map(c, a) - f_map(c, cover)).coordinates();
    if (!v.empty()) gens.push_back(v);
  }
  gens.push_back(f_map(c, full_subset(g.size())).coordinates());
  const EchelonBasis ideal = ideal_span(fa, gens);

  std::size_t ideal_outside_t = 0;
  for (const auto& v : ideal.vectors())
    if (!t_span.contains(v)) ++ideal_outside_t;

  const std::size_t target = quotient_dimension_target(g);
  rep.add("t_dimension", t_span.dim() == c.full_count(), c.full_count(), t_span.dim());
  rep.add("ideal_inside_t", ideal_outside_t == 0, 0, ideal_outside_t);
  rep.add("quotient_dimension", t_span.dim() - ideal.dim() == target, target, t_span.dim() - ideal.dim());

  // unit images prod (f(chi_N) - f(chi_N')) over minimal N' > N
  std::vector<ChainRingElement> units;
  std::vector<std::string> names;
  const ChainRingElement t_one = f_map(c, singleton(g.identity()));
  for (const auto& n : enumerate_subgroups(g)) {
    if (n.is_whole()) continue;
    ChainRingElement u = t_one;
    const Subset sn = subset_of(n.elements());
    for (const auto& l : minimal_overgroups(g, n)) u = u * (f_map(c, sn) - f_map(c, subset_of(l.elements())));
    units.push_back(u);
    names.push_back(n.to_string());
  }
  auto in_ideal = [&](const ChainRingElement& x) { return ideal.contains(x.coordinates()); };
  std::size_t not_idem = 0, not_orth = 0, vanishing = 0;
  ChainRingElement sum(c);
  for (std::size_t i = 0; i < units.size(); ++i) {
    sum = sum + units[i];
    if (!in_ideal(units[i] * units[i] - units[i])) ++not_idem;
    if (in_ideal(units[i])) ++vanishing;
    for (std::size_t j = i + 1; j < units.size(); ++j)
      if (!in_ideal(units[i] * units[j])) ++not_orth;
  }
  rep.add("unit_images_idempotent", not_idem == 0, 0, not_idem);
  rep.add("unit_images_orthogonal", not_orth == 0, 0, not_orth);
  rep.add("unit_images_nonzero", vanishing == 0, 0, vanishing);
  rep.add("unit_images_sum_to_one", in_ideal(sum - t_one), true, in_ideal(sum - t_one));

  rep.result = {{"t_dim", t_span.dim()},
                {"ideal_dim", ideal.dim()},
                {"quotient_dim", t_span.dim() - ideal.dim()},
                {"quotient_target", target},
                {"unit_images", names}};
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

Report verify_lower_ideal(const Chain2& c) {
  const auto t0 = Clock::now();
  Report rep;
  rep.inputs = chain_inputs(c);
  const FiniteAlgebra fa = chain_algebra(c);
  const CharAlgebra g_alg(c.group(), ContractionMode::ModEmpty);
  const FiniteAlgebra ga = g_alg.finite_algebra();
  const std::size_t nf = c.full_count();
  std::size_t escaping = 0, mismatched = 0;
  for (std::size_t i = 0; i < fa.dim(); ++i)
    for (std::size_t j = 0; j < fa.dim(); ++j) {
      const SparseVector& p = fa.product(i, j);
      if (i >= nf || j >= nf) {
        if (!p.empty() && p.begin()->first < nf) ++escaping;
        continue;
      }
      SparseVector upper;
      for (const auto& [k, v] : p)
        if (k < nf) upper.emplace(g_alg.index_of(chain_label_at(c, k).set), v);
      SparseVector want;
      for (const auto& [k, v] : ga.product(g_alg.index_of(static_cast<Subset>(i + 1)),
                                           g_alg.index_of(static_cast<Subset>(j + 1))))
        want.emplace(k, v);
      if (upper != want) ++mismatched;
    }
  rep.add("lower_span_is_ideal", escaping == 0, 0, escaping, "products with a lower factor leaving the span");
  rep.add("quotient_matches_char_algebra", mismatched == 0, 0, mismatched);
  rep.result = {{"dim", fa.dim()}, {"lower_dim", c.lower_count()}, {"quotient_dim", nf}};
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

Report verify_chain_structure(const Chain2& c) {
  const auto t0 = Clock::now();
  Report rep;
  rep.inputs = chain_inputs(c);
  const std::size_t d = c.dim();
  std::vector<ChainRingElement> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(ChainRingElement::basis(c, chain_label_at(c, i)));

  const ChainRingElement e = ChainRingElement::basis(c, ChainLabel::lower(c, singleton(c.group().identity())));
  std::size_t not_central = 0;
  for (const auto& x : basis)
    if (e * x != x * e) ++not_central;
  rep.add("e_idempotent", e * e == e, e.to_string(), (e * e).to_string());
  rep.add("e_central", not_central == 0, 0, not_central);

  std::size_t not_mult = 0, not_comm = 0, not_reassembled = 0;
  std::vector<std::pair<ChainRingElement, RingElement>> splits;
  for (const auto& x : basis) {
    splits.push_back(split_iso(x));
    if (splits.back().first + lift(c, splits.back().second) != x) ++not_reassembled;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const ChainRingElement p = basis[i] * basis[j];
      if (j > i && p != basis[j] * basis[i]) ++not_comm;
      const auto s = split_iso(p);
      if (s.first != splits[i].first * splits[j].first || s.second != splits[i].second * splits[j].second)
        ++not_mult;
    }
  rep.add("split_reassembly", not_reassembled == 0, 0, not_reassembled);
  rep.add("split_multiplicative", not_mult == 0, 0, not_mult);
  rep.add("commutative", not_comm == 0, 0, not_comm);

  // associativity: every triple when small, a fixed sample otherwise
  std::size_t not_assoc = 0, triples = 0;
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    ++triples;
    if ((basis[i] * basis[j]) * basis[k] != basis[i] * (basis[j] * basis[k])) ++not_assoc;
  };
  if (d <= 40) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) check(i, j, k);
  } else {
    std::mt19937 rng(0);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    for (int t = 0; t < 5000; ++t) check(pick(rng), pick(rng), pick(rng));
  }
  rep.add("associative", not_assoc == 0, 0, not_assoc);

  std::size_t pi_bad = 0;
  const Subset full = full_subset(c.group().size());
  if (c.group().size() <= 8) {
    for (Subset a = 1; a <= full; ++a)
      for (Subset b = a; b <= full; ++b)
        if (c.pi_set(subset_product(c.group(), a, b)) != subset_product(c.group(), c.pi_set(a), c.pi_set(b))) ++pi_bad;
    rep.add("pi_multiplicative_on_subsets", pi_bad == 0, 0, pi_bad);
  }
  rep.result = {{"dim", d}, {"triples_checked", triples}};
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

std::set<std::pair<std::size_t, std::size_t>> c_set(unsigned n, unsigned nm) {
  if (n == 0 || nm == 0 || nm % n != 0) fail(ErrorKind::InvalidArgument, "c_set needs n | nm");
  if (nm > 20) fail(ErrorKind::InvalidArgument, "c_set enumerates subsets of Z_nm; nm <= 20");
  const AbelianGroup g({nm});
  const Subgroup h = Subgroup::generated(g, {(nm / n) % nm});
  const auto pi = duality_projection(g, h);
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (Subset a = 1; a <= full_subset(nm); ++a) out.emplace(subset_size(a), subset_size(subset_image(pi, a)));
  return out;
}

}  // namespace gchar
