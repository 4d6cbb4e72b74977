#include "gchar/classfn/classfn.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "gchar/error.hpp"
#include "gchar/parse.hpp"

namespace gchar {

// ---- chains

SubgroupChain::SubgroupChain(const AbelianGroup& g, std::vector<Subgroup> levels)
    : g_(g), levels_(std::move(levels)), layer_(g.size(), npos) {
  if (levels_.empty() || !levels_.front().is_trivial()) fail(ErrorKind::InvalidArgument, "chain must start at 1");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].owner() != g) fail(ErrorKind::MixedGroups, "chain level in a different group");
    if (i > 0 && !levels_[i - 1].is_subgroup_of(levels_[i])) fail(ErrorKind::InvalidArgument, "chain is not increasing");
  }
  for (std::size_t i = levels_.size(); i-- > 0;)
    for (auto x : levels_[i].elements()) layer_[x] = i;
}

SubgroupChain SubgroupChain::from_levels(const AbelianGroup& g, std::vector<Subgroup> levels) {
  return SubgroupChain(g, std::move(levels));
}

SubgroupChain SubgroupChain::from_intermediate(const AbelianGroup& g, const std::vector<Subgroup>& mids) {
  if (g.size() == 1) fail(ErrorKind::InvalidArgument, "chains need a nontrivial group");
  std::vector<Subgroup> levels{Subgroup::trivial(g)};
  for (const auto& m : mids) levels.push_back(m);
  levels.push_back(Subgroup::whole(g));
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (levels[i].size() <= levels[i - 1].size()) fail(ErrorKind::InvalidArgument, "chain is not strictly increasing");
  return SubgroupChain(g, std::move(levels));
}

SubgroupChain SubgroupChain::restrict_to(const Subgroup& h) const {
  if (h.owner() != g_) fail(ErrorKind::MixedGroups, "subgroup of a different group");
  std::vector<Subgroup> levels;
  for (const auto& l : levels_) {
    std::vector<std::size_t> common;
    for (auto x : l.elements())
      if (h.contains(x)) common.push_back(x);
    levels.emplace_back(g_, common);
  }
  return SubgroupChain(g_, std::move(levels));
}

std::string SubgroupChain::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i) out += " < ";
    out += levels_[i].to_string();
  }
  return out;
}

std::vector<SubgroupChain> all_subgroup_chains(const AbelianGroup& g) {
  std::vector<Subgroup> mids;
  for (const auto& s : enumerate_subgroups(g))
    if (!s.is_trivial() && !s.is_whole()) mids.push_back(s);
  std::vector<SubgroupChain> out;
  std::vector<Subgroup> cur;
  std::function<void()> walk = [&] {
    out.push_back(SubgroupChain::from_intermediate(g, cur));
    for (const auto& m : mids) {
      if (!cur.empty() && !(cur.back().is_subgroup_of(m) && cur.back() != m)) continue;
      cur.push_back(m);
      walk();
      cur.pop_back();
    }
  };
  walk();
  return out;
}

SubgroupChain parse_chain(const AbelianGroup& g, const std::string& text) {
  std::vector<Subgroup> mids;
  if (!trim(text).empty()) {
    for (const auto& level : split_top_level(text, '|')) mids.push_back(parse_subgroup(g, trim(level)));
  }
  try {
    return SubgroupChain::from_intermediate(g, mids);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) fail(ErrorKind::Parse, std::string("chain: ") + e.what());
    throw;
  }
}

// ---- triangular matrices

TriangularMatrix::TriangularMatrix(std::size_t size, unsigned order)
    : size_(size), order_(order), entries_(size * (size + 1) / 2, Cyclotomic(order)) {}

std::size_t TriangularMatrix::index(std::size_t i, std::size_t j) const {
  if (i > j || j >= size_) fail(ErrorKind::InvalidArgument, "entry outside the upper triangle");
  // row i holds entries (i, i..size-1)
  return i * size_ - i * (i - 1) / 2 + (j - i);
}

void TriangularMatrix::check_shape(const TriangularMatrix& o) const {
  if (size_ != o.size_ || order_ != o.order_) fail(ErrorKind::ShapeMismatch, "triangular matrices of different shape");
}

TriangularMatrix TriangularMatrix::operator+(const TriangularMatrix& o) const {
  check_shape(o);
  TriangularMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
  return r;
}

TriangularMatrix TriangularMatrix::operator-(const TriangularMatrix& o) const {
  check_shape(o);
  TriangularMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
  return r;
}

TriangularMatrix TriangularMatrix::operator*(const Rational& c) const {
  TriangularMatrix r = *this;
  for (auto& e : r.entries_) e = e * c;
  return r;
}

TriangularMatrix TriangularMatrix::hadamard(const TriangularMatrix& o) const {
  check_shape(o);
  TriangularMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] *= o.entries_[k];
  return r;
}

bool TriangularMatrix::operator==(const TriangularMatrix& o) const {
  return size_ == o.size_ && order_ == o.order_ && entries_ == o.entries_;
}

bool TriangularMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

json TriangularMatrix::to_json() const {
  json rows = json::array();
  for (std::size_t i = 0; i < size_; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < size_; ++j) {
      if (j < i) {
        row.push_back(nullptr);
        continue;
      }
      json coeffs = json::array();
      for (const auto& c : at(i, j).coefficients()) coeffs.push_back(c.get_str());
      row.push_back(std::move(coeffs));
    }
    rows.push_back(std::move(row));
  }
  return {{"order", order_}, {"entries", rows}};
}

std::string TriangularMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < size_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < size_; ++j) {
      if (j) out += ", ";
      out += j < i ? "." : at(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

// ---- class functions

GenClassFunction::GenClassFunction(const SubgroupChain& chain)
    : chain_(chain), values_(chain.group().size(), TriangularMatrix(chain.d() + 1, chain.field_order())) {}

void GenClassFunction::check_same(const GenClassFunction& o) const {
  if (chain_ != o.chain_) fail(ErrorKind::MixedChains, "class functions on different chains");
}

GenClassFunction GenClassFunction::operator+(const GenClassFunction& o) const {
  check_same(o);
  GenClassFunction r = *this;
  for (std::size_t x = 0; x < values_.size(); ++x) r.values_[x] = values_[x] + o.values_[x];
  return r;
}

GenClassFunction GenClassFunction::operator-(const GenClassFunction& o) const {
  check_same(o);
  GenClassFunction r = *this;
  for (std::size_t x = 0; x < values_.size(); ++x) r.values_[x] = values_[x] - o.values_[x];
  return r;
}

GenClassFunction GenClassFunction::operator*(const Rational& c) const {
  GenClassFunction r = *this;
  for (auto& v : r.values_) v = v * c;
  return r;
}

GenClassFunction GenClassFunction::hadamard(const GenClassFunction& o) const {
  check_same(o);
  GenClassFunction r = *this;
  for (std::size_t x = 0; x < values_.size(); ++x) r.values_[x] = values_[x].hadamard(o.values_[x]);
  return r;
}

bool GenClassFunction::operator==(const GenClassFunction& o) const {
  return chain_ == o.chain_ && values_ == o.values_;
}

bool GenClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const TriangularMatrix& m) { return m.is_zero(); });
}

bool GenClassFunction::respects_zero_blocks() const {
  for (std::size_t x = 0; x < values_.size(); ++x) {
    const std::size_t layer = chain_.layer(x);
    const std::size_t n = chain_.d() + 1;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = j; l < n; ++l)
        if ((layer == SubgroupChain::npos || j < layer) && !values_[x].at(j, l).is_zero()) return false;
  }
  return true;
}

std::vector<Rational> GenClassFunction::flatten() const {
  std::vector<Rational> out;
  const std::size_t n = chain_.d() + 1;
  for (const auto& v : values_)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = j; l < n; ++l)
        for (const auto& c : v.at(j, l).coefficients()) out.push_back(c);
  return out;
}

json GenClassFunction::to_json() const {
  json values = json::object();
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (chain_.layer(x) == SubgroupChain::npos) continue;
    values[chain_.group().element_string(x)] = values_[x].to_json()["entries"];
  }
  return {{"chain", chain_.to_string()}, {"order", chain_.field_order()}, {"values", values}};
}

// ---- constructions

Cyclotomic character_value(const AbelianGroup& g, std::size_t a, std::size_t x) {
  const unsigned n = g.exponent();
  const Rational k = g.pairing(a, x) * n;
  return Cyclotomic::root_of_unity(n, k.get_num().get_si());
}

GenClassFunction constant_cn(const SubgroupChain& chain, const Rational& n) {
  GenClassFunction f(chain);
  const std::size_t size = chain.d() + 1;
  for (std::size_t x = 0; x < chain.group().size(); ++x) {
    const std::size_t layer = chain.layer(x);
    if (layer == SubgroupChain::npos) continue;
    for (std::size_t j = layer; j < size; ++j)
      for (std::size_t l = j; l < size; ++l) f.at(x).at(j, l) = Cyclotomic(chain.field_order(), n);
  }
  return f;
}

namespace {

// One label per distinct restriction of the characters T_a (a in labels) to k.
std::vector<std::size_t> distinct_restrictions(const AbelianGroup& g, Subset labels, const Subgroup& k) {
  std::set<std::vector<Rational>> seen;
  std::vector<std::size_t> out;
  for (auto a : subset_elements(labels)) {
    std::vector<Rational> sig;
    for (auto y : k.elements()) sig.push_back(g.pairing(a, y));
    if (seen.insert(sig).second) out.push_back(a);
  }
  return out;
}

void require_d(const SubgroupChain& chain, std::size_t d) {
  if (chain.d() != d) {
    fail(ErrorKind::ChainLengthMismatch,
         "expected a chain of length " + std::to_string(d) + ", got " + std::to_string(chain.d()));
  }
}

}  // namespace

GenClassFunction glider_character(const SubgroupChain& chain, std::size_t e, Subset labels) {
  if (e > chain.d()) fail(ErrorKind::InvalidArgument, "essential length above the chain length");
  if (labels == 0) fail(ErrorKind::InvalidArgument, "glider needs at least one character");
  const AbelianGroup& g = chain.group();
  const unsigned order = chain.field_order();
  GenClassFunction f(chain);
  // distinct characters on each level, evaluated lazily per entry
  std::vector<std::vector<std::size_t>> reps;
  for (std::size_t m = 0; m <= e; ++m) reps.push_back(distinct_restrictions(g, labels, chain.level(m)));
  for (std::size_t x = 0; x < g.size(); ++x) {
    const std::size_t layer = chain.layer(x);
    if (layer == SubgroupChain::npos) continue;
    for (std::size_t i = layer; i <= e; ++i)
      for (std::size_t j = i; j <= e; ++j) {
        const std::size_t m = std::max(i, e - j);
        Cyclotomic v(order);
        for (auto a : reps[m]) v += character_value(g, a, x);
        f.at(x).at(i, j) = v;
      }
  }
  return f;
}

GenClassFunction glider_char_subset(const SubgroupChain& chain, Subset a) {
  require_d(chain, 1);
  if (a == 0) return glider_character(chain, 0, singleton(chain.group().identity()));
  return glider_character(chain, 1, a);
}

GenClassFunction glider_char_chain2(const SubgroupChain& chain, Subset a) {
  require_d(chain, 2);
  if (a == 0) return glider_character(chain, 0, singleton(chain.group().identity()));
  return glider_character(chain, 2, a);
}

TriangularMatrix inner_product(const GenClassFunction& f, const GenClassFunction& g) {
  if (f.chain() != g.chain()) fail(ErrorKind::MixedChains, "class functions on different chains");
  const SubgroupChain& chain = f.chain();
  const std::size_t n = chain.d() + 1;
  TriangularMatrix out(n, chain.field_order());
  for (std::size_t i = 0; i < n; ++i) {
    const Subgroup& gi = chain.level(i);
    const Rational w = make_rational(1, static_cast<long>(gi.size()));
    for (std::size_t j = i; j < n; ++j) {
      Cyclotomic s(chain.field_order());
      for (auto x : gi.elements()) s += f.at(x).at(i, j) * g.at(x).at(i, j).conj();
      out.at(i, j) = s * w;
    }
  }
  return out;
}

GenClassFunction induce(const GenClassFunction& f, const SubgroupChain& target) {
  const Subgroup& h = f.chain().top();
  if (f.chain() != target.restrict_to(h)) fail(ErrorKind::ChainMisaligned, "source chain is not H cap G_i");
  const AbelianGroup& g = target.group();
  const SubgroupChain& hc = f.chain();
  const std::size_t n = target.d() + 1;
  const Rational w = make_rational(1, static_cast<long>(h.size()));
  GenClassFunction out(target);
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (target.layer(x) == SubgroupChain::npos) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Cyclotomic s(target.field_order());
        for (std::size_t g0 = 0; g0 < g.size(); ++g0) {
          const std::size_t y = g.mul(g.mul(g.inv(g0), x), g0);
          if (hc.level(i).contains(y)) s += f.at(y).at(i, j);
        }
        out.at(x).at(i, j) = s * w;
      }
  }
  return out;
}

GenClassFunction chi_cyclic_tilde(const Subgroup& h, const SubgroupChain& chain) {
  if (!h.cyclic_generator()) fail(ErrorKind::NotCyclic, "chi~ needs a cyclic subgroup, got " + h.to_string());
  const SubgroupChain hc = chain.restrict_to(h);
  GenClassFunction f(hc);
  const std::size_t n = hc.d() + 1;
  const Cyclotomic value(hc.field_order(), Rational(static_cast<long>(h.size())));
  for (auto y : h.elements()) {
    if (Subgroup::generated(chain.group(), {y}) != h) continue;
    for (std::size_t j = hc.layer(y); j < n; ++j)
      for (std::size_t l = j; l < n; ++l) f.at(y).at(j, l) = value;
  }
  return f;
}

std::vector<Subgroup> cyclic_subgroups(const AbelianGroup& g) {
  std::vector<Subgroup> out;
  for (const auto& s : enumerate_subgroups(g))
    if (s.cyclic_generator()) out.push_back(s);
  return out;
}

GenClassFunction artin_sum(const SubgroupChain& chain) {
  GenClassFunction sum(chain);
  for (const auto& h : cyclic_subgroups(chain.group())) sum = sum + induce(chi_cyclic_tilde(h, chain), chain);
  return sum;
}

Report artin_check(const SubgroupChain& chain) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.inputs = {{"group", chain.group().to_string()}, {"chain", chain.to_string()}};
  const GenClassFunction sum = artin_sum(chain);
  const GenClassFunction c = constant_cn(chain, Rational(static_cast<long>(chain.group().size())));
  std::size_t bad = 0;
  json first = nullptr;
  for (std::size_t x = 0; x < chain.group().size(); ++x) {
    if (sum.at(x) != c.at(x)) {
      ++bad;
      if (first.is_null())
        first = {{"element", chain.group().element_string(x)},
                 {"sum", sum.at(x).to_string()},
                 {"c", c.at(x).to_string()}};
    }
  }
  rep.add("sum_of_induced_equals_c", bad == 0, 0, bad, "elements where the entrywise identity fails");
  if (!first.is_null()) rep.note("first_mismatch", first);
  rep.add("zero_blocks", sum.respects_zero_blocks(), true, sum.respects_zero_blocks());
  rep.result = {{"cyclic_subgroups", cyclic_subgroups(chain.group()).size()},
                {"identity_value", sum.at(chain.group().identity()).to_string()}};
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

json ArtinCertificate::to_json() const {
  json t = json::array();
  for (const auto& term : terms)
    t.push_back({{"subgroup", term.subgroup}, {"source", term.source}, {"coefficient", term.coefficient.get_str()}});
  return {{"terms", t}, {"family_size", family_size}};
}

ArtinCertificate artin_decompose(const GenClassFunction& f) {
  const SubgroupChain& chain = f.chain();
  const AbelianGroup& g = chain.group();
  if (chain.top() != Subgroup::whole(g)) fail(ErrorKind::InvalidArgument, "decomposition needs a chain ending at G");
  const GenClassFunction target = constant_cn(chain, Rational(static_cast<long>(g.size()))).hadamard(f);

  std::vector<GenClassFunction> family;
  std::vector<ArtinTerm> labels;
  for (const auto& h : cyclic_subgroups(g)) {
    const SubgroupChain hc = chain.restrict_to(h);
    family.push_back(induce(chi_cyclic_tilde(h, chain), chain));
    labels.push_back({h.to_string(), "chi~", 0});
    for (std::size_t e = 1; e <= hc.d(); ++e) {
      // one label per character of H_e, then every nonempty set of them
      const auto chars = distinct_restrictions(g, full_subset(g.size()), hc.level(e));
      if (chars.size() > 16) continue;
      for (Subset s = 1; s < (Subset{1} << chars.size()); ++s) {
        Subset lab = 0;
        for (auto k : subset_elements(s)) lab |= singleton(chars[k]);
        family.push_back(induce(glider_character(hc, e, lab), chain));
        labels.push_back({h.to_string(), "glider e=" + std::to_string(e) + " " + subset_string(g, lab), 0});
      }
    }
  }

  const std::vector<Rational> rhs = target.flatten();
  RationalMatrix m(rhs.size(), family.size());
  for (std::size_t k = 0; k < family.size(); ++k) {
    const auto col = family[k].flatten();
    for (std::size_t r = 0; r < rhs.size(); ++r) m(r, k) = col[r];
  }
  const std::vector<Rational> coef = solve(m, rhs);

  GenClassFunction check(chain);
  ArtinCertificate cert;
  cert.family_size = family.size();
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (gchar::is_zero(coef[k])) continue;
    check = check + family[k] * coef[k];
    ArtinTerm t = labels[k];
    t.coefficient = coef[k];
    cert.terms.push_back(std::move(t));
  }
  if (check != target) fail(ErrorKind::Unsolvable, "solver returned a combination that does not reproduce c_|G| f");
  return cert;
}

GenClassFunction realize(const RingElement& x) {
  const SubgroupChain chain = SubgroupChain::from_intermediate(x.algebra().group(), {});
  GenClassFunction f(chain);
  for (const auto& [s, c] : x.terms()) f = f + glider_char_subset(chain, s) * c;
  return f;
}

SubgroupChain chain_of(const Chain2& c) {
  const AbelianGroup& g = c.group();
  return SubgroupChain::from_levels(g, {Subgroup::trivial(g), c.sub(), Subgroup::whole(g)});
}

GenClassFunction realize(const ChainRingElement& x) {
  const Chain2& c = x.chain();
  const SubgroupChain chain = chain_of(c);
  GenClassFunction f(chain);
  for (const auto& [l, coef] : x.terms()) {
    if (l.kind == ChainLabel::Kind::Full) {
      f = f + glider_character(chain, 2, l.set) * coef;
      continue;
    }
    // (empty, B): characters S_b of H, taken as T_g with pi(g) = b
    Subset labels = 0;
    for (auto b : subset_elements(l.set)) {
      for (std::size_t y = 0; y < c.group().size(); ++y)
        if (c.pi(y) == b) {
          labels |= singleton(y);
          break;
        }
    }
    f = f + glider_character(chain, 1, labels) * coef;
  }
  return f;
}

Report verify_inner_products(const SubgroupChain& chain) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.inputs = {{"group", chain.group().to_string()}, {"chain", chain.to_string()}};
  const AbelianGroup& g = chain.group();
  const unsigned order = chain.field_order();
  auto q = [order](long v) { return Cyclotomic(order, Rational(v)); };
  std::size_t bad = 0, asym = 0, blocks = 0, checked = 0;
  json first = nullptr;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  std::optional<std::vector<std::size_t>> pi;
  if (chain.d() == 2) pi = duality_projection(g, chain.level(1));
  if (chain.d() != 1 && chain.d() != 2) fail(ErrorKind::ChainLengthMismatch, "inner product suite covers d = 1, 2");

  for (Subset a = 1; a <= full_subset(g.size()); ++a) {
    const GenClassFunction chi = glider_character(chain, chain.d(), a);
    if (!chi.respects_zero_blocks()) ++blocks;
    const TriangularMatrix ip = inner_product(chi, chi);
    TriangularMatrix want(chain.d() + 1, order);
    const long k = static_cast<long>(subset_size(a));
    if (chain.d() == 1) {
      want.at(0, 0) = q(k * k);
      want.at(0, 1) = q(1);
      want.at(1, 1) = q(k);
    } else {
      const long l = static_cast<long>(subset_size(subset_image(*pi, a)));
      pairs.emplace(k, l);
      want.at(0, 0) = q(k * k);
      want.at(0, 1) = q(l * l);
      want.at(0, 2) = q(1);
      want.at(1, 1) = q(l);
      want.at(1, 2) = q(l);
      want.at(2, 2) = q(k);
    }
    ++checked;
    if (ip != want) {
      ++bad;
      if (first.is_null()) first = {{"A", subset_string(g, a)}, {"expected", want.to_string()}, {"actual", ip.to_string()}};
    }
    // the value at 1 is symmetric about the anti-diagonal with 1 in the corner
    const TriangularMatrix& one = chi.at(g.identity());
    const std::size_t d = chain.d();
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = i; j <= d; ++j)
        if (one.at(i, j) != one.at(d - j, d - i)) ++asym;
    if (one.at(0, d) != q(1)) ++asym;
  }
  rep.add("glider_self_inner_products", bad == 0, 0, bad, "subsets whose <chi,chi> differs from the predicted matrix");
  if (!first.is_null()) rep.note("first_mismatch", first);
  rep.add("value_at_one_antidiagonal_symmetric", asym == 0, 0, asym);
  rep.add("zero_blocks", blocks == 0, 0, blocks);
  rep.result = {{"subsets_checked", checked}};
  if (chain.d() == 2) {
    json jp = json::array();
    for (const auto& [k, l] : pairs) jp.push_back({k, l});
    rep.result["pairs"] = jp;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace gchar
