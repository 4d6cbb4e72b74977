#include "gchar/group/subgroup.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gchar/error.hpp"
#include "gchar/parse.hpp"

namespace gchar {

namespace {

// A finite abelian group on local numbers 0..n-1 (0 = identity).
struct LocalGroup {
  std::size_t n;
  std::function<std::size_t(std::size_t, std::size_t)> mul;

  unsigned order_of(std::size_t x) const {
    unsigned o = 1;
    for (std::size_t y = x; y != 0; y = mul(y, x)) ++o;
    return o;
  }
};

bool search_basis(const LocalGroup& g, const std::vector<std::size_t>& candidates, std::size_t from,
                  std::vector<bool>& span, std::size_t span_size, std::vector<std::size_t>& basis) {
  if (span_size == g.n) return true;
  for (std::size_t c = from; c < candidates.size(); ++c) {
    const std::size_t x = candidates[c];
    if (span[x]) continue;
    // <x> must meet the span trivially
    const unsigned o = g.order_of(x);
    bool trivial = true;
    for (std::size_t p = x; p != 0; p = g.mul(p, x)) {
      if (span[p]) {
        trivial = false;
        break;
      }
    }
    if (!trivial) continue;
    std::vector<std::size_t> old;
    for (std::size_t y = 0; y < g.n; ++y)
      if (span[y]) old.push_back(y);
    std::vector<bool> next(g.n, false);
    std::size_t p = 0;
    for (unsigned k = 0; k < o; ++k) {
      for (auto y : old) next[g.mul(y, p)] = true;
      p = g.mul(p, x);
    }
    basis.push_back(x);
    if (search_basis(g, candidates, c + 1, next, span_size * o, basis)) {
      span = std::move(next);
      return true;
    }
    basis.pop_back();
  }
  return false;
}

std::vector<std::size_t> cyclic_basis(const LocalGroup& g) {
  std::vector<std::size_t> candidates;
  std::vector<unsigned> order(g.n);
  for (std::size_t x = 1; x < g.n; ++x) {
    candidates.push_back(x);
    order[x] = g.order_of(x);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) { return order[a] > order[b]; });
  std::vector<bool> span(g.n, false);
  span[0] = true;
  std::vector<std::size_t> basis;
  if (!search_basis(g, candidates, 0, span, 1, basis)) {
    fail(ErrorKind::InvalidArgument, "no cyclic decomposition found");
  }
  return basis;
}

// Presentation of a local group along a given basis; to_local is filled,
// from_local inverts it over 0..n-1.
Presentation present(const LocalGroup& g, const std::vector<std::size_t>& basis) {
  Presentation p;
  std::vector<unsigned> orders;
  for (auto b : basis) orders.push_back(g.order_of(b));
  p.group = AbelianGroup(orders.empty() ? std::vector<unsigned>{1} : orders);
  p.basis = basis;
  if (p.group.size() != g.n) fail(ErrorKind::InvalidArgument, "basis does not give a direct decomposition");
  p.to_local.assign(p.group.size(), 0);
  p.from_local.assign(g.n, Presentation::npos);
  for (std::size_t k = 0; k < p.group.size(); ++k) {
    const auto e = p.group.exponents(k);
    std::size_t x = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (unsigned r = 0; r < e[i]; ++r) x = g.mul(x, basis[i]);
    if (p.from_local[x] != Presentation::npos) {
      fail(ErrorKind::InvalidArgument, "basis does not give a direct decomposition");
    }
    p.to_local[k] = x;
    p.from_local[x] = k;
  }
  return p;
}

}  // namespace

Subgroup::Subgroup(const AbelianGroup& owner, std::vector<std::size_t> elements)
    : owner_(owner), elements_(std::move(elements)), member_(owner.size(), false) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (auto g : elements_) {
    if (g >= owner_.size()) fail(ErrorKind::InvalidArgument, "subgroup element out of range");
    member_[g] = true;
  }
  if (elements_.empty() || !member_[owner_.identity()]) {
    fail(ErrorKind::InvalidArgument, "subgroup must contain the identity");
  }
  for (auto a : elements_) {
    if (!member_[owner_.inv(a)]) fail(ErrorKind::InvalidArgument, "subset is not closed under inverses");
    for (auto b : elements_) {
      if (!member_[owner_.mul(a, b)]) fail(ErrorKind::InvalidArgument, "subset is not closed under the group law");
    }
  }
}

namespace {

// <s, x> as a sorted element list, for s a subgroup given by membership.
std::vector<std::size_t> join_element(const AbelianGroup& g, const std::vector<std::size_t>& s,
                                      const std::vector<bool>& member, std::size_t x) {
  std::vector<bool> in = member;
  std::vector<std::size_t> out = s;
  for (std::size_t p = x; !in[p]; p = g.mul(p, x)) {
    for (auto y : s) {
      const std::size_t z = g.mul(p, y);
      in[z] = true;
      out.push_back(z);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup Subgroup::generated(const AbelianGroup& owner, const std::vector<std::size_t>& gens) {
  std::vector<std::size_t> elems{owner.identity()};
  std::vector<bool> member(owner.size(), false);
  member[owner.identity()] = true;
  for (auto x : gens) {
    if (x >= owner.size()) fail(ErrorKind::InvalidArgument, "generator out of range");
    elems = join_element(owner, elems, member, x);
    for (auto y : elems) member[y] = true;
  }
  return Subgroup(owner, elems);
}

Subgroup Subgroup::whole(const AbelianGroup& owner) {
  std::vector<std::size_t> all(owner.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(owner, all);
}

bool Subgroup::is_subgroup_of(const Subgroup& o) const {
  if (owner_ != o.owner_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](std::size_t g) { return o.contains(g); });
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (size() != o.size()) return size() < o.size();
  return elements_ < o.elements_;
}

std::vector<std::size_t> Subgroup::decomposition_basis() const {
  if (is_whole()) {
    std::vector<std::size_t> basis;
    const auto& orders = owner_.orders();
    for (std::size_t k = 0; k < orders.size(); ++k) {
      if (orders[k] == 1) continue;
      std::vector<long> e(orders.size(), 0);
      e[k] = 1;
      basis.push_back(owner_.index(e));
    }
    return basis;
  }
  std::vector<std::size_t> pos(owner_.size(), 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) pos[elements_[i]] = i;
  LocalGroup local{size(), [&](std::size_t a, std::size_t b) { return pos[owner_.mul(elements_[a], elements_[b])]; }};
  std::vector<std::size_t> basis;
  for (auto b : cyclic_basis(local)) basis.push_back(elements_[b]);
  return basis;
}

Presentation Subgroup::presentation() const { return presentation(decomposition_basis()); }

Presentation Subgroup::presentation(const std::vector<std::size_t>& basis) const {
  for (auto b : basis) {
    if (b >= owner_.size() || !contains(b)) fail(ErrorKind::InvalidArgument, "basis element outside the subgroup");
  }
  Presentation p;
  std::vector<unsigned> orders;
  for (auto b : basis) orders.push_back(owner_.order_of(b));
  p.group = AbelianGroup(orders.empty() ? std::vector<unsigned>{1} : orders);
  if (p.group.size() != size()) fail(ErrorKind::InvalidArgument, "basis does not give a direct decomposition");
  p.basis = basis;
  p.to_local.assign(p.group.size(), 0);
  p.from_local.assign(owner_.size(), Presentation::npos);
  for (std::size_t k = 0; k < p.group.size(); ++k) {
    const auto e = p.group.exponents(k);
    std::size_t x = owner_.identity();
    for (std::size_t i = 0; i < basis.size(); ++i) x = owner_.mul(x, owner_.pow(basis[i], e[i]));
    if (p.from_local[x] != Presentation::npos) {
      fail(ErrorKind::InvalidArgument, "basis does not give a direct decomposition");
    }
    p.to_local[k] = x;
    p.from_local[x] = k;
  }
  return p;
}

std::optional<std::size_t> Subgroup::cyclic_generator() const {
  for (auto g : elements_) {
    if (owner_.order_of(g) == size()) return g;
  }
  return std::nullopt;
}

std::string Subgroup::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ",";
    out += owner_.element_string(elements_[i]);
  }
  return out + "}";
}

QuotientGroup::QuotientGroup(const AbelianGroup& owner, const Subgroup& n)
    : owner_(owner), n_(n), coset_(owner.size(), Presentation::npos) {
  if (n.owner() != owner) fail(ErrorKind::MixedGroups, "normal subgroup of a different group");
  for (std::size_t g = 0; g < owner.size(); ++g) {
    if (coset_[g] != Presentation::npos) continue;
    const std::size_t idx = reps_.size();
    reps_.push_back(g);
    for (auto h : n.elements()) coset_[owner.mul(g, h)] = idx;
  }
}

std::size_t QuotientGroup::mul(std::size_t a, std::size_t b) const {
  return coset_[owner_.mul(reps_[a], reps_[b])];
}

unsigned QuotientGroup::order_of(std::size_t c) const {
  unsigned o = 1;
  for (std::size_t y = c; y != 0; y = mul(y, c)) ++o;
  return o;
}

std::optional<std::size_t> QuotientGroup::cyclic_generator() const {
  for (std::size_t c = 0; c < size(); ++c) {
    if (order_of(c) == size()) return c;
  }
  return std::nullopt;
}

Presentation QuotientGroup::presentation() const {
  LocalGroup local{size(), [this](std::size_t a, std::size_t b) { return mul(a, b); }};
  return present(local, cyclic_basis(local));
}

std::vector<Subgroup> enumerate_subgroups(const AbelianGroup& g) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  seen.insert(found[0].elements());
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Subgroup s = found[i];
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (s.contains(x)) continue;
      auto elems = join_element(g, s.elements(), s.membership(), x);
      if (seen.insert(elems).second) found.emplace_back(g, std::move(elems));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

std::vector<Subgroup> minimal_subgroups(const AbelianGroup& g) {
  if (g.size() == 1) fail(ErrorKind::MinimalOfTrivial, "the trivial group has no minimal subgroups");
  std::vector<Subgroup> out;
  for (auto& s : enumerate_subgroups(g)) {
    if (is_prime(s.size())) out.push_back(std::move(s));
  }
  return out;
}

std::vector<Subgroup> minimal_overgroups(const AbelianGroup& g, const Subgroup& n) {
  std::vector<Subgroup> out;
  for (auto& s : enumerate_subgroups(g)) {
    if (n.is_subgroup_of(s) && is_prime(s.size() / n.size()) && s.size() % n.size() == 0) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::size_t> duality_projection(const AbelianGroup& g, const Subgroup& h,
                                            const std::optional<std::vector<std::size_t>>& basis) {
  if (h.owner() != g) fail(ErrorKind::MixedGroups, "subgroup of a different group");
  const Presentation p = basis ? h.presentation(*basis) : h.presentation();
  std::vector<std::size_t> pi(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    // restrict phi(x) to H and read off the exponent on each basis element
    std::vector<long> e;
    for (std::size_t i = 0; i < p.basis.size(); ++i) {
      const Rational v = g.pairing(x, p.basis[i]) * Rational(p.group.orders()[i]);
      if (v.get_den() != 1) fail(ErrorKind::InvalidArgument, "pairing value not of the expected order");
      e.push_back(v.get_num().get_si());
    }
    if (e.empty()) e.push_back(0);
    pi[x] = p.to_local[p.group.index(e)];
  }
  return pi;
}

Subgroup parse_subgroup(const AbelianGroup& g, const std::string& text) {
  const std::string t = trim(text);
  std::vector<std::size_t> gens;
  if (!t.empty()) {
    for (const auto& part : split_top_level(t, ';')) {
      if (!part.empty()) gens.push_back(g.parse_element(part));
    }
  }
  return Subgroup::generated(g, gens);
}

}  // namespace gchar
