#include "gchar/charring/verify.hpp"

#include <algorithm>
#include <chrono>

#include "gchar/error.hpp"

namespace gchar {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

json group_json(const AbelianGroup& g) { return {{"group", g.to_string()}, {"order", g.size()}}; }

// Dimension of span{q(e * b_j)}: the size of the block e cuts out of A/J.
std::size_t block_dimension(const FiniteAlgebra& alg, const QuotientMap& q, const SparseVector& e) {
  EchelonBasis span;
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    SparseVector b{{j, Rational(1)}};
    span.insert(to_sparse(q.apply(alg.multiply(e, b))));
    if (span.dim() == q.dim()) break;
  }
  return span.dim();
}

}  // namespace

Polynomial minimal_polynomial_mod(const FiniteAlgebra& alg, const QuotientMap& q, const SparseVector& unit,
                                  const SparseVector& x) {
  std::vector<std::vector<Rational>> images{q.apply(unit)};
  SparseVector power = unit;
  for (std::size_t d = 1; d <= q.dim() + 1; ++d) {
    power = alg.multiply(power, x);
    std::vector<Rational> next = q.apply(power);
    RationalMatrix m(q.dim(), images.size());
    for (std::size_t i = 0; i < q.dim(); ++i)
      for (std::size_t k = 0; k < images.size(); ++k) m(i, k) = images[k][i];
    try {
      const auto c = solve(m, next);
      std::vector<Rational> coeffs(d + 1);
      for (std::size_t k = 0; k < d; ++k) coeffs[k] = -c[k];
      coeffs[d] = 1;
      return Polynomial(std::move(coeffs));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::Unsolvable) throw;
    }
    images.push_back(std::move(next));
  }
  fail(ErrorKind::InvalidArgument, "no linear dependence among powers");
}

Report verify_theorem_ja(const AbelianGroup& g) {
  const auto t0 = Clock::now();
  Report rep;
  rep.inputs = group_json(g);
  rep.inputs["mode"] = to_string(ContractionMode::ModEmptyAndG);

  const CharAlgebra alg(g, ContractionMode::ModEmptyAndG);
  const FiniteAlgebra fa = alg.finite_algebra();
  const RadicalResult rad = algebra_radical(fa);
  const auto gens = radical_generators(alg);
  const std::size_t target = quotient_dimension_target(g);

  std::vector<SparseVector> gen_coords;
  std::size_t outside = 0;
  for (const auto& x : gens) {
    gen_coords.push_back(x.coordinates());
    if (!rad.quotient.kills(gen_coords.back())) ++outside;
  }
  rep.add("generators_in_radical", outside == 0, 0, outside, "generators not killed by A -> A/J");

  const EchelonBasis ideal = ideal_span(fa, gen_coords);
  rep.add("ideal_equals_radical", ideal.dim() == rad.dim() && outside == 0, rad.dim(), ideal.dim(),
          "dimension of the ideal generated by chi_{gN} - chi_A");
  rep.add("radical_two_sided_ideal", rad.is_two_sided_ideal, true, rad.is_two_sided_ideal);
  rep.add("quotient_dimension", fa.dim() - rad.dim() == target, target, fa.dim() - rad.dim());
  rep.add("radical_nilpotent", rad.nilpotency_index.has_value(), true, rad.nilpotency_index.has_value());

  // Each generator chi_{gN} - chi_A vanishes at the first power m with A^m = n(A).
  std::size_t wrong_exponent = 0, loose_exponent = 0;
  unsigned max_exponent = 0;
  json first_bad = nullptr;
  for (Subset a = 1; a <= alg.full(); ++a) {
    const auto [rep_elem, n] = coset_cover(g, a);
    const Subset cover = subset_translate(g, rep_elem, subset_of(n.elements()));
    RingElement x = RingElement::chi(alg, cover) - RingElement::chi(alg, a);
    if (x.is_zero()) continue;
    const unsigned m = n_exponent(g, a);
    max_exponent = std::max(max_exponent, m);
    const SparseVector v = x.coordinates();
    if (!fa.power(v, m).empty()) {
      ++wrong_exponent;
      if (first_bad.is_null()) first_bad = {{"A", subset_string(g, a)}, {"m", m}};
    } else if (m > 1 && fa.power(v, m - 1).empty()) {
      ++loose_exponent;
    }
    if (a == alg.full()) break;
  }
  rep.add("generator_nilpotency", wrong_exponent == 0, 0, wrong_exponent,
          "generators with x^m != 0 where A^m = n(A)");
  if (!first_bad.is_null()) rep.note("first_bad_generator", first_bad);
  rep.note("generators_vanishing_before_m", loose_exponent);

  // psi(G,H) are orthogonal idempotents summing to 1 modulo J, each cutting a
  // block of dimension |G/H| out of A/J.
  const auto subs = enumerate_subgroups(g);
  std::vector<SparseVector> psis;
  std::vector<Subgroup> proper;
  for (const auto& h : subs) {
    if (h.is_whole()) continue;
    proper.push_back(h);
    psis.push_back(psi(alg, h).coordinates());
  }
  std::size_t not_idem = 0, not_orth = 0, wrong_block = 0;
  json blocks = json::array();
  SparseVector sum;
  for (std::size_t i = 0; i < psis.size(); ++i) {
    add_scaled(sum, psis[i], 1);
    if (fa.multiply(psis[i], psis[i]) != psis[i]) ++not_idem;
    for (std::size_t j = i + 1; j < psis.size(); ++j)
      if (!fa.multiply(psis[i], psis[j]).empty()) ++not_orth;
    const std::size_t bd = block_dimension(fa, rad.quotient, psis[i]);
    const std::size_t want = g.size() / proper[i].size();
    if (bd != want) ++wrong_block;
    blocks.push_back({{"H", proper[i].to_string()}, {"block", bd}, {"index", want}});
  }
  rep.add("psi_idempotent", not_idem == 0, 0, not_idem);
  rep.add("psi_orthogonal", not_orth == 0, 0, not_orth);
  const SparseVector one = RingElement::one(alg).coordinates();
  rep.add("psi_sum_is_one_mod_radical", rad.quotient.kills(difference(sum, one)), true,
          rad.quotient.kills(difference(sum, one)));
  rep.add("psi_block_dimensions", wrong_block == 0, 0, wrong_block, "blocks with dim != |G/H|");

  rep.result = {{"algebra_dim", fa.dim()},
                {"radical_dim", rad.dim()},
                {"quotient_dim", fa.dim() - rad.dim()},
                {"quotient_target", target},
                {"ideal_span_dim", ideal.dim()},
                {"generators", gens.size()},
                {"power_dims", rad.power_dims},
                {"max_generator_exponent", max_exponent},
                {"blocks", blocks}};
  if (rad.nilpotency_index) rep.result["nilpotency_index"] = *rad.nilpotency_index;
  rep.seconds = since(t0);
  return rep;
}

Report verify_pci(const AbelianGroup& g) {
  const auto t0 = Clock::now();
  Report rep;
  rep.inputs = group_json(g);
  rep.inputs["mode"] = to_string(ContractionMode::ModEmpty);

  const CharAlgebra alg(g, ContractionMode::ModEmpty);
  const FiniteAlgebra fa = alg.finite_algebra();
  const auto pcis = primitive_central_idempotents(alg);

  // Pairs H <= N with G/N cyclic, counted directly from the subgroup lattice.
  const auto subs = enumerate_subgroups(g);
  std::size_t expected_count = 0;
  for (const auto& n : subs) {
    bool cyclic = false;
    for (std::size_t x = 0; x < g.size() && !cyclic; ++x) {
      std::vector<std::size_t> gens = n.elements();
      gens.push_back(x);
      cyclic = Subgroup::generated(g, gens).is_whole();
    }
    if (!cyclic) continue;
    for (const auto& h : subs)
      if (h.is_subgroup_of(n)) ++expected_count;
  }
  rep.add("count", pcis.size() == expected_count, expected_count, pcis.size());

  std::vector<SparseVector> es;
  for (const auto& p : pcis) es.push_back(p.e.coordinates());
  std::size_t not_idem = 0, not_orth = 0;
  SparseVector sum;
  for (std::size_t i = 0; i < es.size(); ++i) {
    add_scaled(sum, es[i], 1);
    if (fa.multiply(es[i], es[i]) != es[i]) ++not_idem;
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (!fa.multiply(es[i], es[j]).empty()) ++not_orth;
  }
  rep.add("idempotent", not_idem == 0, 0, not_idem);
  rep.add("orthogonal", not_orth == 0, 0, not_orth);
  const SparseVector one = RingElement::one(alg).coordinates();
  rep.add("sum_is_one", sum == one, RingElement::one(alg).to_string(),
          RingElement::from_coordinates(alg, sum).to_string());

  // Primitivity: e(A/J) is the field Q(zeta_m) with m = [G:N], detected by an
  // irreducible minimal polynomial whose degree equals the block dimension.
  const RadicalResult rad = algebra_radical(fa, false);
  std::size_t not_primitive = 0;
  json items = json::array();
  for (std::size_t i = 0; i < pcis.size(); ++i) {
    const auto& p = pcis[i];
    const QuotientGroup gn(g, p.n);
    const std::size_t m = gn.size();
    const std::size_t bd = block_dimension(fa, rad.quotient, es[i]);
    const std::size_t gen = gn.representatives()[*gn.cyclic_generator()];
    const SparseVector x = fa.multiply(es[i], RingElement::chi(alg, singleton(gen)).coordinates());
    const Polynomial mp = minimal_polynomial_mod(fa, rad.quotient, es[i], x);
    const bool ok = bd == euler_phi(static_cast<unsigned>(m)) && static_cast<std::size_t>(mp.degree()) == bd &&
                    is_irreducible_over_q(mp);
    if (!ok) ++not_primitive;
    items.push_back({{"H", p.h.to_string()},
                     {"N", p.n.to_string()},
                     {"index", m},
                     {"block", bd},
                     {"minpoly", mp.to_string()},
                     {"e", p.e.to_string()}});
  }
  rep.add("primitive", not_primitive == 0, 0, not_primitive, "blocks that are not the field Q(zeta_[G:N])");
  rep.add("quotient_dimension", rad.quotient.dim() == quotient_dimension_target(g) + 1,
          quotient_dimension_target(g) + 1, rad.quotient.dim());

  rep.result = {{"count", pcis.size()}, {"idempotents", items}};
  rep.seconds = since(t0);
  return rep;
}

Report verify_omega_kernel(const AbelianGroup& g) {
  const auto t0 = Clock::now();
  Report rep;
  rep.inputs = group_json(g);
  const CharAlgebra alg(g, ContractionMode::ModEmpty);
  const FiniteAlgebra fa = alg.finite_algebra();
  json rows = json::array();
  std::size_t mismatches = 0, not_mult = 0;
  for (const auto& h : enumerate_subgroups(g)) {
    const CharAlgebra target = omega_target(h);
    const auto images = [&] {
      std::vector<SparseVector> cols;
      for (std::size_t j = 0; j < alg.dim(); ++j)
        cols.push_back(omega(h, RingElement::chi(alg, alg.label(j))).coordinates());
      return cols;
    }();
    // rank of omega: span of the column images
    EchelonBasis image;
    for (const auto& c : images) image.insert(c);
    const std::size_t kernel_dim = alg.dim() - image.dim();

    // the ideal (chi_H - 1) is spanned by chi_A (chi_H - 1)
    const RingElement gen = RingElement::chi(alg, subset_of(h.elements())) - RingElement::one(alg);
    EchelonBasis ideal;
    std::size_t escaped = 0;
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      const RingElement v = RingElement::chi(alg, alg.label(j)) * gen;
      if (!omega(h, v).is_zero()) ++escaped;
      ideal.insert(v.coordinates());
    }
    const bool equal = escaped == 0 && ideal.dim() == kernel_dim;
    if (!equal) ++mismatches;

    if (g.size() <= 8) {
      for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i; j < alg.dim(); ++j) {
          const RingElement lhs = omega(h, RingElement::from_coordinates(alg, fa.product(i, j)));
          const RingElement prod = mul(RingElement::from_coordinates(target, images[i]),
                                       RingElement::from_coordinates(target, images[j]));
          if (lhs != prod) ++not_mult;
        }
    }
    rows.push_back({{"H", h.to_string()},
                    {"kernel_dim", kernel_dim},
                    {"ideal_dim", ideal.dim()},
                    {"ideal_outside_kernel", escaped}});
  }
  rep.add("kernel_equals_ideal", mismatches == 0, 0, mismatches, "subgroups where ker(omega) != (chi_H - 1)");
  if (g.size() <= 8) rep.add("omega_multiplicative", not_mult == 0, 0, not_mult);
  rep.result = {{"subgroups", rows}};
  rep.seconds = since(t0);
  return rep;
}

Report verify_cyclic_prime(unsigned p) {
  const auto t0 = Clock::now();
  Report rep;
  const AbelianGroup g({p});
  rep.inputs = group_json(g);
  const CharAlgebra alg(g, ContractionMode::ModEmpty);
  const Subset full = alg.full();
  const RingElement one = RingElement::one(alg);
  const RingElement chi_g = RingElement::chi(alg, full);
  const RingElement g_check = check_of(alg, full);

  const Subgroup e = Subgroup::trivial(g);
  const RingElement psi_e = psi(alg, e);
  rep.add("psi_trivial", psi_e == one - chi_g, (one - chi_g).to_string(), psi_e.to_string());

  const auto pcis = primitive_central_idempotents(alg);
  rep.add("count", pcis.size() == 3, 3, pcis.size());
  std::map<std::pair<std::size_t, std::size_t>, RingElement> by_pair;
  for (const auto& x : pcis) by_pair.emplace(std::make_pair(x.h.size(), x.n.size()), x.e);

  const RingElement eps_part = one - g_check;
  const RingElement psi_part = g_check - chi_g;
  auto lookup = [&](std::size_t h, std::size_t n) {
    auto it = by_pair.find({h, n});
    return it == by_pair.end() ? RingElement(alg) : it->second;
  };
  rep.add("epsilon_part", lookup(1, 1) == eps_part, eps_part.to_string(), lookup(1, 1).to_string());
  rep.add("psi_part", lookup(1, p) == psi_part, psi_part.to_string(), lookup(1, p).to_string());
  rep.add("whole_part", lookup(p, p) == chi_g, chi_g.to_string(), lookup(p, p).to_string());

  const std::vector<RingElement> parts{eps_part, psi_part, chi_g};
  std::size_t bad = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] * parts[i] != parts[i]) ++bad;
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!(parts[i] * parts[j]).is_zero()) ++bad;
  }
  rep.add("orthogonal_idempotents", bad == 0, 0, bad);
  rep.add("sum_is_one", eps_part + psi_part + chi_g == one, one.to_string(), (eps_part + psi_part + chi_g).to_string());
  rep.result = {{"epsilon", eps_part.to_string()}, {"psi", psi_part.to_string()}, {"whole", chi_g.to_string()}};
  rep.seconds = since(t0);
  return rep;
}

}  // namespace gchar
