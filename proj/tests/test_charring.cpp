#include "doctest.h"

#include <random>
#include <set>

#include "gchar/charring/charring.hpp"
#include "gchar/charring/verify.hpp"
#include "gchar/error.hpp"

using namespace gchar;

namespace {

std::vector<AbelianGroup> groups_upto6() {
  return {AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({4}), AbelianGroup({2, 2}), AbelianGroup({5}),
          AbelianGroup({6})};
}

// Collision count by enumerating ordered pairs of distinct factorizations.
Integer brute_collisions(const AbelianGroup& g, Subset a, Subset b) {
  long count = 0;
  for (auto x : subset_elements(a))
    for (auto y : subset_elements(b))
      for (auto x2 : subset_elements(a))
        for (auto y2 : subset_elements(b))
          if (x != x2 && y != y2 && g.mul(x, y) == g.mul(x2, y2)) ++count;
  return Integer(count / 2);
}

// Subgroup reached by iterating A -> A * A0 until a power repeats and is closed.
std::vector<std::size_t> brute_n(const AbelianGroup& g, Subset a) {
  Subset p = a;
  for (std::size_t k = 1; k <= 2 * g.size() + 2; ++k) {
    if (subset_product(g, p, p) == p) return subset_elements(p);
    p = subset_product(g, p, a);
  }
  return {};
}

RingElement random_element(const CharAlgebra& alg, std::mt19937& rng, int terms) {
  std::uniform_int_distribution<Subset> pick(1, alg.full());
  std::uniform_int_distribution<long> coef(-3, 3);
  RingElement r(alg);
  for (int i = 0; i < terms; ++i) r.add_term(pick(rng), make_rational(coef(rng), 1 + (i % 2)));
  return r;
}

}  // namespace

TEST_CASE("collision count matches brute force") {
  for (const auto& g : groups_upto6()) {
    const Subset full = full_subset(g.size());
    for (Subset a = 1; a <= full; ++a)
      for (Subset b = 1; b <= full; ++b) {
        const auto c = subset_product_counted(g, a, b);
        REQUIRE(c.set == subset_product(g, a, b));
        REQUIRE(c.collisions == brute_collisions(g, a, b));
      }
  }
}

TEST_CASE("product fixtures over Z4") {
  const AbelianGroup z4({4});
  auto p = subset_product_counted(z4, parse_subset(z4, "{0,1}"), parse_subset(z4, "{1,2}"));
  CHECK(subset_string(z4, p.set) == "{1,2,3}");
  CHECK(p.collisions == 1);
  p = subset_product_counted(z4, parse_subset(z4, "{1,3}"), parse_subset(z4, "{0,2}"));
  CHECK(subset_string(z4, p.set) == "{1,3}");
  CHECK(p.collisions == 2);

  const CharAlgebra alg(z4, ContractionMode::ModEmpty);
  const auto x = parse_ring_element(alg, "{0,1}") * parse_ring_element(alg, "{1,2}");
  CHECK(x.to_string() == "{1,2,3}");
}

TEST_CASE("contraction modes") {
  const AbelianGroup z4({4});
  const CharAlgebra a(z4, ContractionMode::ModEmpty), b(z4, ContractionMode::ModEmptyAndG);
  CHECK(a.dim() == 15);
  CHECK(b.dim() == 14);
  CHECK(RingElement::chi(b, b.full()).is_zero());
  CHECK(parse_mode("mod-empty") == ContractionMode::ModEmpty);
  CHECK(parse_mode("mod-empty-g") == ContractionMode::ModEmptyAndG);
  CHECK_THROWS_AS(parse_mode("mod-g"), Error);
  CHECK_THROWS_AS(RingElement::chi(a, 1) + RingElement::chi(b, 1), Error);
}

TEST_CASE("ring is commutative and associative with unit") {
  std::mt19937 rng(7);
  for (const auto& g : groups_upto6()) {
    for (auto mode : {ContractionMode::ModEmpty, ContractionMode::ModEmptyAndG}) {
      const CharAlgebra alg(g, mode);
      for (int t = 0; t < 20; ++t) {
        const auto x = random_element(alg, rng, 3), y = random_element(alg, rng, 3), z = random_element(alg, rng, 2);
        REQUIRE(x * y == y * x);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * RingElement::one(alg) == x);
        REQUIRE(x * (y + z) == x * y + x * z);
      }
    }
  }
}

TEST_CASE("printed elements re-parse") {
  std::mt19937 rng(11);
  const AbelianGroup v4({2, 2});
  const CharAlgebra alg(v4, ContractionMode::ModEmpty);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_element(alg, rng, 4);
    REQUIRE(parse_ring_element(alg, x.to_string()) == x);
  }
  CHECK(parse_ring_element(alg, "0").is_zero());
  CHECK_THROWS_AS(parse_ring_element(alg, "2*{(0,0),(0,0)}"), Error);
  CHECK_THROWS_AS(parse_ring_element(alg, "{(0,0)} +"), Error);
}

TEST_CASE("n(A) and its exponent") {
  for (const auto& g : groups_upto6()) {
    for (Subset a = 1; a <= full_subset(g.size()); ++a) {
      const Subgroup n = n_of(g, a);
      REQUIRE(n.elements() == brute_n(g, a));
      const unsigned m = n_exponent(g, a);
      Subset p = a;
      for (unsigned k = 1; k < m; ++k) {
        REQUIRE(p != subset_of(n.elements()));
        p = subset_product(g, p, a);
      }
      REQUIRE(p == subset_of(n.elements()));
      const auto [x, cover] = coset_cover(g, a);
      REQUIRE(cover == n);
      const Subset coset = subset_translate(g, x, subset_of(n.elements()));
      REQUIRE((a & ~coset) == 0);
    }
  }
  const AbelianGroup z4({4});
  CHECK(n_of(z4, parse_subset(z4, "{1}")).is_trivial());
  CHECK(n_of(z4, parse_subset(z4, "{0,1}")).is_whole());
  CHECK(n_of(z4, parse_subset(z4, "{1,3}")).size() == 2);
}

TEST_CASE("integrality witness") {
  const AbelianGroup z4({4});
  CHECK(integrality_witness(z4, parse_subset(z4, "{1}")) == std::pair<unsigned, unsigned>{1, 5});
  CHECK(integrality_witness(z4, parse_subset(z4, "{0,2}")) == std::pair<unsigned, unsigned>{1, 2});
  CHECK(integrality_witness(z4, parse_subset(z4, "{0,1}")) == std::pair<unsigned, unsigned>{3, 4});
  for (const auto& g : groups_upto6())
    for (Subset a = 1; a <= full_subset(g.size()); ++a) {
      const auto [k, l] = integrality_witness(g, a);
      Subset pk = a, p = a;
      for (unsigned i = 1; i < l; ++i) {
        p = subset_product(g, p, a);
        if (i + 1 == k) pk = p;
      }
      REQUIRE(k < l);
      REQUIRE(pk == p);
    }
}

TEST_CASE("radical generators") {
  CHECK(radical_generators(CharAlgebra(AbelianGroup({2}), ContractionMode::ModEmptyAndG)).empty());
  CHECK_THROWS_AS(radical_generators(CharAlgebra(AbelianGroup({2}), ContractionMode::ModEmpty)), Error);
  const CharAlgebra alg(AbelianGroup({4}), ContractionMode::ModEmptyAndG);
  CHECK(radical_generators(alg).size() == 8);
}

TEST_CASE("omega is a ring map") {
  std::mt19937 rng(3);
  for (const auto& g : groups_upto6()) {
    const CharAlgebra alg(g, ContractionMode::ModEmpty);
    for (const auto& h : enumerate_subgroups(g)) {
      const CharAlgebra target = omega_target(h);
      CHECK(target.group().size() == g.size() / h.size());
      CHECK(omega(h, RingElement::one(alg)) == RingElement::one(target));
      for (int t = 0; t < 10; ++t) {
        const auto x = random_element(alg, rng, 3), y = random_element(alg, rng, 3);
        REQUIRE(omega(h, x * y) == omega(h, x) * omega(h, y));
        REQUIRE(omega(h, x + y) == omega(h, x) + omega(h, y));
      }
      const auto gen = RingElement::chi(alg, subset_of(h.elements())) - RingElement::one(alg);
      CHECK(omega(h, gen).is_zero());
    }
  }
}

TEST_CASE("psi and epsilon") {
  const AbelianGroup z4({4});
  const CharAlgebra g_alg(z4, ContractionMode::ModEmptyAndG);
  const Subgroup two = parse_subgroup(z4, "2");
  CHECK(psi(g_alg, two).to_string() == "{0,2}");
  CHECK(psi(g_alg, Subgroup::trivial(z4)).to_string() == "{0} - {0,2}");
  CHECK_THROWS_AS(psi(g_alg, Subgroup::whole(z4)), Error);

  for (const auto& g : groups_upto6()) {
    const CharAlgebra alg(g, ContractionMode::ModEmpty);
    for (const auto& h : enumerate_subgroups(g)) {
      const auto c = check_of(alg, subset_of(h.elements()));
      REQUIRE(c * c == c);
      const auto e = epsilon_check(alg, h);
      REQUIRE(e * e == e);
      if (h.is_whole()) continue;
      const auto p = psi(alg, h);
      REQUIRE(p * p == p);
    }
  }
}

TEST_CASE("primitive central idempotent counts") {
  CHECK(primitive_central_idempotents(CharAlgebra(AbelianGroup({4}), ContractionMode::ModEmpty)).size() == 6);
  CHECK(primitive_central_idempotents(CharAlgebra(AbelianGroup({2, 2}), ContractionMode::ModEmpty)).size() == 11);
  for (unsigned p : {2u, 3u, 5u, 7u})
    CHECK(primitive_central_idempotents(CharAlgebra(AbelianGroup({p}), ContractionMode::ModEmpty)).size() == 3);
}

TEST_CASE("quotient dimension target") {
  CHECK(quotient_dimension_target(AbelianGroup({4})) == 6);
  CHECK(quotient_dimension_target(AbelianGroup({2, 2})) == 10);
  CHECK(quotient_dimension_target(AbelianGroup({2})) == 2);
}

TEST_CASE("verification suites on small groups") {
  for (const auto& g : groups_upto6()) {
    CAPTURE(g.to_string());
    const Report ja = verify_theorem_ja(g);
    CHECK_MESSAGE(ja.ok(), ja.to_text());
    CHECK(ja.result["quotient_dim"] == quotient_dimension_target(g));
    const Report pci = verify_pci(g);
    CHECK_MESSAGE(pci.ok(), pci.to_text());
    const Report om = verify_omega_kernel(g);
    CHECK_MESSAGE(om.ok(), om.to_text());
  }
  const Report z4 = verify_theorem_ja(AbelianGroup({4}));
  CHECK(z4.result["algebra_dim"] == 14);
  CHECK(z4.result["radical_dim"] == 8);
  const Report v4 = verify_theorem_ja(AbelianGroup({2, 2}));
  CHECK(v4.result["radical_dim"] == 4);
  for (unsigned p : {2u, 3u, 5u}) {
    const Report r = verify_cyclic_prime(p);
    CHECK_MESSAGE(r.ok(), r.to_text());
  }
}

TEST_CASE("minimal polynomial modulo the radical") {
  const CharAlgebra alg(AbelianGroup({4}), ContractionMode::ModEmpty);
  const FiniteAlgebra fa = alg.finite_algebra();
  const auto rad = algebra_radical(fa);
  const auto one = RingElement::one(alg).coordinates();
  const auto x = RingElement::chi(alg, singleton(1)).coordinates();
  // chi_{1} acts on A/J as a generator of Z4 on Q x Q x Q(i), plus the chi_G line
  const Polynomial mp = minimal_polynomial_mod(fa, rad.quotient, one, x);
  CHECK(mp.to_string() == "X^4 - 1");
}
