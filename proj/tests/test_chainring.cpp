#include "doctest.h"

#include <random>

#include "gchar/chainring/chainring.hpp"
#include "gchar/error.hpp"

using namespace gchar;

namespace {

Chain2 z4_z2() {
  const AbelianGroup z4({4});
  return Chain2(z4, parse_subgroup(z4, "2"));
}

Chain2 v4_c() {
  const AbelianGroup v4({2, 2});
  return Chain2(v4, parse_subgroup(v4, "(1,1)"));
}

// Brute multiplicity of c in pi(A) pi(B) over pairs, minus one.
Rational correction(const Chain2& ch, Subset a, Subset b, std::size_t c) {
  long n = 0;
  for (auto h : subset_elements(ch.pi_set(a)))
    for (auto h2 : subset_elements(ch.pi_set(b)))
      if (ch.group().mul(h, h2) == c) ++n;
  return Rational(n - 1);
}

}  // namespace

TEST_CASE("chain product fixtures over Z4 > Z2") {
  const Chain2 ch = z4_z2();
  CHECK(ch.pi(1) == 2);
  CHECK(ch.pi(2) == 0);
  auto x = parse_chain_element(ch, "full:{1}") * parse_chain_element(ch, "full:{3}");
  CHECK(x.to_string() == "full:{0}");
  x = parse_chain_element(ch, "full:{0,1}") * parse_chain_element(ch, "full:{0,1}");
  CHECK(x.to_string() == "full:{0,1,2} + lower:{0} + lower:{2}");
  x = parse_chain_element(ch, "lower:{2}") * parse_chain_element(ch, "lower:{2}");
  CHECK(x.to_string() == "lower:{0}");
  x = parse_chain_element(ch, "full:{0,1}") * parse_chain_element(ch, "lower:{0}");
  CHECK(x.to_string() == "lower:{0} + lower:{2}");
}

TEST_CASE("chain product against the relations, label by label") {
  for (const Chain2& ch : {z4_z2(), v4_c()}) {
    const AbelianGroup& g = ch.group();
    const Subset full = full_subset(g.size());
    for (Subset a = 1; a <= full; ++a)
      for (Subset b = 1; b <= full; ++b) {
        const auto p = ChainRingElement::basis(ch, ChainLabel::full(ch, a)) *
                       ChainRingElement::basis(ch, ChainLabel::full(ch, b));
        ChainRingElement want = ChainRingElement::basis(ch, ChainLabel::full(ch, subset_product(g, a, b)));
        for (auto c : subset_elements(ch.pi_set(subset_product(g, a, b))))
          want.add_term(ChainLabel::lower(ch, singleton(c)), correction(ch, a, b, c));
        REQUIRE(p == want);
      }
  }
}

TEST_CASE("labels and parsing") {
  const Chain2 ch = z4_z2();
  CHECK_THROWS_AS(parse_chain_element(ch, "lower:{1}"), Error);
  CHECK_THROWS_AS(parse_chain_element(ch, "upper:{1}"), Error);
  CHECK_THROWS_AS(parse_chain_element(ch, "{1}"), Error);
  CHECK(ChainLabel::full(ch, 0).kind == ChainLabel::Kind::Zero);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, ch.dim() - 1);
  for (int t = 0; t < 40; ++t) {
    ChainRingElement x(ch);
    for (int k = 0; k < 3; ++k) x.add_term(chain_label_at(ch, pick(rng)), make_rational(k - 1, 1 + k));
    REQUIRE(parse_chain_element(ch, x.to_string()) == x);
    REQUIRE(ChainRingElement::from_coordinates(ch, x.coordinates()) == x);
  }
  CHECK_THROWS_AS(parse_chain_element(ch, "full:{0}") * parse_chain_element(v4_c(), "full:{(0,0)}"), Error);
}

TEST_CASE("split isomorphism") {
  const Chain2 ch = z4_z2();
  const auto [t, h] = split_iso(parse_chain_element(ch, "lower:{0,2}"));
  CHECK(t.is_zero());
  CHECK(h == RingElement::chi(ch.h_algebra(), ch.to_h_local(subset_of({0, 2}))));
  const auto [t2, h2] = split_iso(parse_chain_element(ch, "full:{0,1}"));
  CHECK(t2.to_string() == "full:{0,1} - lower:{0} - lower:{2}");
  CHECK(h2.terms().size() == 2);
}

TEST_CASE("structure suites") {
  for (const Chain2& ch : {z4_z2(), v4_c()}) {
    CAPTURE(ch.group().to_string());
    const Report s = verify_chain_structure(ch);
    CHECK_MESSAGE(s.ok(), s.to_text());
    const Report l = verify_lower_ideal(ch);
    CHECK_MESSAGE(l.ok(), l.to_text());
  }
}

TEST_CASE("T quotient") {
  const Report z4 = verify_t_quotient(z4_z2());
  CHECK_MESSAGE(z4.ok(), z4.to_text());
  CHECK(z4.result["t_dim"] == 15);
  CHECK(z4.result["ideal_dim"] == 9);
  CHECK(z4.result["quotient_dim"] == 6);
  const Report v4 = verify_t_quotient(v4_c());
  CHECK_MESSAGE(v4.ok(), v4.to_text());
  CHECK(v4.result["quotient_dim"] == 10);
  const AbelianGroup z2({2});
  const Report triv = verify_t_quotient(Chain2(z2, Subgroup::trivial(z2)));
  CHECK_MESSAGE(triv.ok(), triv.to_text());
  CHECK(triv.result["quotient_dim"] == 2);
}

TEST_CASE("c_set") {
  using S = std::set<std::pair<std::size_t, std::size_t>>;
  CHECK(c_set(2, 4) == S{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 2}});
  for (unsigned n : {2u, 3u, 5u}) {
    S one, same;
    for (std::size_t k = 1; k <= n; ++k) {
      one.emplace(k, 1);
      same.emplace(k, k);
    }
    CHECK(c_set(1, n) == one);
    CHECK(c_set(n, n) == same);
  }
  CHECK_THROWS_AS(c_set(3, 4), Error);
  const AbelianGroup z4({4});
  CHECK_THROWS_AS(Chain2(z4, Subgroup::whole(z4)), Error);
}
