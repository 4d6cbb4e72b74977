#include "doctest.h"

#include <random>

#include "gchar/classfn/classfn.hpp"
#include "gchar/error.hpp"

using namespace gchar;

namespace {

Cyclotomic q(unsigned order, long v) { return Cyclotomic(order, Rational(v)); }

const auto all_chains = all_subgroup_chains;

}  // namespace

TEST_CASE("chains") {
  const AbelianGroup z4({4});
  const auto c = parse_chain(z4, "(2)");
  CHECK(c.d() == 2);
  CHECK(c.layer(0) == 0);
  CHECK(c.layer(2) == 1);
  CHECK(c.layer(1) == 2);
  CHECK(parse_chain(z4, "").d() == 1);
  CHECK_THROWS_AS(parse_chain(z4, "(0)"), Error);
  CHECK_THROWS_AS(parse_chain(z4, "(1)"), Error);
  CHECK(all_chains(z4).size() == 2);
  CHECK(all_chains(AbelianGroup({8})).size() == 4);
  const auto r = c.restrict_to(parse_subgroup(z4, "2"));
  CHECK(r.level(2).size() == 2);
  CHECK(r.level(1).size() == 2);
}

TEST_CASE("triangular storage") {
  TriangularMatrix m(3, 1);
  CHECK(m.stored() == 6);
  m.at(1, 2) = q(1, 5);
  CHECK(m.at(1, 2) == q(1, 5));
  CHECK(m.at(0, 2).is_zero());
  CHECK_THROWS_AS(m.at(2, 1), Error);
}

TEST_CASE("constant c_n") {
  const AbelianGroup z4({4});
  const auto chain = parse_chain(z4, "(2)");
  const auto c1 = constant_cn(chain, 1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) CHECK(c1.at(0).at(i, j) == q(4, 1));
  CHECK(c1.at(1).at(1, 1).is_zero());
  CHECK(c1.at(1).at(2, 2) == q(4, 1));
  CHECK(constant_cn(chain, 0).is_zero());
  CHECK(c1.respects_zero_blocks());
  const auto f = glider_char_chain2(chain, subset_of({0, 1}));
  CHECK(constant_cn(chain, 3).hadamard(f) == f * Rational(3));
}

TEST_CASE("subset gliders") {
  const AbelianGroup z2({2});
  const auto chain = parse_chain(z2, "");
  const auto f = glider_char_subset(chain, singleton(1));
  CHECK(f.at(0).to_string() == "[[1, 1], [., 1]]");
  CHECK(f.at(1).at(1, 1) == q(2, -1));
  CHECK(f.at(1).at(0, 0).is_zero());
  const auto e = glider_char_subset(chain, 0);
  CHECK(e.at(0).to_string() == "[[1, 0], [., 0]]");
  CHECK(e.at(1).is_zero());
  const AbelianGroup z4({4});
  const auto full = glider_char_subset(parse_chain(z4, ""), full_subset(4));
  for (std::size_t x = 1; x < 4; ++x) CHECK(full.at(x).at(1, 1).is_zero());
  CHECK_THROWS_AS(glider_char_chain2(chain, 1), Error);
}

TEST_CASE("chain2 gliders") {
  const AbelianGroup z4({4});
  const auto chain = parse_chain(z4, "(2)");
  const auto f = glider_char_chain2(chain, subset_of({0, 1}));
  CHECK(f.at(0).to_string() == "[[2, 2, 1], [., 2, 2], [., ., 2]]");
  const auto g = glider_char_chain2(chain, subset_of({0, 2}));
  CHECK(g.at(0).to_string() == "[[2, 1, 1], [., 1, 1], [., ., 2]]");
  const auto all = glider_char_chain2(chain, full_subset(4));
  CHECK(all.at(0).to_string() == "[[4, 2, 1], [., 2, 2], [., ., 4]]");
  const AbelianGroup v4({2, 2});
  const auto whole = glider_char_chain2(parse_chain(v4, "(1,1)"), full_subset(4));
  CHECK(whole.at(0).to_string() == "[[4, 2, 1], [., 2, 2], [., ., 4]]");
}

TEST_CASE("inner products") {
  for (const AbelianGroup& g : {AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({4}), AbelianGroup({2, 2}),
                                AbelianGroup({5}), AbelianGroup({6})}) {
    const Report r = verify_inner_products(parse_chain(g, ""));
    CHECK_MESSAGE(r.ok(), r.to_text());
  }
  const AbelianGroup z4({4});
  const Report r = verify_inner_products(parse_chain(z4, "(2)"));
  CHECK_MESSAGE(r.ok(), r.to_text());
  CHECK(r.result["pairs"] == json::parse("[[1,1],[2,1],[2,2],[3,2],[4,2]]"));

  // conjugate symmetry on mixed pairs
  const auto chain = parse_chain(AbelianGroup({3}), "");
  for (Subset a = 1; a < 8; ++a)
    for (Subset b = 1; b < 8; ++b) {
      const auto fa = glider_char_subset(chain, a), fb = glider_char_subset(chain, b);
      const auto x = inner_product(fa, fb), y = inner_product(fb, fa);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = i; j < 2; ++j) REQUIRE(x.at(i, j) == y.at(i, j).conj());
    }
}

TEST_CASE("induction") {
  const AbelianGroup z2({2});
  const auto chain = parse_chain(z2, "");
  // H = G is the identity
  const auto f = glider_char_subset(chain, singleton(1));
  CHECK(induce(f, chain) == f);
  // H trivial: twice the value at 1, zero elsewhere
  const Subgroup e = Subgroup::trivial(z2);
  const SubgroupChain ec = chain.restrict_to(e);
  GenClassFunction phi = constant_cn(ec, 1);
  const auto ind = induce(phi, chain);
  CHECK(ind.at(0) == phi.at(0) * Rational(2));
  CHECK(ind.at(1).is_zero());
  CHECK(induce(phi + phi, chain) == ind + ind);
  CHECK_THROWS_AS(induce(f, parse_chain(AbelianGroup({2}), "").restrict_to(e)), Error);
}

TEST_CASE("chi tilde") {
  const AbelianGroup z4({4});
  const auto chain = parse_chain(z4, "(2)");
  const auto t = chi_cyclic_tilde(Subgroup::trivial(z4), chain);
  CHECK(t.at(0).to_string() == "[[1, 1, 1], [., 1, 1], [., ., 1]]");
  const auto w = chi_cyclic_tilde(Subgroup::whole(z4), chain);
  CHECK(w.at(1).to_string() == "[[0, 0, 0], [., 0, 0], [., ., 4]]");
  CHECK(w.at(2).is_zero());
  CHECK(w.at(0).is_zero());
  CHECK_THROWS_AS(chi_cyclic_tilde(Subgroup::whole(AbelianGroup({2, 2})), parse_chain(AbelianGroup({2, 2}), "")),
                  Error);
}

TEST_CASE("artin identity on every chain") {
  for (const AbelianGroup& g : {AbelianGroup({2}), AbelianGroup({4}), AbelianGroup({2, 2}), AbelianGroup({6}),
                                AbelianGroup({8}), AbelianGroup({2, 4})}) {
    for (const auto& chain : all_chains(g)) {
      CAPTURE(chain.to_string());
      const Report r = artin_check(chain);
      CHECK_MESSAGE(r.ok(), r.to_text());
    }
  }
}

TEST_CASE("artin decomposition") {
  const AbelianGroup z4({4});
  for (const auto& chain : all_chains(z4)) {
    const auto f = chain.d() == 1 ? glider_char_subset(chain, singleton(1)) : glider_char_chain2(chain, singleton(1));
    const auto cert = artin_decompose(f);
    CHECK(!cert.terms.empty());
  }
}

TEST_CASE("realization") {
  const AbelianGroup z4({4});
  const CharAlgebra alg(z4, ContractionMode::ModEmpty);
  const auto chain = parse_chain(z4, "");
  CHECK(realize(RingElement::chi(alg, singleton(1))) == glider_char_subset(chain, singleton(1)));
  const auto k = parse_ring_element(alg, "{0,1} + {2,3} - {0,3} - {1,2}");
  CHECK(realize(k).is_zero());
  std::mt19937 rng(1);
  std::uniform_int_distribution<Subset> pick(1, 15);
  for (int t = 0; t < 20; ++t) {
    RingElement x(alg), y(alg);
    x.add_term(pick(rng), make_rational(t - 7, 3));
    y.add_term(pick(rng), 2);
    REQUIRE(realize(x + y) == realize(x) + realize(y));
  }

  const Chain2 c2(z4, parse_subgroup(z4, "2"));
  const auto lower = realize(parse_chain_element(c2, "lower:{0}"));
  CHECK(lower.at(0).to_string() == "[[1, 1, 0], [., 1, 0], [., ., 0]]");
  const auto full = realize(parse_chain_element(c2, "full:{0,1}"));
  CHECK(full == glider_char_chain2(parse_chain(z4, "(2)"), subset_of({0, 1})));
  CHECK(full.respects_zero_blocks());
}
