#include "doctest.h"

#include <algorithm>
#include <set>

#include "gchar/error.hpp"
#include "gchar/group/abelian.hpp"
#include "gchar/group/subgroup.hpp"
#include "gchar/group/subset.hpp"

using namespace gchar;

namespace {

// Every subset closed under the group law, found by brute force.
std::set<std::vector<std::size_t>> brute_subgroups(const AbelianGroup& g) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = g.size();
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    if (!subset_has(s, 0)) continue;
    bool closed = true;
    for (auto a : subset_elements(s))
      for (auto b : subset_elements(s))
        if (!subset_has(s, g.mul(a, b))) closed = false;
    if (closed) out.insert(subset_elements(s));
  }
  return out;
}

std::vector<AbelianGroup> small_groups() {
  return {AbelianGroup({1}),    AbelianGroup({2}),    AbelianGroup({3}),    AbelianGroup({4}),
          AbelianGroup({2, 2}), AbelianGroup({6}),    AbelianGroup({8}),    AbelianGroup({2, 4}),
          AbelianGroup({2, 3}), AbelianGroup({2, 2, 2}), AbelianGroup({4, 2}), AbelianGroup({9}),
          AbelianGroup({3, 3}), AbelianGroup({12}),   AbelianGroup({16}),   AbelianGroup({4, 4})};
}

}  // namespace

TEST_CASE("element numbering and group law") {
  AbelianGroup g({2, 4});
  CHECK(g.size() == 8);
  CHECK(g.exponent() == 4);
  CHECK(g.identity() == 0);
  const auto x = g.parse_element("(1,3)");
  CHECK(g.exponents(x) == std::vector<unsigned>{1, 3});
  CHECK(x == 7);
  CHECK(g.element_string(g.mul(x, x)) == "(0,2)");
  CHECK(g.order_of(x) == 4);
  CHECK(g.mul(x, g.inv(x)) == 0);
  CHECK(g.pow(x, 4) == 0);
  AbelianGroup z4({4});
  CHECK(z4.element_string(3) == "3");
  CHECK(z4.parse_element("3") == 3);
  CHECK(z4.parse_element("(2)") == 2);
  CHECK_THROWS_AS(z4.parse_element("4"), Error);
  CHECK_THROWS_AS(g.parse_element("(1)"), Error);
}

TEST_CASE("enumerate_subgroups matches brute-force closure") {
  for (const auto& g : small_groups()) {
    if (g.size() > 16) continue;
    const auto subs = enumerate_subgroups(g);
    std::set<std::vector<std::size_t>> got;
    for (const auto& s : subs) got.insert(s.elements());
    CHECK(got.size() == subs.size());
    CHECK(got == brute_subgroups(g));
    CHECK(std::is_sorted(subs.begin(), subs.end()));
  }
  CHECK(enumerate_subgroups(AbelianGroup({1})).size() == 1);
  CHECK(enumerate_subgroups(AbelianGroup({2, 2})).size() == 5);
  const auto z4 = enumerate_subgroups(AbelianGroup({4}));
  REQUIRE(z4.size() == 3);
  CHECK(z4[0].elements() == std::vector<std::size_t>{0});
  CHECK(z4[1].elements() == std::vector<std::size_t>{0, 2});
  CHECK(z4[2].elements() == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("subgroup lattice is closed under meet and join") {
  for (const auto& g : small_groups()) {
    const auto subs = enumerate_subgroups(g);
    std::set<std::vector<std::size_t>> all;
    for (const auto& s : subs) all.insert(s.elements());
    for (const auto& a : subs) {
      for (const auto& b : subs) {
        std::vector<std::size_t> meet;
        std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                              b.elements().end(), std::back_inserter(meet));
        CHECK(all.count(meet) == 1);
        std::vector<std::size_t> gens = a.elements();
        gens.insert(gens.end(), b.elements().begin(), b.elements().end());
        CHECK(all.count(Subgroup::generated(g, gens).elements()) == 1);
      }
    }
  }
}

TEST_CASE("cyclic p-groups have k+1 subgroups") {
  CHECK(enumerate_subgroups(AbelianGroup({2})).size() == 2);
  CHECK(enumerate_subgroups(AbelianGroup({8})).size() == 4);
  CHECK(enumerate_subgroups(AbelianGroup({16})).size() == 5);
  CHECK(enumerate_subgroups(AbelianGroup({27})).size() == 4);
  CHECK(enumerate_subgroups(AbelianGroup({25})).size() == 3);
}

TEST_CASE("minimal subgroups") {
  CHECK_THROWS_AS(minimal_subgroups(AbelianGroup({1})), Error);
  const auto z4 = minimal_subgroups(AbelianGroup({4}));
  REQUIRE(z4.size() == 1);
  CHECK(z4[0].elements() == std::vector<std::size_t>{0, 2});
  CHECK(minimal_subgroups(AbelianGroup({2, 2})).size() == 3);
  const auto z6 = minimal_subgroups(AbelianGroup({6}));
  REQUIRE(z6.size() == 2);
  CHECK(z6[0].size() == 2);
  CHECK(z6[1].size() == 3);
  // oracle: subgroups whose only proper subgroup is trivial
  for (const auto& g : small_groups()) {
    if (g.size() == 1) continue;
    const auto subs = enumerate_subgroups(g);
    std::vector<std::vector<std::size_t>> expect;
    for (const auto& s : subs) {
      if (s.is_trivial()) continue;
      bool minimal = true;
      for (const auto& t : subs)
        if (!t.is_trivial() && t != s && t.is_subgroup_of(s)) minimal = false;
      if (minimal) expect.push_back(s.elements());
    }
    std::vector<std::vector<std::size_t>> got;
    for (const auto& s : minimal_subgroups(g)) got.push_back(s.elements());
    CHECK(got == expect);
  }
}

TEST_CASE("cyclicity of subgroups and quotients") {
  AbelianGroup z4({4});
  QuotientGroup q(z4, parse_subgroup(z4, "(2)"));
  REQUIRE(q.cyclic_generator());
  CHECK(q.representatives()[*q.cyclic_generator()] == 1);
  AbelianGroup v4({2, 2});
  CHECK_FALSE(QuotientGroup(v4, Subgroup::trivial(v4)).cyclic_generator());
  CHECK_FALSE(Subgroup::whole(v4).cyclic_generator());
  // brute-force oracle: cyclic iff some element order equals the size
  AbelianGroup g({2, 4});
  for (const auto& n : enumerate_subgroups(g)) {
    QuotientGroup qq(g, n);
    unsigned max_order = 1;
    for (std::size_t c = 0; c < qq.size(); ++c) max_order = std::max(max_order, qq.order_of(c));
    CHECK(qq.cyclic_generator().has_value() == (max_order == qq.size()));
  }
  QuotientGroup special(g, parse_subgroup(g, "(1,2)"));
  CHECK(special.size() == 4);
  CHECK(special.cyclic_generator().has_value());
}

TEST_CASE("quotient coset representatives partition G") {
  for (const auto& g : small_groups()) {
    for (const auto& n : enumerate_subgroups(g)) {
      QuotientGroup q(g, n);
      CHECK(q.size() * n.size() == g.size());
      CHECK(q.representatives()[0] == g.identity());
      std::vector<std::size_t> count(q.size(), 0);
      for (std::size_t x = 0; x < g.size(); ++x) {
        ++count[q.coset_of(x)];
        CHECK(q.representatives()[q.coset_of(x)] <= x);
      }
      for (auto c : count) CHECK(c == n.size());
      const auto p = q.presentation();
      CHECK(p.group.size() == q.size());
      for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b)
          CHECK(p.from_local[q.mul(a, b)] == p.group.mul(p.from_local[a], p.from_local[b]));
    }
  }
}

TEST_CASE("jordan-holder length") {
  CHECK(jordan_holder_length(AbelianGroup({1})) == 0);
  CHECK(jordan_holder_length(AbelianGroup({4})) == 2);
  CHECK(jordan_holder_length(AbelianGroup({2, 2})) == 2);
  CHECK(jordan_holder_length(AbelianGroup({12})) == 3);
}

TEST_CASE("duality projection fixtures") {
  AbelianGroup z4({4});
  const auto pi = duality_projection(z4, parse_subgroup(z4, "(2)"));
  CHECK(pi == std::vector<std::size_t>{0, 2, 0, 2});

  // V4 with a = (1,0), b = (0,1), c = (1,1) onto H = {1, c}
  AbelianGroup v4({2, 2});
  const std::size_t one = 0, a = v4.parse_element("(1,0)"), b = v4.parse_element("(0,1)"),
                    c = v4.parse_element("(1,1)");
  const auto pv = duality_projection(v4, parse_subgroup(v4, "(1,1)"));
  CHECK(pv[one] == one);
  CHECK(pv[a] == c);
  CHECK(pv[b] == c);
  CHECK(pv[c] == one);

  // Z_{nm} -> Z_n is reduction mod n onto the subgroup generated by m
  AbelianGroup z12({12});
  const auto p12 = duality_projection(z12, parse_subgroup(z12, "(4)"));
  for (std::size_t i = 0; i < 12; ++i) CHECK(p12[i] == 4 * (i % 3));
}

TEST_CASE("duality projection is a surjective homomorphism") {
  for (const auto& g : small_groups()) {
    for (const auto& h : enumerate_subgroups(g)) {
      const auto pi = duality_projection(g, h);
      std::set<std::size_t> image;
      for (std::size_t x = 0; x < g.size(); ++x) {
        CHECK(h.contains(pi[x]));
        image.insert(pi[x]);
        for (std::size_t y = 0; y < g.size(); ++y) CHECK(pi[g.mul(x, y)] == g.mul(pi[x], pi[y]));
      }
      CHECK(image.size() == h.size());
      if (h.is_whole()) {
        for (std::size_t x = 0; x < g.size(); ++x) CHECK(pi[x] == x);
      }
    }
  }
  AbelianGroup v4({2, 2});
  const auto h = parse_subgroup(v4, "(1,0)");
  const auto pi = duality_projection(v4, h);
  std::set<std::size_t> restricted;
  for (auto x : h.elements()) restricted.insert(pi[x]);
  CHECK(restricted.size() == 2);
}

TEST_CASE("explicit duality basis") {
  AbelianGroup v4({2, 2});
  const auto h = parse_subgroup(v4, "(1,1)");
  CHECK(duality_projection(v4, h, std::vector<std::size_t>{v4.parse_element("(1,1)")}) ==
        duality_projection(v4, h));
  CHECK_THROWS_AS(duality_projection(v4, h, std::vector<std::size_t>{v4.parse_element("(1,0)")}), Error);
  // another basis of the whole group gives a different (still bijective) pi
  const auto whole = Subgroup::whole(v4);
  const auto pi = duality_projection(
      v4, whole, std::vector<std::size_t>{v4.parse_element("(1,0)"), v4.parse_element("(1,1)")});
  CHECK(pi[v4.parse_element("(1,0)")] == v4.parse_element("(0,1)"));
  CHECK(std::set<std::size_t>(pi.begin(), pi.end()).size() == 4);
}

TEST_CASE("subset helpers") {
  AbelianGroup z4({4});
  const Subset a = parse_subset(z4, "{0,1}");
  const Subset b = parse_subset(z4, "{1,2}");
  CHECK(subset_string(z4, subset_product(z4, a, b)) == "{1,2,3}");
  CHECK(subset_string(z4, 0) == "{}");
  CHECK(parse_subset(z4, "{}") == 0);
  CHECK_THROWS_AS(parse_subset(z4, "{0,0}"), Error);
  AbelianGroup v4({2, 2});
  const Subset s = parse_subset(v4, "{(0,1),(1,0)}");
  CHECK(subset_string(v4, s) == "{(0,1),(1,0)}");
}
