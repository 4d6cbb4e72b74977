#include "doctest.h"

#include <random>

#include "gchar/exactmath/algebra.hpp"
#include "gchar/exactmath/cyclotomic.hpp"
#include "gchar/exactmath/gaussian.hpp"
#include "gchar/exactmath/matrix.hpp"
#include "gchar/exactmath/polynomial.hpp"

using namespace gchar;

namespace {

Polynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

RationalMatrix from_rows(std::vector<std::vector<long>> rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// Brute-force determinant by cofactor expansion, independent of elimination.
Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, cc++) = m(i, j);
      }
    }
    const Rational term = m(0, c) * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
  CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
  CHECK(cyclotomic_polynomial(8) == poly({1, 0, 0, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
  // X^n - 1 is the product of Phi_d over divisors d
  for (unsigned n = 1; n <= 24; ++n) {
    Polynomial prod = Polynomial::constant(1);
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
    CHECK(prod == Polynomial::monomial(n) - Polynomial::constant(1));
    CHECK(cyclotomic_polynomial(n).degree() == static_cast<long>(euler_phi(n)));
  }
}

TEST_CASE("irreducibility over Q") {
  for (unsigned n = 1; n <= 16; ++n) CHECK(is_irreducible_over_q(cyclotomic_polynomial(n)));
  CHECK_FALSE(is_irreducible_over_q(poly({-1, 0, 1})));
  CHECK_FALSE(is_irreducible_over_q(poly({1, 0, 2, 0, 1})));  // (x^2+1)^2
  CHECK_FALSE(is_irreducible_over_q(poly({4, 0, 0, 0, 1})));  // (x^2-2x+2)(x^2+2x+2)
  CHECK(is_irreducible_over_q(poly({-2, 0, 1})));
  CHECK(is_irreducible_over_q(poly({3, 1})));
  CHECK(is_irreducible_over_q(poly({1, -1, 0, 0, 0, 1})));  // x^5 - x + 1
}

TEST_CASE("cyclotomic arithmetic") {
  const auto z4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(z4 * z4 == Cyclotomic(4, Rational(-1)));
  CHECK(z4.conj() == Cyclotomic::root_of_unity(4, 3));
  const auto z6 = Cyclotomic::root_of_unity(6, 1);
  Cyclotomic sum(6);
  for (int k = 0; k < 6; ++k) sum += Cyclotomic::root_of_unity(6, k);
  CHECK(sum.is_zero());
  CHECK((z6 * z6.inverse()) == Cyclotomic(6, Rational(1)));
  const Cyclotomic x = z6 + Cyclotomic(6, make_rational(3, 2));
  CHECK(x * x.inverse() == Cyclotomic(6, Rational(1)));
  CHECK(x.conj().conj() == x);
}

TEST_CASE("lifting commutes with arithmetic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (unsigned n : {2u, 3u}) {
    for (unsigned m : {4u, 6u, 12u}) {
      if (m % n) continue;
      for (int trial = 0; trial < 10; ++trial) {
        Cyclotomic a(n), b(n);
        for (unsigned k = 0; k < n; ++k) {
          a += Cyclotomic::root_of_unity(n, k) * Rational(coef(rng));
          b += Cyclotomic::root_of_unity(n, k) * Rational(coef(rng));
        }
        CHECK((a * b).lift(m) == a.lift(m) * b.lift(m));
        CHECK((a + b).lift(m) == a.lift(m) + b.lift(m));
        CHECK(a.conj().lift(m) == a.lift(m).conj());
      }
    }
  }
}

TEST_CASE("conjugation is a ring automorphism") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (unsigned n : {4u, 5u, 8u, 12u}) {
    for (int trial = 0; trial < 10; ++trial) {
      Cyclotomic a(n), b(n);
      for (unsigned k = 0; k < n; ++k) {
        a += Cyclotomic::root_of_unity(n, k) * Rational(coef(rng));
        b += Cyclotomic::root_of_unity(n, k) * Rational(coef(rng));
      }
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).conj() == a.conj() + b.conj());
      CHECK(a.conj().conj() == a);
    }
  }
}

TEST_CASE("gaussian rationals") {
  const auto i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  const GaussianRational z(make_rational(1, 2), make_rational(-3, 4));
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK(z.to_string() == "1/2-3/4*i");
  CHECK(i.to_string() == "i");
  CHECK((-i).to_string() == "-i");
  CHECK(GaussianRational(1, 1).to_string() == "1+i");
}

TEST_CASE("rank, nullspace, solve") {
  const auto id = RationalMatrix::identity(3);
  CHECK(rank(id) == 3);
  CHECK(nullspace(id).empty());

  const auto ones = from_rows({{1, 1}, {1, 1}});
  CHECK(rank(ones) == 1);
  const auto ns = nullspace(ones);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == -1);
  CHECK(ns[0][1] == 1);

  const auto m = from_rows({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(solve(m, std::vector<Rational>{1, 3}), Error);
  const auto x = solve(m, std::vector<Rational>{1, 2});
  CHECK(x[0] + 2 * x[1] == 1);
}

TEST_CASE("rank-nullity and Bareiss agree with Gauss-Jordan on random matrices") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = make_rational(coef(rng), 1 + (trial % 3));
    if (trial % 4 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    }
    const auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == c);
    CHECK(rank(m) == rref(m).pivots.size());
    for (const auto& v : ns) {
      for (const auto& e : m.apply(v)) CHECK(e == 0);
    }
    if (r == c) CHECK(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("determinant of the singleton-plus-pair submatrix is -1") {
  // columns: the singletons {g_1},...,{g_4} and {g_3,g_4}; last row all ones
  const auto a = from_rows({{1, 0, 0, 0, 0},
                            {0, 1, 0, 0, 0},
                            {0, 0, 1, 0, 1},
                            {0, 0, 0, 1, 1},
                            {1, 1, 1, 1, 1}});
  CHECK(determinant(a) == -1);
  CHECK(cofactor_det(a) == -1);
  CHECK(rank(a) == 5);
  const auto small = from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(determinant(small) == -1);
}

TEST_CASE("algebra radical: small fixtures") {
  // Q x Q with idempotent basis
  FiniteAlgebra qq(2, [](std::size_t i, std::size_t j) {
    return i == j ? SparseVector{{i, Rational(1)}} : SparseVector{};
  });
  auto r = algebra_radical(qq);
  CHECK(r.dim() == 0);
  CHECK(r.quotient.dim() == 2);
  CHECK(r.nilpotency_index == std::optional<std::size_t>(1));

  // Q[x]/(x^2), basis 1, x
  FiniteAlgebra dual(2, [](std::size_t i, std::size_t j) {
    if (i + j >= 2) return SparseVector{};
    return SparseVector{{i + j, Rational(1)}};
  });
  auto d = algebra_radical(dual);
  REQUIRE(d.dim() == 1);
  CHECK(d.basis[0] == SparseVector{{1, Rational(1)}});
  CHECK(d.is_two_sided_ideal);
  CHECK(d.nilpotency_index == std::optional<std::size_t>(2));

  // Q[x]/(x^4): radical (x), nilpotent of index 4
  FiniteAlgebra trunc(4, [](std::size_t i, std::size_t j) {
    if (i + j >= 4) return SparseVector{};
    return SparseVector{{i + j, Rational(1)}};
  });
  auto t = algebra_radical(trunc);
  CHECK(t.dim() == 3);
  CHECK(t.nilpotency_index == std::optional<std::size_t>(4));
  CHECK(t.power_dims == std::vector<std::size_t>{3, 2, 1, 0});
}

TEST_CASE("non-associative structure constants are rejected") {
  // b0 b0 = b1, b1 b0 = b0, everything else zero
  FiniteAlgebra bad(2, [](std::size_t i, std::size_t j) {
    if (i == 0 && j == 0) return SparseVector{{1, Rational(1)}};
    if (i == 1 && j == 0) return SparseVector{{0, Rational(2)}};
    return SparseVector{};
  });
  CHECK_THROWS_AS(verify_associative(bad), Error);
}
