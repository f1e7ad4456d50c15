#include "doctest.h"
#include "hopf/lattice.hpp"
#include "hopf/linalg.hpp"
#include "hopf/polynomial.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <stdexcept>

using namespace hopf;
using namespace testing_support;

TEST_SUITE_BEGIN("exact_linalg");

TEST_CASE("determinant examples") {
  CHECK(determinant(IntMatrix::identity(3)) == 1);
  CHECK(determinant(cartan_an(3)) == oracle::cartan_det_recursion(3));
  CHECK(determinant(cartan_an(3)) == 4);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}) == 0);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);  // needs a row swap
}

TEST_CASE("determinant agrees with cofactor expansion") {
  auto bad = for_all(kDefaultSeed, 200, [](Rng& rng) {
    IntMatrix m = random_matrix(rng, uniform(rng, 1, 7), -4, 4);
    return determinant(m) == oracle::cofactor_det(m);
  });
  CHECK(bad == -1);
}

TEST_CASE("determinant survives 64-bit overflow") {
  IntMatrix m{{1000000007, 999999999}, {123456789, 987654321}};
  m *= Integer(1000000000);
  CHECK(determinant(m) == oracle::cofactor_det(m));
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(cartan_an(5)));
  CHECK_FALSE(is_positive_definite(IntMatrix{{0}}));
  IntMatrix c4 = IntMatrix{{2, 1, 0, 1}, {1, 2, 1, 0}, {0, 1, 2, 1}, {1, 0, 1, 2}};
  CHECK(oracle::cofactor_det(c4) == 0);
  CHECK_FALSE(is_positive_definite(c4));
  CHECK_THROWS_AS(is_positive_definite(IntMatrix{{1, 2}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("positive definiteness matches rational elimination on 1000 matrices") {
  auto bad = for_all(kDefaultSeed + 1, 1000, [](Rng& rng) {
    IntMatrix m = random_symmetric(rng, uniform(rng, 1, 6), -3, 3);
    // bias toward definite: push the diagonal up half the time
    if (coin_sign(rng) > 0)
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += 6;
    return is_positive_definite(m) == oracle::pd_by_rational_elimination(m);
  });
  CHECK(bad == -1);
}

TEST_CASE("leading minors are cofactor minors") {
  IntMatrix m = cartan_an(6);
  auto minors = leading_minors(m);
  REQUIRE(minors.size() == 6);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(minors[k - 1] == oracle::cofactor_det(m.leading(k)));
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(IntMatrix{{2}}) == IntPolynomial{-2, 1});
  IntMatrix k3{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  CHECK(char_poly(k3) == IntPolynomial{-2, -3, 0, 1});
  CHECK(char_poly(IntMatrix(2, 2)) == IntPolynomial{0, 0, 1});
  CHECK_THROWS_AS(char_poly(IntMatrix(1, 2)), std::invalid_argument);
}

TEST_CASE("characteristic polynomial matches Faddeev-LeVerrier and det at zero") {
  auto bad = for_all(kDefaultSeed + 2, 150, [](Rng& rng) {
    const std::size_t n = uniform(rng, 1, 6);
    IntMatrix m = random_matrix(rng, n, -3, 3);
    IntPolynomial p = char_poly(m);
    auto ref = oracle::faddeev_leverrier(m);
    for (std::size_t k = 0; k <= n; ++k)
      if (Rational(p.coeff(k)) != ref[k]) return false;
    Integer expect = determinant(m);
    if (n % 2 == 1) expect = -expect;
    return p.evaluate(0) == expect;
  });
  CHECK(bad == -1);
}

TEST_CASE("determinant pencil") {
  CHECK(poly_det_pencil(IntMatrix{{1}}) == IntPolynomial{1, -1});
  CHECK(poly_det_pencil(IntMatrix{{1, -1}, {0, 1}}) == IntPolynomial{1, -1, 1});
  CHECK(poly_det_pencil(IntMatrix(2, 2)).is_zero());
  CHECK_THROWS_AS(poly_det_pencil(IntMatrix(2, 1)), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
  IntPolynomial a{1, -1, 1}, b{1, 1};
  CHECK(a * b == IntPolynomial{1, 0, 0, 1});
  CHECK(IntPolynomial::exact_divide(a * b, b) == a);
  CHECK_THROWS_AS(IntPolynomial::exact_divide(a, IntPolynomial{0, 2}), std::domain_error);
  CHECK(a.to_string() == "t^2 - t + 1");
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(a.evaluate(-1) == 3);
}

TEST_CASE("inertia and integer inverse") {
  Inertia h = inertia(IntMatrix{{0, 1}, {1, 0}});
  CHECK(h.positive == 1);
  CHECK(h.negative == 1);
  CHECK(h.zero == 0);
  Inertia z = inertia(IntMatrix{{1, 1}, {1, 1}});
  CHECK(z.zero == 1);
  auto inv = integer_inverse(cartan_an(1));
  CHECK_FALSE(inv.has_value());
  IntMatrix u{{1, 2}, {0, -1}};
  auto ui = integer_inverse(u);
  REQUIRE(ui.has_value());
  CHECK(u * *ui == IntMatrix::identity(2));
}

TEST_CASE("matrix container") {
  IntMatrix m{{1, 2}, {3, 4}};
  CHECK(m.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
  CHECK(IntMatrix::permutation({1, 0}) == IntMatrix{{0, 1}, {1, 0}});
  CHECK(congruence_action(IntMatrix::identity(2), m) == m.transpose() * m);
  CHECK(bilinear({1, 1}, m, {1, 0}) == 4);
  CHECK(m.bordered().rows() == 3);
}

TEST_SUITE_END();
