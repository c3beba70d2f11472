#include <doctest.h>

#include "fusion_sos/error.hpp"
#include "fusion_sos/matrix.hpp"
#include "fusion_sos/polynomial.hpp"
#include "fusion_sos/scalar.hpp"
#include "support.hpp"

using namespace fusion_sos;
using fusion_sos::testing::Gen;

TEST_CASE("scalar parsing and printing") {
  CHECK(parse_scalar("3/6") == rational(1, 2));
  CHECK(parse_scalar("-7") == -7);
  CHECK(parse_scalar("-4/8") == rational(-1, 2));
  CHECK(to_string(rational(6, -4)) == "-3/2");
  CHECK(to_string(Scalar(5)) == "5");
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
  CHECK(is_integer(rational(8, 4)));
  CHECK_FALSE(is_integer(rational(1, 3)));
  CHECK(to_long(rational(-12, 4)) == -3);
  CHECK(to_double(rational(1, 4)) == doctest::Approx(0.25));
}

TEST_CASE("rational() canonicalizes") {
  Scalar x = rational(16, 8);
  CHECK(x == 2);
  CHECK(x.get_den() == 1);
  CHECK(rational(3, -6) == rational(-1, 2));
}

TEST_CASE("binomial agrees with Pascal's rule") {
  for (long n = 1; n <= 12; ++n)
    for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
}

TEST_CASE("mat_mul matches the schoolbook product") {
  Gen g(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto r = g.integer(1, 5), k = g.integer(1, 5), c = g.integer(1, 5);
    Matrix a = g.matrix(r, k), b = g.matrix(k, c);
    CHECK(a * b == testing::schoolbook_mul(a, b));
  }
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), MathError);
}

TEST_CASE("kron matches the four-index loop and mixed-product rule") {
  Gen g(12);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = g.matrix(2, 3), b = g.matrix(3, 2), c = g.matrix(3, 2), d = g.matrix(2, 2);
    CHECK(kron(a, b) == testing::kron_loop(a, b));
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("solve_exact recovers random solutions") {
  Gen g(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto n = g.integer(1, 6);
    Matrix a = g.matrix(n, n);
    if (determinant(a) == 0) continue;
    Matrix x = g.matrix(n, 2);
    CHECK(solve_exact(a, a * x) == x);
  }
}

TEST_CASE("solve_exact reports singular and inconsistent systems") {
  Matrix sing{{1, 2}, {2, 4}};
  try {
    solve_exact(sing, Matrix{{1}, {2}});
    FAIL("expected throw");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
  Matrix tall{{1, 0}, {0, 1}, {1, 1}};
  CHECK(solve_exact(tall, Matrix{{1}, {2}, {3}}) == Matrix{{1}, {2}});
  try {
    solve_exact(tall, Matrix{{1}, {2}, {4}});
    FAIL("expected throw");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::Inconsistent);
  }
}

TEST_CASE("determinant is multiplicative and rank is consistent") {
  Gen g(14);
  for (int trial = 0; trial < 15; ++trial) {
    auto n = g.integer(1, 5);
    Matrix a = g.matrix(n, n), b = g.matrix(n, n);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
    CHECK(determinant(a.transpose()) == determinant(a));
    CHECK((rank(a) == static_cast<std::size_t>(n)) == (determinant(a) != 0));
  }
  CHECK(rank(Matrix{{1, 2, 3}, {2, 4, 6}}) == 1);
}

TEST_CASE("power and commutator") {
  Gen g(15);
  Matrix a = g.matrix(3, 3);
  CHECK(power(a, 0) == Matrix::identity(3));
  CHECK(power(a, 3) == a * a * a);
  CHECK(commutator(a, power(a, 2)).is_zero());
  CHECK((a + a - a) == a);
  CHECK(a.trace() == a(0, 0) + a(1, 1) + a(2, 2));
}

TEST_CASE("polynomial arithmetic") {
  Gen g(16);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial p = g.polynomial(g.integer(0, 5)), q = g.polynomial(g.integer(0, 4));
    CHECK(p * q == testing::schoolbook_poly_mul(p, q));
    Scalar z = g.rational();
    CHECK((p * q).evaluate(z) == p.evaluate(z) * q.evaluate(z));
    CHECK((p + q).evaluate(z) == p.evaluate(z) + q.evaluate(z));
    Scalar h = g.rational();
    CHECK(poly_shift(p, h).evaluate(z) == p.evaluate(z + h));
    if (!q.is_zero()) {
      auto [quot, rem] = divmod(p, q);
      CHECK(quot * q + rem == p);
      CHECK(rem.degree() < q.degree());
    }
  }
  CHECK((Polynomial{1, 2} - Polynomial{1, 2}).degree() == -1);
  std::vector<Scalar> roots = {1, rational(-2, 3), 5};
  Polynomial r = Polynomial::from_roots(roots);
  for (const auto& x : roots) CHECK(r.evaluate(x) == 0);
  CHECK(r.coeff(3) == 1);
}

TEST_CASE("lagrange interpolation reproduces polynomials") {
  Gen g(17);
  Polynomial p = g.polynomial(4);
  std::vector<Scalar> xs, ys;
  for (int k = 0; k < 5; ++k) {
    xs.push_back(rational(2 * k - 3, 5));
    ys.push_back(p.evaluate(xs.back()));
  }
  CHECK(lagrange_interpolate(xs, ys) == p);
}

TEST_CASE("coefficient_vector refuses lossy truncation") {
  Polynomial p{1, 2, 3};
  CHECK(p.coefficient_vector(4).size() == 5);
  try {
    p.coefficient_vector(1);
    FAIL("expected throw");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::LossyTruncation);
  }
}
