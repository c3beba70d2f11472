#include <doctest.h>

#include <cmath>

#include "fusion_sos/error.hpp"
#include "fusion_sos/gauge.hpp"
#include "fusion_sos/sos.hpp"
#include "support.hpp"

using namespace fusion_sos;

TEST_CASE("gauge weights square to the exact squared form") {
  ModelParams p = ModelParams::from_w(1, rational(1, 2));
  for (long a = 3; a <= 6; ++a)
    for (long b : {a - 1, a + 1})
      for (long bp : {a - 1, a + 1})
        for (long c : {b - 1, b + 1}) {
          WeightQuery q{1, 1, a, b, bp, c, rational(2, 5)};
          if (!q.valid()) continue;
          double f = gauge_weight_float(q, p);
          CHECK(f * f == doctest::Approx(to_double(gauge_weight_squared(q, p))).epsilon(1e-12));
          CHECK(std::abs(gauge_weight_complex(q, p) - std::complex<double>(f, 0)) < 1e-12);
        }
}

TEST_CASE("float mode refuses negative radicands, complex mode does not") {
  ModelParams p = ModelParams::from_w(1, rational(1, 2));
  bool saw_refusal = false;
  for (long a = -6; a <= 6 && !saw_refusal; ++a)
    for (long b : {a - 1, a + 1})
      for (long bp : {a - 1, a + 1})
        for (long c : {b - 1, b + 1})
          for (const Scalar& u : std::vector<Scalar>{rational(1, 3), rational(-7, 2), 5}) {
            WeightQuery q{1, 1, a, b, bp, c, u};
            if (saw_refusal || !q.valid() || gauge_weight_squared(q, p) >= 0) continue;
            try {
              gauge_weight_float(q, p);
            } catch (const MathError& e) {
              saw_refusal = e.kind() == ErrorKind::UnsupportedParameterRegion;
            }
            std::complex<double> z = gauge_weight_complex(q, p);
            CHECK(z.real() * z.real() - z.imag() * z.imag() ==
                  doctest::Approx(to_double(gauge_weight_squared(q, p))));
          }
  CHECK(saw_refusal);
}

TEST_CASE("gauge model satisfies Yang-Baxter in floating point") {
  ModelParams p = ModelParams::from_w(1, rational(1, 2));
  SosBoundary bd{4, 5, 6, 5, 4, 5};
  CHECK(gauge_ybe_residual(rational(1, 3), rational(-2, 5), rational(3, 7), bd, p) < 1e-9);
}

TEST_CASE("W0 closed form") {
  // Diagonal a = c weights and the off-diagonal entry u·sqrt(l(l+2))/(l+1).
  const double u = 0.3;
  for (long l = 1; l <= 5; ++l) {
    double off = w0_weight(l + 1, l, l, l - 1, u);
    CHECK(std::abs(w0_weight(l - 1, l, l, l + 1, u)) == doctest::Approx(std::abs(off)));
    ModelParams p = ModelParams::from_w(1, 1);
    WeightQuery q{1, 1, l, l + 1, l - 1, l, rational(3, 10)};
    CHECK(gauge_weight_float(q, p) == doctest::Approx(w0_weight(l, l + 1, l - 1, l, u)).epsilon(1e-12));
  }
  CHECK(w0_ybe_residual(0.3, -0.2, 0.45, SosBoundary{3, 4, 5, 4, 3, 4}) < 1e-12);
}

TEST_CASE("degeneration as w approaches 1") {
  for (const Scalar& w : std::vector<Scalar>{Scalar(1) - rational(1, 1000000), Scalar(1) + rational(1, 1000000)})
    for (const SosBoundary& bd : {SosBoundary{1, 0, 1, 0, 1, 0}, SosBoundary{0, 1, 0, 1, 0, 1}}) {
      auto s = gauge_ybe_sides(rational(1, 3), rational(-1, 4), rational(1, 5), bd, ModelParams::from_w(1, w));
      CHECK(std::abs(s.lhs - s.rhs) < 1e-6);
      CHECK(std::abs(s.lhs_negative) < 1e-5);
      CHECK(std::abs(s.rhs_negative) < 1e-5);
    }
}
