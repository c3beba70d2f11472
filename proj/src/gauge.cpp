#include "fusion_sos/gauge.hpp"

#include <algorithm>
#include <cmath>

#include "fusion_sos/error.hpp"

namespace fusion_sos {

namespace {

bool off_diagonal(const WeightQuery& q) {
  return q.a == q.c && q.b != q.bprime;
}

WeightQuery unit(long a, long b, long bp, long c, const Scalar& u) {
  return WeightQuery{1, 1, a, b, bp, c, u};
}

}  // namespace

Scalar gauge_weight_squared(const WeightQuery& q, const ModelParams& params) {
  if (q.n != 1 || q.m != 1 || !q.valid()) return 0;
  if (!off_diagonal(q)) {
    Scalar x = w11(q, params);
    return x * x;
  }
  const long l = q.c;
  const Scalar w = params.w();
  if (l + w == 0) throw MathError(ErrorKind::Pole, "gauge weight at l + w = 0");
  return q.u * q.u * (l - 1 + w) * (l + 1 + w) / ((l + w) * (l + w));
}

double gauge_weight_float(const WeightQuery& q, const ModelParams& params) {
  if (q.n != 1 || q.m != 1 || !q.valid()) return 0.0;
  if (!off_diagonal(q)) return to_double(w11(q, params));
  const long l = q.c;
  const double w = to_double(params.w());
  const double radicand = (l - 1 + w) * (l + 1 + w);
  if (radicand < 0) {
    throw MathError(ErrorKind::UnsupportedParameterRegion,
                    "negative radicand at " + q.describe());
  }
  return to_double(q.u) * std::sqrt(radicand) / (l + w);
}

std::complex<double> gauge_weight_complex(const WeightQuery& q, const ModelParams& params) {
  if (q.n != 1 || q.m != 1 || !q.valid()) return 0.0;
  if (!off_diagonal(q)) return to_double(w11(q, params));
  const long l = q.c;
  const double w = to_double(params.w());
  const std::complex<double> radicand((l - 1 + w) * (l + 1 + w), 0.0);
  return to_double(q.u) * std::sqrt(radicand) / (l + w);
}

double w0_weight(long a, long b, long bprime, long c, double u) {
  if (a < 0 || b < 0 || bprime < 0 || c < 0) return 0.0;
  const long l = c;
  if (std::abs(a - b) != 1 || std::abs(bprime - c) != 1 || std::abs(a - bprime) != 1 ||
      std::abs(b - c) != 1) {
    return 0.0;
  }
  if (a == l + 2 || a == l - 2) return u + 1;
  if (b == bprime) return b == l + 1 ? (-u + l + 1) / (l + 1) : (u + l + 1) / (l + 1);
  return u * std::sqrt(static_cast<double>(l * (l + 2))) / (l + 1);
}

FloatYbeSides gauge_ybe_sides(const Scalar& u, const Scalar& v, const Scalar& x,
                              const SosBoundary& bd, const ModelParams& params) {
  auto W = [&](long a, long b, long bp, long c, const Scalar& s) {
    return gauge_weight_complex(unit(a, b, bp, c, s), params);
  };
  FloatYbeSides sides{};
  const long lo = std::min({bd.a, bd.b, bd.c, bd.d, bd.e, bd.f}) - 3;
  const long hi = std::max({bd.a, bd.b, bd.c, bd.d, bd.e, bd.f}) + 3;
  for (long g = lo; g <= hi; ++g) {
    auto left = W(bd.f, g, bd.e, bd.d, v - x) * W(bd.a, bd.b, bd.f, g, u - x) *
                W(bd.b, bd.c, g, bd.d, u - v);
    auto right = W(bd.a, g, bd.f, bd.e, u - v) * W(g, bd.c, bd.e, bd.d, u - x) *
                 W(bd.a, bd.b, g, bd.c, v - x);
    sides.lhs += left;
    sides.rhs += right;
    if (g < 0) {
      sides.lhs_negative += left;
      sides.rhs_negative += right;
    }
  }
  return sides;
}

double gauge_ybe_residual(const Scalar& u, const Scalar& v, const Scalar& x,
                          const SosBoundary& bd, const ModelParams& params) {
  auto W = [&](long a, long b, long bp, long c, const Scalar& s) {
    return gauge_weight_float(unit(a, b, bp, c, s), params);
  };
  double lhs = 0.0, rhs = 0.0;
  const long lo = std::min({bd.a, bd.b, bd.c, bd.d, bd.e, bd.f}) - 3;
  const long hi = std::max({bd.a, bd.b, bd.c, bd.d, bd.e, bd.f}) + 3;
  for (long g = lo; g <= hi; ++g) {
    lhs += W(bd.f, g, bd.e, bd.d, v - x) * W(bd.a, bd.b, bd.f, g, u - x) *
           W(bd.b, bd.c, g, bd.d, u - v);
    rhs += W(bd.a, g, bd.f, bd.e, u - v) * W(g, bd.c, bd.e, bd.d, u - x) *
           W(bd.a, bd.b, g, bd.c, v - x);
  }
  return std::abs(lhs - rhs);
}

double w0_ybe_residual(double u, double v, double x, const SosBoundary& bd) {
  double lhs = 0.0, rhs = 0.0;
  const long hi = std::max({bd.a, bd.b, bd.c, bd.d, bd.e, bd.f}) + 3;
  for (long g = 0; g <= hi; ++g) {
    lhs += w0_weight(bd.f, g, bd.e, bd.d, v - x) * w0_weight(bd.a, bd.b, bd.f, g, u - x) *
           w0_weight(bd.b, bd.c, g, bd.d, u - v);
    rhs += w0_weight(bd.a, g, bd.f, bd.e, u - v) * w0_weight(g, bd.c, bd.e, bd.d, u - x) *
           w0_weight(bd.a, bd.b, g, bd.c, v - x);
  }
  return std::abs(lhs - rhs);
}

}  // namespace fusion_sos
