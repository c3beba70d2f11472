#pragma once

#include <complex>

#include "fusion_sos/sos.hpp"

namespace fusion_sos {

/// Gauge-transformed W̃^(1,1) weights. The off-diagonal family carries
/// u·√((l−1+w)(l+1+w))/(l+w); the other families equal w11.

/// Exact square of W̃ (signs dropped).
Scalar gauge_weight_squared(const WeightQuery& q, const ModelParams& params);

/// Double precision. Throws MathError(UnsupportedParameterRegion) on a
/// negative radicand.
double gauge_weight_float(const WeightQuery& q, const ModelParams& params);

/// Principal square root of the radicand, so the weight stays defined when
/// (l−1+w)(l+1+w) < 0. The choice depends on l alone, hence is still a gauge.
std::complex<double> gauge_weight_complex(const WeightQuery& q, const ModelParams& params);

/// The w = 1 model on nonnegative heights, evaluated from its own closed form;
/// zero if any label is negative.
double w0_weight(long a, long b, long bprime, long c, double u);

struct FloatYbeSides {
  std::complex<double> lhs;
  std::complex<double> rhs;
  /// Part of each side coming from terms with a negative internal label g.
  std::complex<double> lhs_negative;
  std::complex<double> rhs_negative;
};

/// (1,1,1) SOS Yang–Baxter sides for the complex-valued W̃.
FloatYbeSides gauge_ybe_sides(const Scalar& u, const Scalar& v, const Scalar& x,
                              const SosBoundary& bd, const ModelParams& params);

/// |lhs − rhs| of the (1,1,1) SOS Yang–Baxter equation with W̃ in float mode.
double gauge_ybe_residual(const Scalar& u, const Scalar& v, const Scalar& x,
                          const SosBoundary& bd, const ModelParams& params);

/// |lhs − rhs| for the W₀ model, sum restricted to g ≥ 0.
double w0_ybe_residual(double u, double v, double x, const SosBoundary& bd);

}  // namespace fusion_sos
