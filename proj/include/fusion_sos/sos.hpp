#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fusion_sos/scalar.hpp"
#include "fusion_sos/vertex.hpp"

namespace fusion_sos {

/// Face (a b / b′ c) with spectral parameter u for the W^(n,m) weights.
struct WeightQuery {
  int n = 1;
  int m = 1;
  long a = 0;
  long b = 0;
  long bprime = 0;
  long c = 0;
  Scalar u;

  bool valid() const;
  std::string describe() const;
};

/// |d| ≤ n and d ≡ n (mod 2).
bool adjacent(long d, int n);

/// ∏_{j=0}^{k−1} (y + sign·j).
Scalar signed_pochhammer(const Scalar& y, long k, int sign);

/// Rising factorial (y)_k for any integer k; (y)_k = 1/(y+k)_{−k} when k < 0.
/// Throws MathError(Pole) on a vanishing denominator.
Scalar rising(const Scalar& y, long k);

/// Γ(p)/Γ(q) for p − q ∈ ℤ, as a rising factorial.
Scalar gamma_ratio(const Scalar& p, const Scalar& q);

Scalar w11(const WeightQuery& q, const ModelParams& params);
Scalar w_n1(const WeightQuery& q, const ModelParams& params);

/// Sum over ±1-step paths 0 → κ₊−κ₋ of length κ₊+κ₋ of ∏ 1/(x + c′_i), i ≥ 1.
Scalar path_function_bruteforce(long kappa_plus, long kappa_minus, const Scalar& x);
/// C(κ₊+κ₋, κ₊) / (∏_{i=1}^{κ₊}(x+i) ∏_{j=1}^{κ₋}(x−j)).
Scalar path_function_closed(long kappa_plus, long kappa_minus, const Scalar& x);

Scalar w_nm_sum(const WeightQuery& q, const ModelParams& params);

enum class HyperRegime {
  Auto,        ///< choose by b+b′ vs a+c; evaluate both and compare at equality
  LowerLeft,   ///< table for b+b′ ≤ a+c
  UpperRight,  ///< table for b+b′ ≥ a+c
};

/// C^(n,m) · ₉F₈(…|1). Throws MathError(DegenerateParameterPoint) when a lower
/// parameter vanishes before termination, MathError(Inconsistent) if the two
/// tables disagree at b+b′ = a+c.
Scalar w_nm_hypergeometric(const WeightQuery& q, const ModelParams& params,
                           HyperRegime regime = HyperRegime::Auto);

/// Terminating ₚF_q(upper; lower | 1).
Scalar hypergeometric_terminating(const std::vector<Scalar>& upper,
                                  const std::vector<Scalar>& lower);

using WeightFn = std::function<Scalar(const WeightQuery&)>;

/// Boundary labels around the SOS Yang–Baxter hexagon.
struct SosBoundary {
  long a, b, c, d, e, f;
};

struct SosYbeSides {
  Scalar lhs;
  Scalar rhs;
};

/// Σ_g W^(k,n)(f,g;e,d|v−x) W^(k,l)(a,b;f,g|u−x) W^(n,l)(b,c;g,d|u−v) and
/// Σ_g W^(n,l)(a,g;f,e|u−v) W^(k,l)(g,c;e,d|u−x) W^(k,n)(a,b;g,c|v−x).
SosYbeSides sos_ybe_sides(int k, int n, int l, const Scalar& u, const Scalar& v,
                          const Scalar& x, const SosBoundary& bd, const WeightFn& weight);

bool check_ybe_sos(int k, int n, int l, const Scalar& u, const Scalar& v, const Scalar& x,
                   const SosBoundary& bd, const WeightFn& weight);

/// w_nm_sum bound to params.
WeightFn sum_weights(const ModelParams& params);

}  // namespace fusion_sos
