#include "fusion_sos/sos.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <vector>

#include "fusion_sos/error.hpp"

namespace fusion_sos {

namespace {

Scalar half(long x) { return rational(x, 2); }

Scalar guarded_div(const Scalar& num, const Scalar& den, const char* what) {
  if (den == 0) throw MathError(ErrorKind::Pole, what);
  return num / den;
}

long as_long(const Scalar& x, const char* what) {
  if (!is_integer(x)) throw MathError(ErrorKind::InvalidPath, what);
  return to_long(x);
}

}  // namespace

bool adjacent(long d, int n) { return d <= n && d >= -n && (d + n) % 2 == 0; }

bool WeightQuery::valid() const {
  return n >= 0 && m >= 0 && adjacent(a - b, n) && adjacent(bprime - c, n) &&
         adjacent(a - bprime, m) && adjacent(b - c, m);
}

std::string WeightQuery::describe() const {
  std::ostringstream os;
  os << "(n,m)=(" << n << "," << m << ") (a,b,b',c)=(" << a << "," << b << "," << bprime
     << "," << c << ") u=" << to_string(u);
  return os.str();
}

Scalar signed_pochhammer(const Scalar& y, long k, int sign) {
  Scalar r = 1;
  for (long j = 0; j < k; ++j) r *= y + sign * j;
  return r;
}

Scalar rising(const Scalar& y, long k) {
  if (k >= 0) return signed_pochhammer(y, k, +1);
  return guarded_div(1, signed_pochhammer(y + k, -k, +1), "reciprocal Pochhammer");
}

Scalar gamma_ratio(const Scalar& p, const Scalar& q) {
  return rising(q, as_long(p - q, "gamma ratio with non-integer offset"));
}

Scalar w11(const WeightQuery& q, const ModelParams& params) {
  if (q.n != 1 || q.m != 1 || !q.valid()) return 0;
  const long l = q.c;
  const Scalar w = params.w();
  const Scalar& u = q.u;
  if (q.a == l + 2 || q.a == l - 2) return u + 1;
  // a == l from here on.
  if (q.b == q.bprime) {
    const int sign = q.b == l + 1 ? 1 : -1;
    return guarded_div(-sign * u + l + w, l + w, "w11 diagonal");
  }
  const int sign = q.b == l + 1 ? 1 : -1;
  return guarded_div(u * (l + sign + w), l + w, "w11 off-diagonal");
}

Scalar w_n1(const WeightQuery& q, const ModelParams& params) {
  if (q.m != 1 || !q.valid()) return 0;
  const int n = q.n;
  const long c = q.c;
  const Scalar w = params.w();
  const Scalar& u = q.u;
  if (q.b == c + 1) {
    const long k = q.a - c - 1;
    const Scalar np = half(n + k), nm = half(n - k);
    if (q.bprime == c + k + 2) {
      return guarded_div(nm * (c + 1 - nm + w - u), c + k + 1 + w, "w_n1");
    }
    return guarded_div((u + np) * (c + 1 + np + w), c + k + 1 + w, "w_n1");
  }
  const long k = q.a - c + 1;
  const Scalar np = half(n + k), nm = half(n - k);
  if (q.bprime == c + k - 2) {
    return guarded_div(np * (c - 1 + np + w + u), c + k - 1 + w, "w_n1");
  }
  return guarded_div((u + nm) * (c - 1 - nm + w), c + k - 1 + w, "w_n1");
}

Scalar path_function_bruteforce(long kappa_plus, long kappa_minus, const Scalar& x) {
  const long steps = kappa_plus + kappa_minus;
  Scalar total = 0;
  // Each subset of up-steps of size κ₊ is one path.
  for (unsigned long mask = 0; mask < (1ul << steps); ++mask) {
    if (std::popcount(mask) != kappa_plus) continue;
    Scalar term = 1;
    long height = 0;
    for (long i = 0; i < steps; ++i) {
      height += ((mask >> i) & 1ul) ? 1 : -1;
      term = guarded_div(term, x + height, "path function");
    }
    total += term;
  }
  return total;
}

Scalar path_function_closed(long kappa_plus, long kappa_minus, const Scalar& x) {
  Scalar den = 1;
  for (long i = 1; i <= kappa_plus; ++i) den *= x + i;
  for (long j = 1; j <= kappa_minus; ++j) den *= x - j;
  return guarded_div(binomial(kappa_plus + kappa_minus, kappa_plus), den, "path function");
}

Scalar w_nm_sum(const WeightQuery& q, const ModelParams& params) {
  if (!q.valid()) return 0;
  const int n = q.n, m = q.m;
  const long c = q.c;
  const long mu = q.b - c, nu = q.a - q.b, mup = q.bprime - q.a;
  const long mp = (m - mu) / 2, mm = (m + mu) / 2;
  const Scalar w = params.w();
  const Scalar& u = q.u;
  const Scalar x = q.a + w;

  const Scalar th1 = half(n - nu);
  const Scalar th2 = -u + c + mm - half(n - nu) + w;
  const Scalar th3 = u - mp + half(n + nu);
  const Scalar th4 = c + mu + half(n + nu) + w;

  Scalar total = 0;
  for (long sigma = -mm; sigma <= mm; sigma += 2) {
    const long kp = (mm + sigma) / 2, km = (mm - sigma) / 2;
    const long tt = mup - sigma;
    if (tt > mp || tt < -mp || (mp + tt) % 2 != 0) continue;
    const long rp = (mp + tt) / 2, rm = (mp - tt) / 2;
    const Scalar th5 = u + half(n - nu - sigma - mm);
    const Scalar th6 = c + mu - half(n - nu - sigma + mm) + w;
    const Scalar th7 = half(n + nu + sigma + mm);
    const Scalar th8 = u + c + mu + half(n + nu + sigma - mm) + w;
    Scalar num = (x + mup) * binomial(mm, kp) * binomial(mp, rp) *
                 signed_pochhammer(th1, kp, -1) * signed_pochhammer(th2, kp, +1) *
                 signed_pochhammer(th3, km, -1) * signed_pochhammer(th4, km, -1) *
                 signed_pochhammer(th5, rp, -1) * signed_pochhammer(th6, rp, +1) *
                 signed_pochhammer(th7, rm, -1) * signed_pochhammer(th8, rm, -1);
    Scalar den = x * signed_pochhammer(x + 1, kp, +1) * signed_pochhammer(x - 1, km, -1) *
                 signed_pochhammer(x + sigma + 1, rp, +1) *
                 signed_pochhammer(x + sigma - 1, rm, -1);
    total += guarded_div(num, den, "w_nm_sum");
  }
  return total;
}

Scalar hypergeometric_terminating(const std::vector<Scalar>& upper,
                                  const std::vector<Scalar>& lower) {
  long k_max = -1;
  for (const auto& p : upper) {
    if (is_integer(p) && p <= 0) {
      long cand = -to_long(p);
      k_max = k_max < 0 ? cand : std::min(k_max, cand);
    }
  }
  if (k_max < 0) {
    throw MathError(ErrorKind::DegenerateParameterPoint, "series does not terminate");
  }
  Scalar total = 0;
  Scalar term = 1;
  for (long k = 0; k <= k_max; ++k) {
    if (k > 0) {
      for (const auto& p : upper) term *= p + (k - 1);
      Scalar den = k;
      for (const auto& p : lower) den *= p + (k - 1);
      if (den == 0) {
        throw MathError(ErrorKind::DegenerateParameterPoint,
                        "lower parameter vanishes at k = " + std::to_string(k - 1));
      }
      term /= den;
    }
    total += term;
  }
  return total;
}

namespace {

Scalar hyper_lower_left(const WeightQuery& q, const Scalar& w) {
  const int n = q.n, m = q.m;
  const long a = q.a, b = q.b, bp = q.bprime, c = q.c;
  const Scalar& u = q.u;
  const Scalar npl = half(n + (b - a)), nmi = half(n - (b - a));
  const Scalar mp = half(m + (c - b)), mm = half(m - (c - b));
  const Scalar mpp = half(m + (bp - a)), mpm = half(m - (bp - a));
  const long h = (b + bp - a - c) / 2;

  std::vector<Scalar> upper = {-mm,
                               -npl,
                               -mpp,
                               a - mm + w,
                               -u + c - npl + mm + w,
                               (a - mm + w + 2) / 2,
                               a - mpm + w,
                               nmi + 1,
                               u + c - mp + nmi + w + 1};
  std::vector<Scalar> lower = {a + w + 1,
                               u - m + nmi + 1,
                               c + nmi - mp + 1 + w,
                               Scalar(1 - h),
                               half(bp - b + a + c) + w + 1,
                               (a - mm + w) / 2,
                               -u - npl,
                               c - mp - npl + w};
  Scalar coeff = (bp + w) * binomial(to_long(mp), to_long(mpp)) *
                 gamma_ratio(a - mpm + w, a + w + 1) * rising(nmi + h + 1, -h) *
                 gamma_ratio(b + nmi + 1 + w, c + nmi - mp + 1 + w) *
                 gamma_ratio(a - mm + w + 1, half(bp - b + a + c) + w + 1) *
                 gamma_ratio(u + c - mp + nmi + w + 1, u + b + nmi - mpm + w + 1) *
                 gamma_ratio(u + npl + 1, u + npl - mpp + 1) *
                 gamma_ratio(half(b + bp + c - a) - npl + w, c - mp - npl + w) *
                 gamma_ratio(u + nmi - mp + 1, u - m + nmi + 1);
  if (coeff == 0) return 0;
  return coeff * hypergeometric_terminating(upper, lower);
}

Scalar hyper_upper_right(const WeightQuery& q, const Scalar& w) {
  const int n = q.n, m = q.m;
  const long a = q.a, b = q.b, bp = q.bprime, c = q.c;
  const Scalar& u = q.u;
  const Scalar npl = half(n + (b - a)), nmi = half(n - (b - a));
  const Scalar mp = half(m + (c - b)), mm = half(m - (c - b));
  const Scalar mpp = half(m + (bp - a)), mpm = half(m - (bp - a));
  const long h = (b + bp - a - c) / 2;
  const long nu = a - b;

  std::vector<Scalar> upper = {-mpm,
                               -npl + h,
                               -mp,
                               a - mpm + w,
                               -u + b - npl + mpp + w,
                               (bp - mp + w + 2) / 2,
                               bp - mp + w,
                               nmi + 1 + h,
                               u + b - mpm + nmi + w + 1};
  std::vector<Scalar> lower = {half(b + bp + a - c) + w + 1,
                               u - mp - mpm + nmi + 1,
                               b + nmi - mpm + 1 + w,
                               Scalar(1 + h),
                               bp + w + 1,
                               (bp - mp + w) / 2,
                               -u - npl + h,
                               b - mpm - npl + w};
  const Scalar sign = h % 2 == 0 ? 1 : -1;
  Scalar coeff = binomial(to_long(mm), to_long(mpm)) *
                 gamma_ratio(a - mpm + w, half(b + bp + a - c) + w + 1) * sign *
                 rising(-half(n - nu), h) *
                 gamma_ratio(-u + b - npl + mpp + w, -u + c - npl + mm + w) *
                 gamma_ratio(u + nmi - mp + 1, u - mp - mpm + nmi + 1) *
                 gamma_ratio(b + nmi + 1 + w, b + nmi - mpm + 1 + w) *
                 gamma_ratio(bp - mp + w + 1, bp + w) *
                 gamma_ratio(u + npl - h + 1, u + npl - mpp + 1) *
                 gamma_ratio(half(b + bp - a + c) - npl + w, b - mpm - npl + w);
  if (coeff == 0) return 0;
  return coeff * hypergeometric_terminating(upper, lower);
}

}  // namespace

Scalar w_nm_hypergeometric(const WeightQuery& q, const ModelParams& params,
                           HyperRegime regime) {
  if (!q.valid()) return 0;
  const Scalar w = params.w();
  const long lhs = q.b + q.bprime, rhs = q.a + q.c;
  switch (regime) {
    case HyperRegime::LowerLeft:
      if (lhs > rhs) throw MathError(ErrorKind::UnsupportedParameterRegion, "b+b' > a+c");
      return hyper_lower_left(q, w);
    case HyperRegime::UpperRight:
      if (lhs < rhs) throw MathError(ErrorKind::UnsupportedParameterRegion, "b+b' < a+c");
      return hyper_upper_right(q, w);
    case HyperRegime::Auto:
      break;
  }
  if (lhs < rhs) return hyper_lower_left(q, w);
  if (lhs > rhs) return hyper_upper_right(q, w);
  Scalar x = hyper_lower_left(q, w);
  Scalar y = hyper_upper_right(q, w);
  if (x != y) {
    throw MathError(ErrorKind::Inconsistent, "hypergeometric tables disagree at " + q.describe());
  }
  return x;
}

SosYbeSides sos_ybe_sides(int k, int n, int l, const Scalar& u, const Scalar& v,
                          const Scalar& x, const SosBoundary& bd, const WeightFn& weight) {
  auto W = [&](int p, int r, long a, long b, long bp, long c, const Scalar& s) {
    return weight(WeightQuery{p, r, a, b, bp, c, s});
  };
  const long lo = std::min({bd.a, bd.b, bd.c, bd.d, bd.e, bd.f}) - (k + n + l);
  const long hi = std::max({bd.a, bd.b, bd.c, bd.d, bd.e, bd.f}) + (k + n + l);
  SosYbeSides sides{0, 0};
  for (long g = lo; g <= hi; ++g) {
    Scalar t1 = W(k, n, bd.f, g, bd.e, bd.d, v - x);
    if (t1 != 0) {
      Scalar t2 = W(k, l, bd.a, bd.b, bd.f, g, u - x);
      if (t2 != 0) sides.lhs += t1 * t2 * W(n, l, bd.b, bd.c, g, bd.d, u - v);
    }
    Scalar s1 = W(n, l, bd.a, g, bd.f, bd.e, u - v);
    if (s1 != 0) {
      Scalar s2 = W(k, l, g, bd.c, bd.e, bd.d, u - x);
      if (s2 != 0) sides.rhs += s1 * s2 * W(k, n, bd.a, bd.b, g, bd.c, v - x);
    }
  }
  return sides;
}

bool check_ybe_sos(int k, int n, int l, const Scalar& u, const Scalar& v, const Scalar& x,
                   const SosBoundary& bd, const WeightFn& weight) {
  auto sides = sos_ybe_sides(k, n, l, u, v, x, bd, weight);
  return sides.lhs == sides.rhs;
}

WeightFn sum_weights(const ModelParams& params) {
  return [params](const WeightQuery& q) { return w_nm_sum(q, params); };
}

}  // namespace fusion_sos
