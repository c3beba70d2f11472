#include "fusion_sos/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "fusion_sos/correspondence.hpp"
#include "fusion_sos/eleven_vertex.hpp"
#include "fusion_sos/error.hpp"
#include "fusion_sos/fusion.hpp"
#include "fusion_sos/gauge.hpp"
#include "fusion_sos/lattice.hpp"
#include "fusion_sos/polyrep.hpp"
#include "fusion_sos/sos.hpp"

namespace fusion_sos {

namespace {

std::string tuple_text(std::initializer_list<std::pair<const char*, std::string>> items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : items) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

std::string str(const Scalar& x) { return to_string(x); }
std::string str(long x) { return std::to_string(x); }

std::optional<std::string> fail_unless(bool ok, std::string what) {
  if (ok) return std::nullopt;
  return what;
}

long random_step(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick(0, n);
  return -n + 2 * pick(rng);
}

// Rational avoiding the integers, so no fused normalization point or
// degenerate spectral value is hit by accident.
Scalar random_generic(std::mt19937_64& rng) {
  for (;;) {
    Scalar x = random_rational(rng, 40, 9);
    if (!is_integer(x)) return x;
  }
}

}  // namespace

unsigned suite_threads() {
  if (const char* env = std::getenv("FUSION_SOS_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

SuiteReport run_checks(std::string name, std::vector<Check> checks) {
  std::vector<std::optional<std::string>> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      try {
        results[i] = checks[i]();
      } catch (const std::exception& e) {
        results[i] = std::string("exception: ") + e.what();
      }
    }
  };
  const unsigned count = std::min<std::size_t>(suite_threads(), std::max<std::size_t>(checks.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteReport report;
  report.name = std::move(name);
  report.checks = checks.size();
  for (auto& r : results) {
    if (r) report.failures.push_back(std::move(*r));
  }
  return report;
}

Scalar random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return rational(num(rng), den(rng));
}

std::vector<std::array<int, 3>> fused_triples(int max_sum) {
  std::vector<std::array<int, 3>> out;
  for (int k = 1; k <= max_sum; ++k)
    for (int n = 1; k + n <= max_sum; ++n)
      for (int l = 1; k + n + l <= max_sum; ++l) out.push_back({k, n, l});
  return out;
}

SuiteReport verify_vertex_ybe(const std::vector<Scalar>& alphas, int samples,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Check> checks;
  for (const auto& alpha : alphas) {
    for (int i = 0; i < samples; ++i) {
      Scalar u = random_rational(rng), v = random_rational(rng);
      checks.push_back([alpha, u, v]() {
        ModelParams p;
        p.alpha = alpha;
        bool ok = check_ybe_vertex_local(r7v(v, p), r7v(u, p), r7v(u - v, p), {2, 2, 2});
        return fail_unless(ok, tuple_text({{"alpha", str(alpha)}, {"u", str(u)}, {"v", str(v)}}));
      });
    }
  }
  return run_checks("ybe-vertex", std::move(checks));
}

SuiteReport verify_degeneracy(const std::vector<Scalar>& alphas) {
  std::vector<Check> checks;
  for (const auto& alpha : alphas) {
    checks.push_back([alpha]() {
      ModelParams p;
      p.alpha = alpha;
      Matrix expected = (Matrix::identity(4) - permutation_op(2)) * Scalar(-1);
      bool ok = check_degeneracy(p) == -1 && r7v(-1, p) == expected;
      return fail_unless(ok, tuple_text({{"alpha", str(alpha)}}));
    });
  }
  return run_checks("degeneracy", std::move(checks));
}

SuiteReport verify_fused_ybe(int max_sum, int samples, const ModelParams& params,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Check> checks;
  for (auto [k, n, l] : fused_triples(max_sum)) {
    for (int i = 0; i < samples; ++i) {
      Scalar u = random_generic(rng), v = random_generic(rng);
      checks.push_back([=]() {
        std::array<std::size_t, 3> dims{std::size_t(k + 1), std::size_t(n + 1),
                                        std::size_t(l + 1)};
        bool ok = check_ybe_vertex_local(fuse_nm(k, n, v, params), fuse_nm(k, l, u, params),
                                         fuse_nm(n, l, u - v, params), dims);
        return fail_unless(ok, tuple_text({{"k", str(k)}, {"n", str(n)}, {"l", str(l)},
                                           {"u", str(u)}, {"v", str(v)}}));
      });
    }
  }
  return run_checks("ybe-fused", std::move(checks));
}

SuiteReport verify_fusion_representation(int max_n, int samples, const ModelParams& params,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Check> checks;
  for (int n = 1; n <= max_n; ++n) {
    for (int i = 0; i < samples; ++i) {
      Scalar u = random_rational(rng);
      checks.push_back([=]() {
        Matrix fused = fuse_n1(n, u, params);
        bool ok = fused == r_n1_symmetric(n, u, params) &&
                  fused_product_nm(n, 1, u, params) == fused * fusion_scalar(n, 1, u);
        return fail_unless(ok, tuple_text({{"n", str(n)}, {"u", str(u)}}));
      });
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; n + m <= 5; ++m) {
      Scalar u = random_generic(rng);
      checks.push_back([=]() {
        bool ok = fusion_image_residual(n, m, u, params).is_zero();
        return fail_unless(ok, tuple_text({{"image n", str(n)}, {"m", str(m)}, {"u", str(u)}}));
      });
    }
  }
  return run_checks("fusion-representation", std::move(checks));
}

SuiteReport verify_star_triangle(int max_kl, int degree_bound,
                                 const std::vector<Scalar>& alphas,
                                 const std::vector<Scalar>& shifts) {
  std::vector<Check> checks;
  for (const auto& alpha : alphas) {
    ModelParams p;
    p.alpha = alpha;
    for (const auto& shift : shifts) {
      for (int k = 0; k <= max_kl; ++k) {
        for (int l = 0; l <= max_kl; ++l) {
          checks.push_back([=]() {
            return fail_unless(star_triangle_check(k, l, shift, degree_bound, p),
                               tuple_text({{"k", str(k)}, {"l", str(l)}, {"alpha", str(alpha)},
                                           {"shift", str(shift)}}));
          });
        }
      }
    }
    for (int q = 1; q <= 4; ++q) {
      checks.push_back([=]() {
        return fail_unless(gamma_commutation_check(q, degree_bound, p),
                           tuple_text({{"commutation p", str(q)}, {"alpha", str(alpha)}}));
      });
    }
  }
  return run_checks("star-triangle", std::move(checks));
}

SuiteReport verify_om(int max_m, const ModelParams& params) {
  std::vector<Check> checks;
  for (int m = 1; m <= max_m; ++m) {
    const int degree = m + 2;
    for (long b = -1; b <= 1; ++b) {
      for (long c = b - m; c <= b + m; c += 2) {
        for (long u = 0; u <= m; ++u) {
          checks.push_back([=]() {
            bool ok = o_m_product_form(m, u, b, c, params, degree) ==
                      o_m_gamma_form(m, u, b, c, params, degree);
            return fail_unless(ok, tuple_text({{"m", str(m)}, {"b", str(b)}, {"c", str(c)},
                                               {"u", str(u)}}));
          });
        }
        checks.push_back([=]() {
          // Interpolate through m+2 points; the top coefficient must vanish.
          std::vector<Scalar> xs;
          std::vector<Matrix> values;
          for (int k = 0; k < m + 2; ++k) {
            xs.push_back(rational(2 * k + 1, 3));
            values.push_back(o_m_product_form(m, xs.back(), b, c, params, degree).matrix);
          }
          bool ok = true;
          std::vector<Scalar> ys(xs.size());
          for (std::size_t i = 0; i < values[0].rows() && ok; ++i) {
            for (std::size_t j = 0; j < values[0].cols() && ok; ++j) {
              for (std::size_t k = 0; k < xs.size(); ++k) ys[k] = values[k](i, j);
              Polynomial p = lagrange_interpolate(xs, ys);
              ok = p.degree() <= m;
              // The interpolant must also predict a fresh point exactly.
              Scalar probe(-11, 5);
              ok = ok && p.evaluate(probe) ==
                             o_m_product_form(m, probe, b, c, params, degree).matrix(i, j);
            }
          }
          return fail_unless(ok, tuple_text({{"degree-in-u m", str(m)}, {"b", str(b)},
                                             {"c", str(c)}}));
        });
      }
    }
  }
  return run_checks("om", std::move(checks));
}

SuiteReport verify_weights(const WeightGrid& grid, const Scalar& alpha) {
  std::vector<Check> checks;
  const long L = grid.label_bound;
  for (auto [n, m] : grid.shapes) {
    for (const auto& u : grid.us) {
      for (const auto& w : grid.ws) {
        const ModelParams params = ModelParams::from_w(alpha, w, Scalar(1, 5));
        for (long a = -L; a <= L; ++a) {
          for (long b = a - n; b <= a + n; b += 2) {
            for (long c = b - m; c <= b + m; c += 2) {
              if (c < -L || c > L) continue;
              checks.push_back([=]() -> std::optional<std::string> {
                auto oracle = solve_weights_from_relation(n, m, a, b, c, u, params);
                for (long bp = c - n - 2; bp <= c + n + 2; ++bp) {
                  WeightQuery q{n, m, a, b, bp, c, u};
                  Scalar expected = oracle.count(bp) ? oracle.at(bp) : Scalar(0);
                  Scalar s = w_nm_sum(q, params);
                  Scalar h = w_nm_hypergeometric(q, params);
                  if (s != expected || h != expected) {
                    return q.describe() + " w=" + str(w) + " oracle=" + str(expected) +
                           " sum=" + str(s) + " hyper=" + str(h);
                  }
                }
                return std::nullopt;
              });
            }
          }
        }
      }
    }
  }
  return run_checks("weights", std::move(checks));
}

SuiteReport verify_path_function(int max_total, const std::vector<Scalar>& xs) {
  std::vector<Check> checks;
  for (const auto& x : xs) {
    for (long kp = 0; kp <= max_total; ++kp) {
      for (long km = 0; kp + km <= max_total; ++km) {
        checks.push_back([=]() {
          Scalar closed = path_function_closed(kp, km, x);
          bool ok = closed == path_function_bruteforce(kp, km, x);
          if (kp + km > 0) {
            Scalar prev = 0;
            if (kp > 0) prev += path_function_closed(kp - 1, km, x);
            if (km > 0) prev += path_function_closed(kp, km - 1, x);
            ok = ok && closed == prev / (x + kp - km);
          }
          return fail_unless(ok, tuple_text({{"kappa+", str(kp)}, {"kappa-", str(km)},
                                             {"x", str(x)}}));
        });
      }
    }
  }
  return run_checks("path-function", std::move(checks));
}

SuiteReport verify_sos_ybe(int max_sum, int boundaries, int spectral_triples,
                           const ModelParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Check> checks;
  const WeightFn weight = sum_weights(params);
  for (auto [k, n, l] : fused_triples(max_sum)) {
    int made = 0;
    while (made < boundaries) {
      SosBoundary bd{};
      bd.a = std::uniform_int_distribution<long>(-3, 3)(rng);
      bd.b = bd.a + random_step(rng, k);
      bd.c = bd.b + random_step(rng, n);
      bd.f = bd.a + random_step(rng, l);
      bd.d = bd.c + random_step(rng, l);
      bd.e = bd.f + random_step(rng, n);
      if (!adjacent(bd.e - bd.d, k)) continue;
      ++made;
      for (int t = 0; t < spectral_triples; ++t) {
        Scalar u = random_rational(rng), v = random_rational(rng), x = random_rational(rng);
        checks.push_back([=]() {
          bool ok = check_ybe_sos(k, n, l, u, v, x, bd, weight);
          return fail_unless(
              ok, tuple_text({{"k", str(k)}, {"n", str(n)}, {"l", str(l)}, {"a", str(bd.a)},
                              {"b", str(bd.b)}, {"c", str(bd.c)}, {"d", str(bd.d)},
                              {"e", str(bd.e)}, {"f", str(bd.f)}, {"u", str(u)},
                              {"v", str(v)}, {"x", str(x)}}));
        });
      }
    }
  }
  return run_checks("ybe-sos", std::move(checks));
}

SuiteReport verify_correspondence(const std::vector<std::pair<int, int>>& shapes, int samples,
                                  const ModelParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Check> checks;
  for (auto [n, m] : shapes) {
    for (int i = 0; i < samples; ++i) {
      Scalar u = random_generic(rng), v = random_generic(rng);
      long a = std::uniform_int_distribution<long>(-3, 3)(rng);
      long b = a + random_step(rng, n);
      long c = b + random_step(rng, m);
      checks.push_back([=]() {
        bool ok = check_vertex_sos_matrix(n, m, a, b, c, u, v, params);
        return fail_unless(ok, tuple_text({{"n", str(n)}, {"m", str(m)}, {"a", str(a)},
                                           {"b", str(b)}, {"c", str(c)}, {"u", str(u)},
                                           {"v", str(v)}}));
      });
    }
  }
  return run_checks("correspondence", std::move(checks));
}

SuiteReport verify_intertwiners(int max_n, const std::vector<Scalar>& ws, const Scalar& alpha) {
  std::vector<Check> checks;
  const std::vector<Scalar> us = {Scalar(7, 3), Scalar(-5, 7), Scalar(1, 6)};
  for (int n = 1; n <= max_n; ++n) {
    for (long a = -2; a <= 2; ++a) {
      for (long b = a - n; b <= a + n; b += 2) {
        checks.push_back([=]() {
          const ModelParams params = ModelParams::from_w(alpha, ws.front(), Scalar(1, 3));
          const Scalar u = us.front();
          std::vector<int> steps(n, -1);
          std::fill(steps.begin(), steps.begin() + (n + (b - a)) / 2, 1);
          std::sort(steps.begin(), steps.end());
          Matrix reference = fused_intertwiner_tensor(n, u, a, b, steps, params);
          bool ok = true;
          while (ok && std::next_permutation(steps.begin(), steps.end())) {
            ok = fused_intertwiner_tensor(n, u, a, b, steps, params) == reference;
          }
          Matrix coords = sym_basis(n).project * reference;
          ok = ok && sym_coords_to_poly(coords) == intertwiner_poly(n, u, a, b, params);
          return fail_unless(ok, tuple_text({{"path n", str(n)}, {"a", str(a)}, {"b", str(b)}}));
        });
      }
    }
    for (const auto& w : ws) {
      for (long anchor = -4; anchor <= 4; ++anchor) {
        for (const auto& u : us) {
          checks.push_back([=]() {
            const ModelParams params = ModelParams::from_w(alpha, w, Scalar(1, 3));
            bool ok = independence_determinant(make_intertwiner_set(n, u, anchor, true, params)) != 0 &&
                      independence_determinant(make_intertwiner_set(n, u, anchor, false, params)) != 0;
            return fail_unless(ok, tuple_text({{"det n", str(n)}, {"w", str(w)},
                                               {"anchor", str(anchor)}, {"u", str(u)}}));
          });
        }
      }
    }
  }
  // At a + w = 0 the two n = 1 vectors are proportional.
  for (long a = -2; a <= 2; ++a) {
    checks.push_back([=]() {
      const ModelParams params = ModelParams::from_w(alpha, Scalar(-a), Scalar(1, 3));
      Scalar det = independence_determinant(make_intertwiner_set(1, Scalar(7, 3), a, true, params));
      return fail_unless(det == 0, tuple_text({{"degenerate a", str(a)}}));
    });
  }
  return run_checks("intertwiners", std::move(checks));
}

SuiteReport verify_eleven_vertex(const ModelParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Check> checks;
  for (int i = 0; i < 5; ++i) {
    Scalar u = random_generic(rng), v = random_generic(rng);
    checks.push_back([=]() {
      bool ok = similarity_fused(1, 1, u, v, params) == r11v(u - v, params) &&
                check_ybe_vertex_local(r11v(v, params), r11v(u, params), r11v(u - v, params),
                                       {2, 2, 2});
      return fail_unless(ok, tuple_text({{"r11v u", str(u)}, {"v", str(v)}}));
    });
  }
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= 2; ++m) {
      for (const Scalar& delta : {Scalar(1), Scalar(-2, 3)}) {
        Scalar u = random_generic(rng), v = random_generic(rng);
        checks.push_back([=]() {
          bool ok = similarity_fused(n, m, u + delta, v + delta, params) ==
                    similarity_fused(n, m, u, v, params);
          return fail_unless(ok, tuple_text({{"difference n", str(n)}, {"m", str(m)},
                                             {"delta", str(delta)}}));
        });
      }
    }
  }
  for (auto [k, n, l] : fused_triples(5)) {
    Scalar u = random_generic(rng), v = random_generic(rng);
    checks.push_back([=]() {
      std::array<std::size_t, 3> dims{std::size_t(k + 1), std::size_t(n + 1), std::size_t(l + 1)};
      const Scalar zero = 0;
      bool ok = check_ybe_vertex_local(similarity_fused(k, n, v, zero, params),
                                       similarity_fused(k, l, u, zero, params),
                                       similarity_fused(n, l, u - v, zero, params), dims);
      return fail_unless(ok, tuple_text({{"ybe k", str(k)}, {"n", str(n)}, {"l", str(l)}}));
    });
  }
  for (int n = 1; n <= 3; ++n) {
    for (long b = -n; b <= n; b += 2) {
      checks.push_back([=]() {
        bool ok = true;
        for (const Scalar& u : {Scalar(0), Scalar(5, 2), Scalar(-4, 3)}) {
          Polynomial shifted = poly_shift(intertwiner_poly(n, u, 0, b, params), params.alpha * u);
          ok = ok && shifted == psi_const(n, 0, b, params);
          ok = ok && shift_op(n, u, params) * poly_to_sym_coords(intertwiner_poly(n, u, 0, b, params), n) ==
                         poly_to_sym_coords(psi_const(n, 0, b, params), n);
        }
        return fail_unless(ok, tuple_text({{"psi n", str(n)}, {"b", str(b)}}));
      });
    }
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    Scalar u = random_generic(rng), v = random_generic(rng);
    long a = 1, b = a + random_step(rng, n), c = b + random_step(rng, m);
    checks.push_back([=]() {
      auto coords = [&](int k, long x, long y) { return poly_to_sym_coords(psi_const(k, x, y, params), k); };
      std::map<long, std::pair<Matrix, Matrix>> rhs;
      for (long bp = c - n; bp <= c + n; bp += 2) rhs.emplace(bp, std::make_pair(coords(n, bp, c), coords(m, a, bp)));
      auto table = solve_weights_from_relation(n, m, a, b, c, u - v, params);
      bool ok = correspondence_residual(similarity_fused(n, m, u, v, params), table,
                                        coords(n, a, b), coords(m, b, c), rhs)
                    .is_zero();
      return fail_unless(ok, tuple_text({{"psi-correspondence n", str(n)}, {"m", str(m)},
                                         {"a", str(a)}, {"b", str(b)}, {"c", str(c)}}));
    });
  }
  return run_checks("eleven-vertex", std::move(checks));
}

SuiteReport verify_gauge(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Check> checks;
  const ModelParams generic = ModelParams::from_w(1, Scalar(1, 2));
  for (int i = 0; i < 20; ++i) {
    SosBoundary bd{};
    for (;;) {
      bd.a = std::uniform_int_distribution<long>(4, 7)(rng);
      bd.b = bd.a + random_step(rng, 1);
      bd.c = bd.b + random_step(rng, 1);
      bd.f = bd.a + random_step(rng, 1);
      bd.d = bd.c + random_step(rng, 1);
      bd.e = bd.f + random_step(rng, 1);
      if (adjacent(bd.e - bd.d, 1)) break;
    }
    Scalar u = random_rational(rng), v = random_rational(rng), x = random_rational(rng);
    checks.push_back([=]() {
      double r = gauge_ybe_residual(u, v, x, bd, generic);
      return fail_unless(r < 1e-9, "float residual " + std::to_string(r) + " at a=" + str(bd.a));
    });
  }
  for (const Scalar& w : std::vector<Scalar>{Scalar(1) - Scalar(1, 1000000), Scalar(1) + Scalar(1, 1000000)}) {
    for (const SosBoundary& bd : {SosBoundary{1, 0, 1, 0, 1, 0}, SosBoundary{0, 1, 0, 1, 0, 1}}) {
      checks.push_back([=]() {
        const ModelParams p = ModelParams::from_w(1, w);
        const Scalar u(1, 3), v(-1, 4), x(1, 5);
        FloatYbeSides s = gauge_ybe_sides(u, v, x, bd, p);
        double residual = std::abs(s.lhs - s.rhs);
        double unwanted = std::max(std::abs(s.lhs_negative), std::abs(s.rhs_negative));
        return fail_unless(residual < 1e-6 && unwanted < 1e-5,
                           "degeneration w=" + str(w) + " residual=" + std::to_string(residual) +
                               " unwanted=" + std::to_string(unwanted));
      });
    }
  }
  checks.push_back([]() -> std::optional<std::string> {
    const ModelParams p = ModelParams::from_w(1, 1);
    for (long l = 0; l <= 6; ++l) {
      for (long a : {l - 2, l, l + 2}) {
        for (long b : {l - 1, l + 1}) {
          for (long bp : {l - 1, l + 1}) {
            if (a < 0 || b < 0 || bp < 0) continue;
            WeightQuery q{1, 1, a, b, bp, l, Scalar(3, 7)};
            if (!q.valid()) continue;
            double d = std::abs(gauge_weight_float(q, p) - w0_weight(a, b, bp, l, 3.0 / 7.0));
            if (d > 1e-12) return "W0 mismatch at " + q.describe();
          }
        }
      }
    }
    return std::nullopt;
  });
  return run_checks("gauge", std::move(checks));
}

SuiteReport verify_lattice(const ModelParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Check> checks;
  for (auto [N, n, m] : std::vector<std::array<int, 3>>{{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {2, 2, 1}, {2, 1, 2}}) {
    Scalar u = random_generic(rng), v = random_generic(rng);
    checks.push_back([=]() {
      LatticeSpec su{N, 1, n, m, u}, sv{N, 1, n, m, v};
      bool ok = commutator(transfer_matrix_vertex(su, params), transfer_matrix_vertex(sv, params)).is_zero();
      return fail_unless(ok, tuple_text({{"N", str(N)}, {"n", str(n)}, {"m", str(m)},
                                         {"u", str(u)}, {"v", str(v)}}));
    });
  }
  return run_checks("lattice", std::move(checks));
}

std::vector<SuiteReport> verify_all(std::uint64_t seed) {
  const ModelParams params = ModelParams::from_w(Scalar(5, 3), Scalar(1, 2), Scalar(1, 7));
  const std::vector<Scalar> alphas = {Scalar(1), Scalar(5, 3), Scalar(-2, 7)};
  std::vector<SuiteReport> out;
  out.push_back(verify_vertex_ybe(alphas, 10, seed));
  out.push_back(verify_degeneracy(alphas));
  out.push_back(verify_fused_ybe(5, 2, params, seed + 1));
  out.push_back(verify_fusion_representation(4, 2, params, seed + 2));
  out.push_back(verify_star_triangle(3, 8, {Scalar(1)}, {Scalar(0), Scalar(2, 5)}));
  out.push_back(verify_om(3, params));
  WeightGrid grid;
  grid.us = {Scalar(7, 3)};
  grid.ws = {Scalar(1, 2)};
  grid.label_bound = 2;
  out.push_back(verify_weights(grid, Scalar(5, 3)));
  out.push_back(verify_path_function(6, {Scalar(1, 2), Scalar(-7, 3)}));
  out.push_back(verify_sos_ybe(4, 5, 1, params, seed + 3));
  out.push_back(verify_correspondence({{1, 1}, {2, 1}, {1, 2}, {2, 2}}, 2, params, seed + 4));
  out.push_back(verify_intertwiners(3, {Scalar(1, 2)}, Scalar(5, 3)));
  out.push_back(verify_eleven_vertex(params, seed + 5));
  out.push_back(verify_gauge(seed + 6));
  out.push_back(verify_lattice(params, seed + 7));
  return out;
}

}  // namespace fusion_sos
