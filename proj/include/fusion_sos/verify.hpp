#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fusion_sos/vertex.hpp"

namespace fusion_sos {

/// Outcome of one identity suite. Every failure names its parameter tuple.
struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// One check: nullopt on success, otherwise a description of the failing
/// parameters. Exceptions thrown by a check count as failures.
using Check = std::function<std::optional<std::string>()>;

/// Worker count for suites: FUSION_SOS_THREADS if set and positive, else the
/// hardware concurrency.
unsigned suite_threads();

SuiteReport run_checks(std::string name, std::vector<Check> checks);

/// Small random rational num/den with |num| ≤ max_num, 1 ≤ den ≤ max_den.
Scalar random_rational(std::mt19937_64& rng, long max_num = 30, long max_den = 12);

/// Integer triples (k, n, l), all ≥ 1, with k + n + l ≤ max_sum.
std::vector<std::array<int, 3>> fused_triples(int max_sum);

struct WeightGrid {
  std::vector<std::pair<int, int>> shapes = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}};
  std::vector<Scalar> us = {Scalar(7, 3), Scalar(-5, 7), Scalar(13, 4)};
  std::vector<Scalar> ws = {Scalar(1, 2), Scalar(-3, 5)};
  long label_bound = 4;
};

SuiteReport verify_vertex_ybe(const std::vector<Scalar>& alphas, int samples, std::uint64_t seed);
SuiteReport verify_degeneracy(const std::vector<Scalar>& alphas);
SuiteReport verify_fused_ybe(int max_sum, int samples, const ModelParams& params,
                             std::uint64_t seed);
SuiteReport verify_fusion_representation(int max_n, int samples, const ModelParams& params,
                                         std::uint64_t seed);
SuiteReport verify_star_triangle(int max_kl, int degree_bound,
                                 const std::vector<Scalar>& alphas,
                                 const std::vector<Scalar>& shifts);
SuiteReport verify_om(int max_m, const ModelParams& params);
SuiteReport verify_weights(const WeightGrid& grid, const Scalar& alpha);
SuiteReport verify_path_function(int max_total, const std::vector<Scalar>& xs);
SuiteReport verify_sos_ybe(int max_sum, int boundaries, int spectral_triples,
                           const ModelParams& params, std::uint64_t seed);
SuiteReport verify_correspondence(const std::vector<std::pair<int, int>>& shapes, int samples,
                                  const ModelParams& params, std::uint64_t seed);
SuiteReport verify_intertwiners(int max_n, const std::vector<Scalar>& ws, const Scalar& alpha);
SuiteReport verify_eleven_vertex(const ModelParams& params, std::uint64_t seed);
SuiteReport verify_gauge(std::uint64_t seed);
SuiteReport verify_lattice(const ModelParams& params, std::uint64_t seed);

/// Every suite with default (CLI-sized) parameters.
std::vector<SuiteReport> verify_all(std::uint64_t seed);

}  // namespace fusion_sos
