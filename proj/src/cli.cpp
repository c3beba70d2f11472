#include "fusion_sos/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <regex>
#include <stdexcept>

#include "fusion_sos/correspondence.hpp"
#include "fusion_sos/eleven_vertex.hpp"
#include "fusion_sos/error.hpp"
#include "fusion_sos/fusion.hpp"
#include "fusion_sos/lattice.hpp"
#include "fusion_sos/serialize.hpp"
#include "fusion_sos/sos.hpp"
#include "fusion_sos/verify.hpp"

namespace fusion_sos {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Scalar parse_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_scalar(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid rational for --" + flag + ": '" + text + "'");
  }
}

struct ParamFlags {
  std::string alpha = "1";
  std::string w = "1/2";
  std::string skew = "0";

  void add_to(CLI::App* app) {
    app->add_option("--alpha", alpha, "seven-vertex constant alpha (P/Q)");
    app->add_option("--w", w, "SOS parameter w = (s+t)/2 (P/Q)");
    app->add_option("--skew", skew, "(s-t)/2 (P/Q)");
  }

  ModelParams params() const {
    Scalar a = parse_flag("alpha", alpha);
    if (a == 0) throw UsageError("--alpha must be nonzero");
    return ModelParams::from_w(a, parse_flag("w", w), parse_flag("skew", skew));
  }
};

void print_matrix(std::ostream& out, const Matrix& m, const std::string& format) {
  if (format == "json") {
    out << to_json(m).dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (format == "csv") {
        out << (j ? "," : "") << to_string(m(i, j));
      } else {
        out << (j ? " " : "") << std::setw(10) << to_string(m(i, j));
      }
    }
    out << "\n";
  }
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv" && format != "pretty") {
    throw UsageError("--format must be json, csv or pretty");
  }
}

std::pair<long, long> parse_range(const std::string& text) {
  static const std::regex re(R"(^(-?[0-9]+)\.\.(-?[0-9]+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("--range must look like LO..HI");
  return {std::stol(m[1]), std::stol(m[2])};
}

int report_suites(const std::vector<SuiteReport>& reports, const std::string& format,
                  std::ostream& out) {
  bool ok = true;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back({{"suite", r.name}, {"checks", r.checks}, {"passed", r.passed()},
                     {"failures", r.failures}});
      ok = ok && r.passed();
    }
    out << json{{"suites", arr}, {"passed", ok}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
      if (!r.passed()) out << ", " << r.failures.size() << " failed";
      out << ")\n";
      for (const auto& f : r.failures) out << "  " << f << "\n";
      ok = ok && r.passed();
    }
  }
  return ok ? kExitOk : kExitIdentityFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact seven-vertex / SOS model toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  ParamFlags pflags;

  // rmatrix
  auto* rmatrix = app.add_subcommand("rmatrix", "dump a (fused) R-matrix");
  std::string family = "seven", r_u = "0";
  int r_n = 1, r_m = 1;
  rmatrix->add_option("--family", family, "seven | eleven");
  rmatrix->add_option("--n", r_n)->check(CLI::Range(1, 6));
  rmatrix->add_option("--m", r_m)->check(CLI::Range(1, 6));
  rmatrix->add_option("--u,--d", r_u, "spectral parameter (difference for eleven)");
  rmatrix->add_option("--format", format);
  pflags.add_to(rmatrix);

  // fuse
  auto* fuse = app.add_subcommand("fuse", "normalized fused operator R^(n,m)(u)");
  std::string f_u = "0";
  int f_n = 1, f_m = 1;
  fuse->add_option("--n", f_n)->check(CLI::Range(1, 6));
  fuse->add_option("--m", f_m)->check(CLI::Range(1, 6));
  fuse->add_option("--u", f_u)->required();
  fuse->add_option("--format", format);
  pflags.add_to(fuse);

  // weights
  auto* weights = app.add_subcommand("weights", "one SOS Boltzmann weight");
  int w_n = 1, w_m = 1;
  long w_a = 0, w_b = 0, w_bp = 0, w_c = 0;
  std::string w_u = "0", method = "sum";
  weights->add_option("--n", w_n)->check(CLI::Range(1, 8));
  weights->add_option("--m", w_m)->check(CLI::Range(1, 8));
  weights->add_option("--a", w_a)->required();
  weights->add_option("--b", w_b)->required();
  weights->add_option("--bprime", w_bp)->required();
  weights->add_option("--c", w_c)->required();
  weights->add_option("--u", w_u)->required();
  weights->add_option("--method", method, "sum | hyper | solve");
  weights->add_option("--format", format);
  pflags.add_to(weights);

  // verify
  auto* verify = app.add_subcommand("verify", "run identity suites");
  std::string suite = "all";
  int max_sum = 5, samples = 2;
  std::uint64_t seed = 20240611;
  int v_n = 0, v_m = 0;
  std::string v_u, v_v;
  verify->add_option("suite", suite,
                     "ybe-vertex | star-triangle | om | correspondence | weights | ybe-sos | "
                     "fusion | path-function | intertwiners | eleven-vertex | gauge | lattice | all");
  verify->add_option("--max-sum", max_sum)->check(CLI::Range(3, 7));
  verify->add_option("--samples", samples)->check(CLI::Range(1, 100));
  verify->add_option("--seed", seed);
  verify->add_option("--n", v_n);
  verify->add_option("--m", v_m);
  verify->add_option("--u", v_u);
  verify->add_option("--v", v_v);
  verify->add_option("--format", format);
  pflags.add_to(verify);

  // partition
  auto* partition = app.add_subcommand("partition", "periodic small-lattice partition sum");
  std::string model = "vertex", p_u = "0", range = "-2..2";
  int p_N = 2, p_M = 2, p_n = 1, p_m = 1;
  partition->add_option("--model", model, "vertex | sos");
  partition->add_option("--N", p_N)->check(CLI::Range(1, 4));
  partition->add_option("--M", p_M)->check(CLI::Range(1, 4));
  partition->add_option("--n", p_n)->check(CLI::Range(1, 3));
  partition->add_option("--m", p_m)->check(CLI::Range(1, 3));
  partition->add_option("--u", p_u)->required();
  partition->add_option("--range", range, "SOS height window LO..HI");
  pflags.add_to(partition);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    check_format(format);
    const ModelParams params = pflags.params();

    if (*rmatrix) {
      Scalar u = parse_flag("u", r_u);
      Matrix m;
      if (family == "seven") {
        m = fuse_nm(r_n, r_m, u, params);
      } else if (family == "eleven") {
        m = similarity_fused(r_n, r_m, u, 0, params);
      } else {
        throw UsageError("--family must be seven or eleven");
      }
      if (format == "json") {
        out << json{{"family", family}, {"n", r_n}, {"m", r_m}, {"u", to_string(u)},
                    {"matrix", to_json(m)}}
                   .dump()
            << "\n";
      } else {
        print_matrix(out, m, format);
      }
      return kExitOk;
    }

    if (*fuse) {
      Scalar u = parse_flag("u", f_u);
      Matrix m = fuse_nm(f_n, f_m, u, params);
      if (format == "json") {
        out << json{{"n", f_n}, {"m", f_m}, {"u", to_string(u)}, {"matrix", to_json(m)}}.dump()
            << "\n";
      } else {
        print_matrix(out, m, format);
      }
      return kExitOk;
    }

    if (*weights) {
      WeightQuery q{w_n, w_m, w_a, w_b, w_bp, w_c, parse_flag("u", w_u)};
      if (method != "sum" && method != "hyper" && method != "solve") {
        throw UsageError("--method must be sum, hyper or solve");
      }
      const bool valid = q.valid();
      Scalar value = 0;
      if (valid) {
        if (method == "sum") {
          value = w_nm_sum(q, params);
        } else if (method == "hyper") {
          value = w_nm_hypergeometric(q, params);
        } else {
          auto table = solve_weights_from_relation(q.n, q.m, q.a, q.b, q.c, q.u, params);
          auto it = table.find(q.bprime);
          value = it == table.end() ? Scalar(0) : it->second;
        }
      }
      if (format == "csv") {
        out << "n,m,a,b,bprime,c,u,method,value\n"
            << q.n << "," << q.m << "," << q.a << "," << q.b << "," << q.bprime << "," << q.c
            << "," << to_string(q.u) << "," << method << "," << to_string(value) << "\n";
      } else if (format == "pretty") {
        out << "W^(" << q.n << "," << q.m << ")(" << q.a << " " << q.b << " / " << q.bprime
            << " " << q.c << " | " << to_string(q.u) << ") = " << to_string(value) << "\n";
      } else {
        json j{{"n", q.n},          {"m", q.m},   {"a", q.a},
               {"b", q.b},          {"bprime", q.bprime},
               {"c", q.c},          {"u", to_string(q.u)},
               {"w", to_string(params.w())},
               {"method", method},  {"value", to_string(value)}};
        if (!valid) j["error"] = "invalid adjacency";
        out << j.dump() << "\n";
      }
      if (!valid) {
        err << "invalid adjacency: " << q.describe() << "\n";
        return kExitUsage;
      }
      return kExitOk;
    }

    if (*verify) {
      std::vector<SuiteReport> reports;
      const std::vector<Scalar> alphas = {Scalar(1), Scalar(5, 3), Scalar(-2, 7)};
      if (suite == "all") {
        reports = verify_all(seed);
      } else if (suite == "ybe-vertex") {
        reports.push_back(verify_vertex_ybe(alphas, 5 * samples, seed));
        reports.push_back(verify_fused_ybe(max_sum, samples, params, seed));
      } else if (suite == "star-triangle") {
        reports.push_back(verify_star_triangle(3, 8, alphas, {Scalar(0), Scalar(2, 5), Scalar(-3)}));
      } else if (suite == "om") {
        reports.push_back(verify_om(3, params));
      } else if (suite == "correspondence") {
        std::vector<std::pair<int, int>> shapes = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
        if (v_n > 0 && v_m > 0) shapes = {{v_n, v_m}};
        if (!v_u.empty() && !v_v.empty() && v_n > 0 && v_m > 0) {
          Scalar u = parse_flag("u", v_u), v = parse_flag("v", v_v);
          std::vector<Check> checks;
          for (long a = -2; a <= 2; ++a)
            for (long b = a - v_n; b <= a + v_n; b += 2)
              for (long c = b - v_m; c <= b + v_m; c += 2)
                checks.push_back([=]() -> std::optional<std::string> {
                  if (check_vertex_sos_matrix(v_n, v_m, a, b, c, u, v, params)) return std::nullopt;
                  return "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                         " c=" + std::to_string(c);
                });
          reports.push_back(run_checks("correspondence", std::move(checks)));
        } else {
          reports.push_back(verify_correspondence(shapes, samples, params, seed));
        }
      } else if (suite == "weights") {
        WeightGrid grid;
        grid.label_bound = 3;
        reports.push_back(verify_weights(grid, params.alpha));
      } else if (suite == "ybe-sos") {
        reports.push_back(verify_sos_ybe(max_sum, 5 * samples, 1, params, seed));
      } else if (suite == "fusion") {
        reports.push_back(verify_fusion_representation(4, samples, params, seed));
      } else if (suite == "path-function") {
        reports.push_back(verify_path_function(6, {Scalar(1, 2), Scalar(-7, 3), Scalar(13, 5)}));
      } else if (suite == "intertwiners") {
        reports.push_back(verify_intertwiners(4, {Scalar(1, 2), Scalar(-3, 5)}, params.alpha));
      } else if (suite == "eleven-vertex") {
        reports.push_back(verify_eleven_vertex(params, seed));
      } else if (suite == "gauge") {
        reports.push_back(verify_gauge(seed));
      } else if (suite == "lattice") {
        reports.push_back(verify_lattice(params, seed));
      } else {
        throw UsageError("unknown suite '" + suite + "'");
      }
      return report_suites(reports, format == "json" ? "json" : "pretty", out);
    }

    if (*partition) {
      LatticeSpec spec{p_N, p_M, p_n, p_m, parse_flag("u", p_u)};
      json j{{"spec",
              {{"model", model}, {"N", p_N}, {"M", p_M}, {"n", p_n}, {"m", p_m},
               {"u", to_string(spec.u)}, {"alpha", to_string(params.alpha)},
               {"w", to_string(params.w())}}}};
      if (model == "vertex") {
        j["value"] = to_string(partition_vertex(spec, params));
      } else if (model == "sos") {
        auto [lo, hi] = parse_range(range);
        j["spec"]["range"] = {lo, hi};
        j["value"] = to_string(partition_sos(spec, lo, hi, params));
      } else {
        throw UsageError("--model must be vertex or sos");
      }
      out << j.dump() << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIdentityFailure;
  }
  return kExitUsage;
}

}  // namespace fusion_sos
