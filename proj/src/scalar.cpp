#include "fusion_sos/scalar.hpp"

#include <regex>
#include <stdexcept>

#include "fusion_sos/error.hpp"

namespace fusion_sos {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "shape mismatch";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::Inconsistent: return "inconsistent";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::NotProportional: return "not proportional";
    case ErrorKind::LossyTruncation: return "lossy truncation";
    case ErrorKind::UnsupportedEvaluationPoint: return "unsupported evaluation point";
    case ErrorKind::DegenerateParameterPoint: return "degenerate parameter point";
    case ErrorKind::UnsupportedParameterRegion: return "unsupported parameter region";
    case ErrorKind::InvalidPath: return "invalid path";
    case ErrorKind::AdjacencyViolation: return "adjacency violation";
  }
  return "unknown error";
}

Scalar rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

Scalar parse_scalar(std::string_view text) {
  static const std::regex pattern(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
  std::string s(text);
  if (!std::regex_match(s, pattern)) {
    throw std::invalid_argument("invalid rational '" + s + "'");
  }
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  Scalar q(s, 10);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

bool is_integer(const Scalar& x) { return x.get_den() == 1; }

long to_long(const Scalar& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p()) {
    throw std::invalid_argument("not a machine integer: " + to_string(x));
  }
  return x.get_num().get_si();
}

double to_double(const Scalar& x) { return x.get_d(); }

Scalar binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Scalar(r);
}

}  // namespace fusion_sos
