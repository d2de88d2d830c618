#include "lapmotif/rational.hpp"

#include "lapmotif/errors.hpp"

#include <limits>

namespace lapmotif {

ParityObstruction::ParityObstruction(long long n, long long m)
    : PreconditionError("no block realizes the pair (" + std::to_string(n) + ", " +
                        std::to_string(m) +
                        "): f(p0) * e(p0) = 2 * sum over edges (q,r) of f(q)*f(r) forces an even "
                        "product"),
      n_(n),
      m_(m) {}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text)) throw ParseError("bad rational '" + text + "'");
    return Rational(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    throw ParseError("bad rational '" + text + "'");
  }
  Int d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(Int(num), d);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

bool is_integer_valued(const VertexFunction& f) {
  for (const auto& q : f) {
    if (!is_integer(q)) return false;
  }
  return true;
}

bool is_zero_function(const VertexFunction& f) {
  for (const auto& q : f) {
    if (q != 0) return false;
  }
  return true;
}

long long to_long_checked(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) {
    throw PreconditionError("integer value " + v.str() + " out of machine range");
  }
  return v.convert_to<long long>();
}

}  // namespace lapmotif
