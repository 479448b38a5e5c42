#include "deborder/rational.hpp"

#include <cctype>

#include "deborder/errors.hpp"

namespace deborder {

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (!s.empty() && allow_sign && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1")
                                                   : text.substr(slash + 1);
  if (!is_integer_text(num, true) || !is_integer_text(den, false))
    throw ParseError("malformed rational", std::string(text));
  Rational q{Integer(std::string(num)), Integer(std::string(den))};
  if (sgn(q.get_den()) == 0)
    throw ParseError("zero denominator", std::string(text));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer falling_factorial(unsigned d, unsigned j) {
  Integer r = 1;
  for (unsigned i = 0; i < j; ++i) {
    if (i >= d) return 0;
    r *= d - i;
  }
  return r;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;
}

}  // namespace deborder
