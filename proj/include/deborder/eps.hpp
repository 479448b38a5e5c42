#pragma once

#include <utility>
#include <vector>

#include "deborder/rational.hpp"

namespace deborder {

/// Polynomial in the degeneration parameter eps with rational coefficients.
/// Stored densely by exponent; the top coefficient is never zero, and the
/// zero polynomial has no coefficients.
class EpsPoly {
 public:
  EpsPoly() = default;
  EpsPoly(const Rational& constant);  // NOLINT: implicit lift of scalars
  EpsPoly(int constant) : EpsPoly(Rational(constant)) {}  // NOLINT

  static EpsPoly monomial(const Rational& coef, unsigned exponent);
  static EpsPoly from_coefficients(std::vector<Rational> coefs);

  bool is_zero() const { return coefs_.empty(); }
  bool is_one() const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefs_.size()) - 1; }
  /// Order of vanishing at eps = 0. Requires a nonzero polynomial.
  unsigned valuation() const;
  /// True when the polynomial is c * eps^k.
  bool is_monomial() const;

  const std::vector<Rational>& coefficients() const { return coefs_; }
  Rational coefficient(unsigned exponent) const;
  Rational lowest_coefficient() const { return coefs_[valuation()]; }
  Rational leading_coefficient() const { return coefs_.back(); }
  Rational value_at_zero() const { return coefficient(0); }

  /// Multiplies by eps^k.
  EpsPoly shifted_up(unsigned k) const;
  /// Exact division by eps^k; requires k <= valuation().
  EpsPoly shifted_down(unsigned k) const;
  /// Drops every term of exponent > max_exponent.
  EpsPoly truncated(unsigned max_exponent) const;

  EpsPoly operator-() const;
  EpsPoly& operator+=(const EpsPoly& other);
  EpsPoly& operator-=(const EpsPoly& other);
  EpsPoly& operator*=(const Rational& c);

  friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
  friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator*(EpsPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const EpsPoly&, const EpsPoly&) = default;

  EpsPoly pow(unsigned e) const;

 private:
  void trim();
  std::vector<Rational> coefs_;
};

std::pair<EpsPoly, EpsPoly> divmod(const EpsPoly& a, const EpsPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
EpsPoly gcd(const EpsPoly& a, const EpsPoly& b);
EpsPoly exact_quotient(const EpsPoly& a, const EpsPoly& b);

/// Element of Q(eps): a reduced fraction num/den with den's lowest-order
/// nonzero coefficient equal to 1. Zero is 0/1.
class EpsScalar {
 public:
  EpsScalar() : den_(1) {}
  EpsScalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  EpsScalar(int c) : EpsScalar(Rational(c)) {}        // NOLINT
  EpsScalar(const EpsPoly& p) : num_(p), den_(1) {}   // NOLINT
  EpsScalar(EpsPoly num, EpsPoly den);

  /// eps^k for any integer k.
  static EpsScalar eps_power(int k);

  const EpsPoly& num() const { return num_; }
  const EpsPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// val(num) - val(den). Throws ZeroInput on zero.
  int valuation() const;
  /// Coefficient of eps^valuation() in the Laurent expansion; zero for zero.
  Rational leading_coefficient() const;
  /// Throws PoleAtZero when valuation() < 0.
  Rational value_at_zero() const;
  /// Coefficient of eps^k in the Laurent expansion at eps = 0.
  Rational laurent_coefficient(int k) const;

  EpsScalar inverse() const;
  EpsScalar operator-() const;

  friend EpsScalar operator+(const EpsScalar& a, const EpsScalar& b);
  friend EpsScalar operator-(const EpsScalar& a, const EpsScalar& b);
  friend EpsScalar operator*(const EpsScalar& a, const EpsScalar& b);
  friend EpsScalar operator/(const EpsScalar& a, const EpsScalar& b);
  EpsScalar& operator+=(const EpsScalar& b) { return *this = *this + b; }
  EpsScalar& operator-=(const EpsScalar& b) { return *this = *this - b; }
  EpsScalar& operator*=(const EpsScalar& b) { return *this = *this * b; }
  EpsScalar& operator/=(const EpsScalar& b) { return *this = *this / b; }
  friend bool operator==(const EpsScalar&, const EpsScalar&) = default;

  EpsScalar pow(unsigned e) const;

 private:
  struct Reduced {};
  EpsScalar(EpsPoly num, EpsPoly den, Reduced)
      : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  EpsPoly num_;
  EpsPoly den_;
};

inline bool is_zero(const EpsPoly& p) { return p.is_zero(); }
inline bool is_zero(const EpsScalar& s) { return s.is_zero(); }

int eps_valuation(const EpsScalar& s);

}  // namespace deborder
