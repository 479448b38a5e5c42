#include "deborder/eps.hpp"

#include <algorithm>

#include "deborder/errors.hpp"

namespace deborder {

EpsPoly::EpsPoly(const Rational& constant) {
  if (!deborder::is_zero(constant)) coefs_.push_back(constant);
}

EpsPoly EpsPoly::monomial(const Rational& coef, unsigned exponent) {
  EpsPoly p;
  if (deborder::is_zero(coef)) return p;
  p.coefs_.assign(exponent + 1, Rational(0));
  p.coefs_[exponent] = coef;
  return p;
}

EpsPoly EpsPoly::from_coefficients(std::vector<Rational> coefs) {
  EpsPoly p;
  p.coefs_ = std::move(coefs);
  p.trim();
  return p;
}

void EpsPoly::trim() {
  while (!coefs_.empty() && deborder::is_zero(coefs_.back())) coefs_.pop_back();
}

bool EpsPoly::is_one() const { return coefs_.size() == 1 && coefs_[0] == 1; }

unsigned EpsPoly::valuation() const {
  if (coefs_.empty()) throw ZeroInput("valuation of the zero eps-polynomial");
  unsigned k = 0;
  while (deborder::is_zero(coefs_[k])) ++k;
  return k;
}

bool EpsPoly::is_monomial() const {
  return !coefs_.empty() && valuation() + 1 == coefs_.size();
}

Rational EpsPoly::coefficient(unsigned exponent) const {
  return exponent < coefs_.size() ? coefs_[exponent] : Rational(0);
}

EpsPoly EpsPoly::shifted_up(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  EpsPoly p;
  p.coefs_.assign(k, Rational(0));
  p.coefs_.insert(p.coefs_.end(), coefs_.begin(), coefs_.end());
  return p;
}

EpsPoly EpsPoly::shifted_down(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  if (k > valuation())
    throw PreconditionViolated("eps-shift below the valuation");
  EpsPoly p;
  p.coefs_.assign(coefs_.begin() + k, coefs_.end());
  return p;
}

EpsPoly EpsPoly::truncated(unsigned max_exponent) const {
  if (coefs_.size() <= max_exponent + 1) return *this;
  EpsPoly p;
  p.coefs_.assign(coefs_.begin(), coefs_.begin() + max_exponent + 1);
  p.trim();
  return p;
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly p = *this;
  for (auto& c : p.coefs_) c = -c;
  return p;
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& other) {
  if (coefs_.size() < other.coefs_.size()) coefs_.resize(other.coefs_.size());
  for (std::size_t i = 0; i < other.coefs_.size(); ++i) coefs_[i] += other.coefs_[i];
  trim();
  return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& other) {
  if (coefs_.size() < other.coefs_.size()) coefs_.resize(other.coefs_.size());
  for (std::size_t i = 0; i < other.coefs_.size(); ++i) coefs_[i] -= other.coefs_[i];
  trim();
  return *this;
}

EpsPoly& EpsPoly::operator*=(const Rational& c) {
  if (deborder::is_zero(c)) {
    coefs_.clear();
    return *this;
  }
  for (auto& x : coefs_) x *= c;
  return *this;
}

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
  EpsPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.coefs_.assign(a.coefs_.size() + b.coefs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coefs_.size(); ++i) {
    if (deborder::is_zero(a.coefs_[i])) continue;
    for (std::size_t j = 0; j < b.coefs_.size(); ++j)
      p.coefs_[i + j] += a.coefs_[i] * b.coefs_[j];
  }
  p.trim();
  return p;
}

EpsPoly EpsPoly::pow(unsigned e) const {
  EpsPoly result(1);
  EpsPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<EpsPoly, EpsPoly> divmod(const EpsPoly& a, const EpsPoly& b) {
  if (b.is_zero()) throw ZeroInput("division by the zero eps-polynomial");
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {EpsPoly(), a};
  std::vector<Rational> quot(a.degree() - db + 1);
  const Rational lead_inv = 1 / b.leading_coefficient();
  for (int i = a.degree(); i >= db; --i) {
    if (deborder::is_zero(rem[i])) continue;
    const Rational f = rem[i] * lead_inv;
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
  }
  return {EpsPoly::from_coefficients(std::move(quot)),
          EpsPoly::from_coefficients(std::move(rem))};
}

EpsPoly gcd(const EpsPoly& a, const EpsPoly& b) {
  EpsPoly x = a, y = b;
  while (!y.is_zero()) {
    EpsPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * Rational(1 / x.leading_coefficient());
}

EpsPoly exact_quotient(const EpsPoly& a, const EpsPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw AssertionViolation("inexact eps-polynomial division");
  return q;
}

// EpsScalar ---------------------------------------------------------------

EpsScalar::EpsScalar(EpsPoly num, EpsPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

void EpsScalar::reduce() {
  if (den_.is_zero()) throw ZeroInput("eps-fraction with zero denominator");
  if (num_.is_zero()) {
    den_ = EpsPoly(1);
    return;
  }
  const unsigned v = std::min(num_.valuation(), den_.valuation());
  num_ = num_.shifted_down(v);
  den_ = den_.shifted_down(v);
  if (!den_.is_monomial() && !num_.is_monomial()) {
    EpsPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  const Rational c = den_.lowest_coefficient();
  if (c != 1) {
    const Rational inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
}

EpsScalar EpsScalar::eps_power(int k) {
  if (k >= 0) return EpsScalar(EpsPoly::monomial(1, k), EpsPoly(1), Reduced{});
  return EpsScalar(EpsPoly(1), EpsPoly::monomial(1, -k), Reduced{});
}

int EpsScalar::valuation() const {
  if (is_zero()) throw ZeroInput("valuation of zero");
  return static_cast<int>(num_.valuation()) - static_cast<int>(den_.valuation());
}

Rational EpsScalar::leading_coefficient() const {
  if (is_zero()) return 0;
  // den's lowest coefficient is 1 by normalization.
  return num_.lowest_coefficient();
}

Rational EpsScalar::value_at_zero() const {
  if (is_zero()) return 0;
  const int v = valuation();
  if (v < 0) throw PoleAtZero("negative eps-valuation");
  return v == 0 ? leading_coefficient() : Rational(0);
}

Rational EpsScalar::laurent_coefficient(int k) const {
  if (is_zero()) return 0;
  const int m = k - valuation();
  if (m < 0) return 0;
  const EpsPoly n = num_.shifted_down(num_.valuation());
  const EpsPoly d = den_.shifted_down(den_.valuation());
  // Power series n/d with d(0) = 1.
  std::vector<Rational> s(m + 1);
  for (int i = 0; i <= m; ++i) {
    Rational acc = n.coefficient(i);
    for (int j = 1; j <= i && j <= d.degree(); ++j) acc -= d.coefficient(j) * s[i - j];
    s[i] = acc;
  }
  return s[m];
}

EpsScalar EpsScalar::inverse() const {
  if (is_zero()) throw ZeroInput("inverse of zero");
  return EpsScalar(den_, num_);
}

EpsScalar EpsScalar::operator-() const { return EpsScalar(-num_, den_, Reduced{}); }

EpsScalar operator+(const EpsScalar& a, const EpsScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return EpsScalar(a.num_ + b.num_, a.den_, EpsScalar::Reduced{});
    return EpsScalar(a.num_ + b.num_, a.den_);
  }
  return EpsScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

EpsScalar operator-(const EpsScalar& a, const EpsScalar& b) { return a + (-b); }

EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
  if (a.is_zero() || b.is_zero()) return EpsScalar();
  if (a.den_.is_one() && b.den_.is_one())
    return EpsScalar(a.num_ * b.num_, a.den_, EpsScalar::Reduced{});
  return EpsScalar(a.num_ * b.num_, a.den_ * b.den_);
}

EpsScalar operator/(const EpsScalar& a, const EpsScalar& b) {
  if (b.is_zero()) throw ZeroInput("division by zero eps-scalar");
  return EpsScalar(a.num_ * b.den_, a.den_ * b.num_);
}

EpsScalar EpsScalar::pow(unsigned e) const {
  if (e == 0) return EpsScalar(1);
  return EpsScalar(num_.pow(e), den_.pow(e), Reduced{});
}

int eps_valuation(const EpsScalar& s) { return s.valuation(); }

}  // namespace deborder
