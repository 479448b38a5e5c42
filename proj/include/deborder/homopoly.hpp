#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "deborder/eps.hpp"
#include "deborder/errors.hpp"
#include "deborder/rational.hpp"

namespace deborder {

/// Exponent vector, one entry per ambient variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
  static Monomial unit(std::size_t nvars, std::size_t var, unsigned power = 1) {
    std::vector<unsigned> e(nvars, 0);
    e[var] = power;
    return Monomial(std::move(e));
  }

  std::size_t nvars() const { return exps_.size(); }
  unsigned degree() const {
    unsigned d = 0;
    for (unsigned e : exps_) d += e;
    return d;
  }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exps() const { return exps_; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

std::string to_string(const Monomial& m);

/// Graded lexicographic order, largest first: higher total degree, then
/// larger exponent of x_0, then of x_1, ...
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exps() > b.exps();
  }
};

/// All monomials of total degree `degree` in `nvars` variables, grlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Multinomial coefficient degree! / prod(exps!).
Integer multinomial(const Monomial& m);

/// Sparse homogeneous polynomial. The zero polynomial keeps its degree tag.
template <class S>
class HomoPoly {
 public:
  using Terms = std::map<Monomial, S, GrlexDescending>;

  HomoPoly() : nvars_(1), degree_(0) {}
  HomoPoly(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
    if (nvars == 0) throw PreconditionViolated("polynomial with zero variables");
  }

  static HomoPoly constant(std::size_t nvars, const S& c) {
    HomoPoly p(nvars, 0);
    p.add_term(Monomial(std::vector<unsigned>(nvars, 0)), c);
    return p;
  }
  static HomoPoly monomial(const Monomial& m, const S& c) {
    HomoPoly p(m.nvars(), m.degree());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S() : it->second;
  }

  /// Accumulates c into the coefficient of m; drops the entry if it cancels.
  void add_term(const Monomial& m, const S& c) {
    if (m.nvars() != nvars_) throw DimensionMismatch("monomial arity", to_string(m));
    if (m.degree() != degree_) throw PreconditionViolated("non-homogeneous term", to_string(m));
    if (deborder::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (deborder::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Variables that occur in some term.
  std::vector<std::size_t> support() const {
    std::vector<bool> seen(nvars_, false);
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i] > 0) seen[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (seen[i]) out.push_back(i);
    return out;
  }

  HomoPoly operator-() const {
    HomoPoly r(nvars_, degree_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, S() - c);
    return r;
  }
  HomoPoly& operator+=(const HomoPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  HomoPoly& operator-=(const HomoPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, S() - c);
    return *this;
  }
  friend HomoPoly operator+(HomoPoly a, const HomoPoly& b) { return a += b; }
  friend HomoPoly operator-(HomoPoly a, const HomoPoly& b) { return a -= b; }

  HomoPoly scaled(const S& s) const {
    HomoPoly r(nvars_, degree_);
    if (deborder::is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }

  friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) {
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial arity");
    HomoPoly r(a.nvars_, a.degree_ + b.degree_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        std::vector<unsigned> e(a.nvars_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ma[i] + mb[i];
        r.add_term(Monomial(std::move(e)), ca * cb);
      }
    return r;
  }

  friend bool operator==(const HomoPoly& a, const HomoPoly& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Coefficientwise map to another ring.
  template <class F>
  auto map_coefficients(F&& fn) const -> HomoPoly<std::decay_t<decltype(fn(std::declval<S>()))>> {
    HomoPoly<std::decay_t<decltype(fn(std::declval<S>()))>> r(nvars_, degree_);
    for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
    return r;
  }

 private:
  void check_compatible(const HomoPoly& o) const {
    if (o.nvars_ != nvars_) throw DimensionMismatch("polynomial arity");
    if (o.degree_ != degree_) throw DimensionMismatch("polynomial degree");
  }

  std::size_t nvars_;
  unsigned degree_;
  Terms terms_;
};

using RationalPoly = HomoPoly<Rational>;
using EpsScalarPoly = HomoPoly<EpsScalar>;

template <class S>
HomoPoly<S> lift(const HomoPoly<Rational>& p) {
  return p.map_coefficients([](const Rational& c) { return S(c); });
}

/// d-th power of the linear form sum_i coefs[i] x_i via the multinomial expansion.
template <class S>
HomoPoly<S> power_of_linear(const std::vector<S>& coefs, unsigned d) {
  const std::size_t n = coefs.size();
  HomoPoly<S> r(n, d);
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i)
    if (!deborder::is_zero(coefs[i])) active.push_back(i);
  if (active.empty()) return r;
  // powers[k][e] = coefs[active[k]]^e
  std::vector<std::vector<S>> powers(active.size());
  for (std::size_t k = 0; k < active.size(); ++k) {
    powers[k].reserve(d + 1);
    powers[k].push_back(S(1));
    for (unsigned e = 1; e <= d; ++e) powers[k].push_back(powers[k].back() * coefs[active[k]]);
  }
  for (const Monomial& small : monomials_of_degree(active.size(), d)) {
    S c = S(Rational(multinomial(small)));
    std::vector<unsigned> e(n, 0);
    for (std::size_t k = 0; k < active.size(); ++k) {
      e[active[k]] = small[k];
      if (small[k] > 0) c = c * powers[k][small[k]];
    }
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

/// j-th partial derivative with respect to x_var; zero results keep the
/// degree max(degree - j, 0).
template <class S>
HomoPoly<S> differentiate(const HomoPoly<S>& p, std::size_t var, unsigned j) {
  if (j == 0) throw PreconditionViolated("derivative order must be >= 1");
  if (var >= p.nvars()) throw DimensionMismatch("derivative variable out of range");
  const unsigned deg = p.degree() >= j ? p.degree() - j : 0;
  HomoPoly<S> r(p.nvars(), deg);
  for (const auto& [m, c] : p.terms()) {
    if (m[var] < j) continue;
    Monomial dm = m;
    dm[var] -= j;
    r.add_term(dm, c * S(Rational(falling_factorial(m[var], j))));
  }
  return r;
}

/// Sets the listed variables to zero.
template <class S>
HomoPoly<S> restrict_zero(const HomoPoly<S>& p, const std::vector<std::size_t>& vars) {
  HomoPoly<S> r(p.nvars(), p.degree());
  for (const auto& [m, c] : p.terms()) {
    bool keep = true;
    for (std::size_t v : vars)
      if (m[v] > 0) keep = false;
    if (keep) r.add_term(m, c);
  }
  return r;
}

/// Coefficientwise value at eps = 0; throws PoleAtZero naming the first
/// monomial whose coefficient has negative valuation.
HomoPoly<Rational> limit_at_zero(const HomoPoly<EpsScalar>& p);

/// Number of variables needed after a linear change of coordinates: the rank
/// of the span of the first partial derivatives.
std::size_t essential_variable_count(const HomoPoly<Rational>& f);

}  // namespace deborder
