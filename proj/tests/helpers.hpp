#pragma once

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "deborder/deborder.hpp"

namespace testing {

using namespace deborder;

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

/// c0 + c1 eps + c2 eps^2 + ...
inline EpsScalar ep(std::initializer_list<Rational> coefs) {
  return EpsScalar(EpsPoly::from_coefficients(std::vector<Rational>(coefs)));
}

inline EpsScalar eps(int k) { return EpsScalar::eps_power(k); }

inline RationalPoly poly(std::size_t n, unsigned d,
                         std::initializer_list<std::pair<std::vector<unsigned>, Rational>> terms) {
  RationalPoly p(n, d);
  for (const auto& [e, c] : terms) p.add_term(Monomial(e), c);
  return p;
}

inline LinearForm<Rational> form(std::initializer_list<Rational> c) {
  return LinearForm<Rational>(std::vector<Rational>(c));
}

inline LinearForm<EpsScalar> eform(std::initializer_list<EpsScalar> c) {
  return LinearForm<EpsScalar>(std::vector<EpsScalar>(c));
}

/// Naive power sum by repeated multiplication; avoids the multinomial path.
template <class S>
HomoPoly<S> naive_power(const std::vector<S>& coefs, unsigned d) {
  const std::size_t n = coefs.size();
  HomoPoly<S> lin(n, 1);
  for (std::size_t i = 0; i < n; ++i) lin.add_term(Monomial::unit(n, i), coefs[i]);
  HomoPoly<S> r = HomoPoly<S>::constant(n, S(1));
  for (unsigned k = 0; k < d; ++k) r = r * lin;
  return r;
}

inline RationalPoly naive_expand(const WaringDecomposition& w) {
  RationalPoly r(w.nvars(), w.degree());
  for (const auto& s : w.summands()) r += naive_power(s.form.coefs(), w.degree()).scaled(s.weight);
  return r;
}

inline EpsScalarPoly naive_expand(const BorderDecomposition& b) {
  EpsScalarPoly r(b.nvars(), b.degree());
  for (const auto& s : b.summands()) r += naive_power(s.form.coefs(), b.degree()).scaled(s.weight);
  return r;
}

/// Value of a rational polynomial at a rational point (Horner-free, direct).
inline Rational evaluate(const RationalPoly& p, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= x[i];
    total += t;
  }
  return total;
}

inline Rational random_rational(std::mt19937_64& rng, int h = 9) {
  const long p = static_cast<long>(rng() % (2 * h + 1)) - h;
  const long d = static_cast<long>(rng() % h) + 1;
  return q(p, d);
}

inline RationalPoly random_poly(std::mt19937_64& rng, std::size_t n, unsigned d, int density = 3) {
  RationalPoly p(n, d);
  const auto monos = monomials_of_degree(n, d);
  for (int k = 0; k < density; ++k) p.add_term(monos[rng() % monos.size()], random_rational(rng));
  return p;
}

inline EpsScalar random_eps(std::mt19937_64& rng) {
  EpsScalar num = ep({random_rational(rng), random_rational(rng), random_rational(rng)});
  EpsScalar den = ep({q(static_cast<long>(rng() % 3) + 1), random_rational(rng)});
  if (num.is_zero()) num = ep({q(1)});
  return num / den * eps(static_cast<int>(rng() % 5) - 2);
}

}  // namespace testing
