#include <algorithm>
#include <set>
#include <string>

#include "deborder/homopoly.hpp"
#include "deborder/matrix.hpp"

namespace deborder {

std::string to_string(const Monomial& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(m[i]);
  }
  return s + "]";
}

namespace {

void enumerate(std::size_t var, unsigned remaining, std::vector<unsigned>& cur,
               std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    enumerate(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) return out;
  std::vector<unsigned> cur(nvars, 0);
  enumerate(0, degree, cur, out);
  return out;
}

Integer multinomial(const Monomial& m) {
  Integer r = factorial(m.degree());
  for (unsigned e : m.exps()) r /= factorial(e);
  return r;
}

HomoPoly<Rational> limit_at_zero(const HomoPoly<EpsScalar>& p) {
  HomoPoly<Rational> r(p.nvars(), p.degree());
  for (const auto& [m, c] : p.terms()) {
    if (c.valuation() < 0) throw PoleAtZero("coefficient has a pole at eps = 0", to_string(m));
    r.add_term(m, c.value_at_zero());
  }
  return r;
}

std::size_t essential_variable_count(const HomoPoly<Rational>& f) {
  if (f.degree() == 0 || f.is_zero()) return 0;
  const auto cols = monomials_of_degree(f.nvars(), f.degree() - 1);
  std::map<Monomial, std::size_t, GrlexDescending> index;
  for (std::size_t j = 0; j < cols.size(); ++j) index.emplace(cols[j], j);
  RationalMatrix jac(f.nvars(), cols.size());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    const auto expanded = differentiate(f, i, 1);
    for (const auto& [m, c] : expanded.terms()) jac(i, index.at(m)) = c;
  }
  return rank(jac);
}

EpsMatrix invert_matrix(const EpsMatrix& m) { return inverse(m); }

EpsMatrix lift(const RationalMatrix& m) {
  EpsMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = EpsScalar(m(i, j));
  return r;
}

RationalMatrix limit_at_zero(const EpsMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).value_at_zero();
  return r;
}

bool is_unit_at_zero(const EpsMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && m(i, j).valuation() < 0) return false;
  return rank(limit_at_zero(m)) == m.rows();
}

namespace {

void check_nodes(const std::vector<Rational>& nodes, const std::vector<Rational>& rhs) {
  if (nodes.size() != rhs.size()) throw DimensionMismatch("nodes and right-hand side differ in length");
  std::set<Rational> seen(nodes.begin(), nodes.end());
  if (seen.size() != nodes.size()) throw DuplicateNodes("Vandermonde nodes must be distinct");
}

}  // namespace

std::vector<Rational> solve_vandermonde(const std::vector<Rational>& nodes,
                                        const std::vector<Rational>& rhs) {
  check_nodes(nodes, rhs);
  const std::size_t n = nodes.size();
  if (n == 0) return {};
  // Newton divided differences in place.
  std::vector<Rational> a = rhs;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) a[i] = (a[i] - a[i - 1]) / (nodes[i] - nodes[i - k]);
  // Horner expansion of the Newton form into monomial coefficients.
  std::vector<Rational> p(n);
  p[0] = a[n - 1];
  std::size_t len = 1;
  for (std::size_t k = n - 1; k-- > 0;) {
    // p <- p * (u - nodes[k]) + a[k]
    p[len] = 0;
    for (std::size_t s = len; s > 0; --s) p[s] = p[s - 1] - nodes[k] * p[s];
    p[0] = a[k] - nodes[k] * p[0];
    ++len;
  }
  return p;
}

std::vector<Rational> solve_vandermonde_transposed(const std::vector<Rational>& nodes,
                                                   const std::vector<Rational>& rhs) {
  check_nodes(nodes, rhs);
  const std::size_t n = nodes.size();
  // master(u) = prod_m (u - nodes[m]), coefficients by ascending power.
  std::vector<Rational> master(n + 1);
  master[0] = 1;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t s = m + 1; s > 0; --s) master[s] = master[s - 1] - nodes[m] * master[s];
    master[0] = -nodes[m] * master[0];
  }
  std::vector<Rational> c(n);
  std::vector<Rational> q(n);
  for (std::size_t j = 0; j < n; ++j) {
    // q(u) = master(u) / (u - nodes[j]) by synthetic division from the top.
    q[n - 1] = master[n];
    for (std::size_t s = n - 1; s > 0; --s) q[s - 1] = master[s] + nodes[j] * q[s];
    Rational value = 0;
    for (std::size_t s = n; s-- > 0;) value = value * nodes[j] + q[s];
    Rational acc = 0;
    for (std::size_t s = 0; s < n; ++s) acc += q[s] * rhs[s];
    c[j] = acc / value;
  }
  return c;
}

}  // namespace deborder
