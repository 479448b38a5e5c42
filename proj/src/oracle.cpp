#include "deborder/oracle.hpp"

#include <random>

#include "deborder/deborder.hpp"

namespace deborder {

BinaryForm BinaryForm::from_poly(const HomoPoly<Rational>& f) {
  if (f.nvars() != 2) throw DimensionMismatch("binary form needs exactly 2 variables");
  if (f.is_zero()) throw ZeroInput("zero binary form");
  BinaryForm b{f.degree(), std::vector<Rational>(f.degree() + 1)};
  for (const auto& [m, c] : f.terms()) b.coefs[m[1]] = c;
  return b;
}

namespace {

RationalMatrix binary_catalecticant(const std::vector<Rational>& c, unsigned d, unsigned s) {
  RationalMatrix m(d - s + 1, s + 1);
  for (unsigned i = 0; i + s <= d; ++i)
    for (unsigned j = 0; j <= s; ++j) m(i, j) = c[i + j];
  return m;
}

/// g(u,v) = sum_j k_j u^(s-j) v^j has s distinct roots on the projective line.
bool square_free(const std::vector<Rational>& k) {
  const std::size_t s = k.size() - 1;
  std::size_t low = 0;
  while (low <= s && is_zero(k[low])) ++low;
  if (low > 1) return false;
  // p(t) = g(t, 1), coefficients by ascending power of t
  std::vector<Rational> p(s + 1);
  for (std::size_t j = 0; j <= s; ++j) p[s - j] = k[j];
  const EpsPoly poly = EpsPoly::from_coefficients(p);
  if (poly.degree() <= 0) return true;
  std::vector<Rational> dp(static_cast<std::size_t>(poly.degree()));
  for (std::size_t i = 1; i < p.size(); ++i)
    if (i <= dp.size()) dp[i - 1] = p[i] * static_cast<long>(i);
  return gcd(poly, EpsPoly::from_coefficients(dp)).degree() == 0;
}

}  // namespace

SylvesterRanks sylvester_rank(const BinaryForm& f) {
  const unsigned d = f.degree;
  if (f.coefs.size() != d + 1) throw DimensionMismatch("binary form coefficient count");
  bool any = false;
  for (const auto& a : f.coefs) any = any || !is_zero(a);
  if (!any) throw ZeroInput("zero binary form");
  if (d == 0) return {1, 1};

  std::vector<Rational> c(d + 1);
  for (unsigned i = 0; i <= d; ++i) c[i] = f.coefs[i] / Rational(binomial(d, i));

  unsigned a = 1;
  std::vector<std::vector<Rational>> kernel;
  for (; a <= d; ++a) {
    kernel = nullspace(binary_catalecticant(c, d, a));
    if (!kernel.empty()) break;
  }
  SylvesterRanks out{d + 2 - a, a};
  if (kernel.size() == 1) {
    if (square_free(kernel[0])) out.wr = a;
  } else {
    // A pencil: the discriminant has degree <= 2a-2 along the line.
    for (unsigned t = 0; t <= 2 * a - 2; ++t) {
      std::vector<Rational> k = kernel[0];
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += Rational(t) * kernel[1][i];
      if (square_free(k)) {
        out.wr = a;
        break;
      }
    }
  }
  return out;
}

std::size_t catalecticant_bound(const HomoPoly<Rational>& f, unsigned s) {
  const unsigned d = f.degree();
  if (s > d) throw PreconditionViolated("catalecticant order exceeds the degree");
  const std::size_t n = f.nvars();
  const auto rows = monomials_of_degree(n, s);
  const auto cols = monomials_of_degree(n, d - s);
  std::map<Monomial, std::size_t, GrlexDescending> col_index;
  for (std::size_t j = 0; j < cols.size(); ++j) col_index.emplace(cols[j], j);
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Monomial& op = rows[i];
    for (const auto& [mono, c] : f.terms()) {
      Rational v = c;
      std::vector<unsigned> rest(n);
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        if (mono[x] < op[x]) {
          ok = false;
          break;
        }
        rest[x] = mono[x] - op[x];
        v *= Rational(falling_factorial(mono[x], op[x]));
      }
      if (ok) m(i, col_index.at(Monomial(std::move(rest)))) += v;
    }
  }
  return rank(m);
}

std::size_t catalecticant_bound(const HomoPoly<Rational>& f) {
  std::size_t best = 0;
  for (unsigned s = 0; s <= f.degree(); ++s) best = std::max(best, catalecticant_bound(f, s));
  return best;
}

Family parse_family(const std::string& name) {
  if (name == "tangent") return Family::Tangent;
  if (name == "osculating") return Family::Osculating;
  if (name == "multibase") return Family::Multibase;
  if (name == "random") return Family::Random;
  throw PreconditionViolated("unknown family", name);
}

const char* to_string(Family family) {
  switch (family) {
    case Family::Tangent: return "tangent";
    case Family::Osculating: return "osculating";
    case Family::Multibase: return "multibase";
    case Family::Random: return "random";
  }
  return "?";
}

namespace {

EpsScalar eps_linear(const Rational& c0, const Rational& c1, const Rational& c2 = 0) {
  return EpsScalar(EpsPoly::from_coefficients({c0, c1, c2}));
}

LinearForm<EpsScalar> eps_form(std::size_t n, const std::vector<std::pair<std::size_t, EpsScalar>>& entries) {
  std::vector<EpsScalar> c(n);
  for (const auto& [v, x] : entries) c[v] += x;
  return LinearForm<EpsScalar>(std::move(c));
}

/// Osculating certificate of x^(d-j) y^j in variables (x, y) = (0, 1).
FamilyInstance osculating(unsigned d, unsigned j, std::size_t n) {
  FamilyInstance out{HomoPoly<Rational>(n, d), BorderDecomposition(n, d)};
  std::vector<unsigned> e(n, 0);
  e[0] = d - j;
  e[1] = j;
  out.f.add_term(Monomial(e), 1);
  const Rational scale = Rational(1) / Rational(falling_factorial(d, j));
  for (unsigned i = 0; i <= j; ++i) {
    Rational w = scale * Rational(binomial(j, i));
    if ((j - i) % 2 == 1) w = -w;
    std::vector<std::pair<std::size_t, EpsScalar>> entries{{0, EpsScalar(1)}};
    if (i > 0) entries.push_back({1, eps_linear(0, i)});
    out.border.add(EpsScalar(w) * EpsScalar::eps_power(-static_cast<int>(j)), eps_form(n, entries));
  }
  return out;
}

std::int64_t draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational draw_rational(std::mt19937_64& rng, bool nonzero) {
  for (;;) {
    Rational q(static_cast<long>(draw(rng, -9, 9)), static_cast<unsigned long>(draw(rng, 1, 9)));
    q.canonicalize();
    if (!nonzero || !is_zero(q)) return q;
  }
}

std::vector<Rational> draw_vector(std::mt19937_64& rng, std::size_t n, bool nonzero) {
  for (;;) {
    std::vector<Rational> v(n);
    bool any = false;
    for (auto& x : v) {
      x = static_cast<long>(draw(rng, -9, 9));
      any = any || !is_zero(x);
    }
    if (any || !nonzero) return v;
  }
}

/// Groups of points on quadratic curves through random bases; the weights
/// extract the lowest nonvanishing order of each group's expansion.
std::optional<FamilyInstance> random_attempt(std::mt19937_64& rng, unsigned d, std::size_t n, unsigned r) {
  BorderDecomposition b(n, d);
  unsigned left = r;
  while (left > 0) {
    const unsigned m = static_cast<unsigned>(draw(rng, 1, std::min<int>(static_cast<int>(left), 3)));
    left -= m;
    const auto base = draw_vector(rng, n, true);
    const auto u = draw_vector(rng, n, false);
    const auto v = draw_vector(rng, n, false);
    std::vector<Rational> nodes;
    while (nodes.size() < m) {
      const Rational t = static_cast<long>(draw(rng, -4, 4));
      if (std::find(nodes.begin(), nodes.end(), t) == nodes.end()) nodes.push_back(t);
    }
    std::vector<Rational> rhs(m);
    rhs[m - 1] = 1;
    const auto c = solve_vandermonde_transposed(nodes, rhs);
    const Rational a = draw_rational(rng, true);
    const Rational rho = draw_rational(rng, false);
    for (unsigned i = 0; i < m; ++i) {
      if (is_zero(c[i])) continue;
      std::vector<EpsScalar> coefs(n);
      for (std::size_t x = 0; x < n; ++x)
        coefs[x] = eps_linear(base[x], nodes[i] * u[x], nodes[i] * nodes[i] * v[x]);
      auto form = LinearForm<EpsScalar>::nonzero(std::move(coefs));
      if (!form) return std::nullopt;
      const EpsScalar w = eps_linear(a * c[i], a * c[i] * rho) * EpsScalar::eps_power(-static_cast<int>(m - 1));
      b.add(w, std::move(*form));
    }
  }
  const ExpandedSum sum = expand(b);
  if (sum.is_zero() || sum.first_pole()) return std::nullopt;
  HomoPoly<Rational> f = sum.limit();
  if (f.is_zero()) return std::nullopt;
  return FamilyInstance{std::move(f), std::move(b)};
}

}  // namespace

FamilyInstance gen_family(const FamilySpec& spec) {
  const unsigned d = spec.d;
  switch (spec.family) {
    case Family::Tangent:
    case Family::Osculating: {
      const unsigned j = spec.family == Family::Tangent ? 1 : spec.j;
      if (d < 2) throw PreconditionViolated("family needs d >= 2");
      if (j < 1 || j >= d) throw PreconditionViolated("osculating order must satisfy 1 <= j < d");
      const std::size_t n = spec.nvars == 0 ? 2 : spec.nvars;
      if (n < 2) throw PreconditionViolated("family needs at least 2 variables");
      return osculating(d, j, n);
    }
    case Family::Multibase: {
      if (d < 2) throw PreconditionViolated("family needs d >= 2");
      const std::size_t n = spec.nvars == 0 ? 4 : spec.nvars;
      if (n < 4) throw PreconditionViolated("multibase family needs at least 4 variables");
      // variables x, y, u, v = 0, 1, 2, 3
      FamilyInstance out{HomoPoly<Rational>(n, d), BorderDecomposition(n, d)};
      const EpsScalar inv_eps = EpsScalar::eps_power(-1);
      for (const auto& [base, dir] : {std::pair<std::size_t, std::size_t>{0, 2}, {1, 3}}) {
        out.border.add(inv_eps, eps_form(n, {{base, EpsScalar(1)}, {dir, eps_linear(0, 1)}}));
        out.border.add(-inv_eps, eps_form(n, {{base, EpsScalar(1)}}));
        Monomial m = Monomial::unit(n, base, d - 1);
        m[dir] = 1;
        out.f.add_term(m, Rational(d));
      }
      return out;
    }
    case Family::Random: {
      if (d < 1) throw PreconditionViolated("family needs d >= 1");
      if (spec.rank < 1) throw PreconditionViolated("random family needs rank >= 1");
      const std::size_t n = spec.nvars == 0 ? spec.rank : spec.nvars;
      std::mt19937_64 rng(spec.seed);
      for (int attempt = 0; attempt < 100; ++attempt)
        if (auto inst = random_attempt(rng, d, n, spec.rank)) return std::move(*inst);
      throw RetryLimitExceeded("random family produced only vanishing limits");
    }
  }
  throw PreconditionViolated("unknown family");
}

WaringDecomposition monomial_upper(const Monomial& m) {
  const std::size_t n = m.nvars();
  std::size_t first = 0;
  while (first < n && m[first] == 0) ++first;
  if (first == n) {
    WaringDecomposition w(std::max<std::size_t>(n, 1), 0);
    w.add(1, LinearForm<Rational>::variable(std::max<std::size_t>(n, 1), 0));
    return w;
  }
  WaringDecomposition w(n, m[first]);
  w.add(1, LinearForm<Rational>::variable(n, first));
  for (std::size_t v = first + 1; v < n; ++v)
    if (m[v] > 0) w = multiply_by_power(w, LinearForm<Rational>::variable(n, v), m[v]);
  return w;
}

}  // namespace deborder
