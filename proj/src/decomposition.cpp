#include "deborder/decomposition.hpp"

#include <algorithm>
#include <map>

namespace deborder {

namespace {

EpsPoly lcm(const EpsPoly& a, const EpsPoly& b) {
  if (a == b || b.is_one()) return a;
  if (a.is_one()) return b;
  if (a.is_monomial() && b.is_monomial())
    return EpsPoly::monomial(1, std::max(a.valuation(), b.valuation()));
  return exact_quotient(a, gcd(a, b)) * b;
}

template <class S>
void check_shape(const Decomposition<S>& d, const HomoPoly<Rational>& f) {
  if (d.nvars() != f.nvars()) throw DimensionMismatch("decomposition and target differ in arity");
  if (d.degree() != f.degree()) throw DimensionMismatch("decomposition and target differ in degree");
}

std::string first_difference(const HomoPoly<Rational>& a, const HomoPoly<Rational>& b) {
  auto diff = a - b;
  return diff.is_zero() ? std::string() : to_string(diff.terms().begin()->first);
}

}  // namespace

ChangeOfVars ChangeOfVars::from_matrix(EpsMatrix m) {
  if (!is_unit_at_zero(m)) throw PreconditionViolated("change of variables is not invertible at eps = 0");
  RationalMatrix a0 = limit_at_zero(m);
  return {std::move(m), std::move(a0)};
}

ChangeOfVars ChangeOfVars::from_rational(const RationalMatrix& m) {
  if (rank(m) != m.rows() || !m.is_square()) throw Singular("change of variables is singular");
  return {lift(m), m};
}

int ExpandedSum::valuation(const EpsPoly& coefficient) const {
  return static_cast<int>(coefficient.valuation()) - static_cast<int>(denom.valuation());
}

std::optional<Monomial> ExpandedSum::first_pole() const {
  for (const auto& [m, c] : numer.terms())
    if (valuation(c) < 0) return m;
  return std::nullopt;
}

HomoPoly<Rational> ExpandedSum::limit() const {
  HomoPoly<Rational> r(numer.nvars(), numer.degree());
  const unsigned v = denom.valuation();
  const Rational inv = 1 / denom.lowest_coefficient();
  for (const auto& [m, c] : numer.terms()) {
    if (valuation(c) < 0) throw PoleAtZero("coefficient has a pole at eps = 0", to_string(m));
    r.add_term(m, c.coefficient(v) * inv);
  }
  return r;
}

HomoPoly<EpsScalar> ExpandedSum::to_poly() const {
  HomoPoly<EpsScalar> r(numer.nvars(), numer.degree());
  for (const auto& [m, c] : numer.terms()) r.add_term(m, EpsScalar(c, denom));
  return r;
}

HomoPoly<Rational> expand(const WaringDecomposition& w) {
  HomoPoly<Rational> r(w.nvars(), w.degree());
  for (const auto& s : w.summands()) r += s.form.power(w.degree()).scaled(s.weight);
  return r;
}

ExpandedSum expand(const BorderDecomposition& b) {
  struct Part {
    EpsPoly num, den;
    std::vector<EpsPoly> form;
  };
  std::vector<Part> parts;
  EpsPoly common(1);
  for (const auto& s : b.summands()) {
    EpsPoly form_den(1);
    for (const auto& c : s.form.coefs()) form_den = lcm(form_den, c.den());
    std::vector<EpsPoly> form;
    form.reserve(s.form.nvars());
    for (const auto& c : s.form.coefs())
      form.push_back(c.is_zero() ? EpsPoly() : c.num() * exact_quotient(form_den, c.den()));
    const EpsScalar factor = s.weight / EpsScalar(form_den.pow(b.degree()));
    common = lcm(common, factor.den());
    parts.push_back({factor.num(), factor.den(), std::move(form)});
  }
  ExpandedSum out{HomoPoly<EpsPoly>(b.nvars(), b.degree()), common};
  for (const auto& p : parts) {
    const EpsPoly scale = p.num * exact_quotient(common, p.den);
    const auto expanded = power_of_linear(p.form, b.degree());
    for (const auto& [m, c] : expanded.terms()) out.numer.add_term(m, c * scale);
  }
  return out;
}

VerifyResult verify_waring(const WaringDecomposition& w, const HomoPoly<Rational>& f) {
  check_shape(w, f);
  const auto s = expand(w);
  VerifyResult r;
  r.ok = s == f;
  if (!r.ok) {
    r.reason = "power sum differs from target";
    r.witness = first_difference(s, f);
  }
  return r;
}

VerifyResult verify_border(const BorderDecomposition& b, const HomoPoly<Rational>& f) {
  check_shape(b, f);
  const ExpandedSum s = expand(b);
  if (s.is_zero()) throw DegenerateInput("all summands cancel: the power sum is identically zero");
  VerifyResult r;
  if (auto pole = s.first_pole()) {
    r.reason = "coefficient has a pole at eps = 0";
    r.witness = to_string(*pole);
    return r;
  }
  const auto lim = s.limit();
  if (lim.is_zero()) {
    r.reason = "limit at eps = 0 is zero";
    return r;
  }
  if (lim != f) {
    r.reason = "limit differs from target";
    r.witness = first_difference(lim, f);
    return r;
  }
  r.ok = true;
  // S - f = (numer - denom * f) / denom
  HomoPoly<EpsPoly> diff = s.numer;
  for (const auto& [m, c] : f.terms()) diff.add_term(m, -(s.denom * c));
  for (const auto& [m, c] : diff.terms()) {
    const int v = s.valuation(c);
    if (!r.order || v < *r.order) r.order = v;
  }
  return r;
}

HomoPoly<Rational> border_limit(const BorderDecomposition& b) {
  const ExpandedSum s = expand(b);
  if (auto pole = s.first_pole()) throw PoleAtZero("coefficient has a pole at eps = 0", to_string(*pole));
  return s.limit();
}

BorderDecomposition extract_content(const BorderDecomposition& b) {
  BorderDecomposition out(b.nvars(), b.degree());
  for (const auto& s : b.summands()) {
    EpsPoly den(1);
    for (const auto& c : s.form.coefs()) den = lcm(den, c.den());
    std::vector<EpsPoly> cleared;
    unsigned v = ~0u;
    for (const auto& c : s.form.coefs()) {
      cleared.push_back(c.is_zero() ? EpsPoly() : c.num() * exact_quotient(den, c.den()));
      if (!cleared.back().is_zero()) v = std::min(v, cleared.back().valuation());
    }
    std::vector<EpsScalar> form;
    for (auto& c : cleared) form.emplace_back(c.shifted_down(c.is_zero() ? 0 : v));
    // l = (eps^v / den) * form
    const EpsScalar content = EpsScalar::eps_power(static_cast<int>(v)) / EpsScalar(den);
    out.add(s.weight * content.pow(b.degree()), LinearForm<EpsScalar>(std::move(form)));
  }
  return out;
}

BorderDecomposition normalize_border(const BorderDecomposition& b) {
  border_limit(b);  // rejects poles
  const BorderDecomposition c = extract_content(b);
  BorderDecomposition out(b.nvars(), b.degree());
  for (const auto& s : c.summands()) {
    const int v = s.weight.valuation();
    if (v >= 1) continue;
    const unsigned keep = static_cast<unsigned>(-v);
    std::vector<EpsScalar> form;
    for (const auto& x : s.form.coefs()) form.emplace_back(x.num().truncated(keep));
    out.add(s.weight, LinearForm<EpsScalar>(std::move(form)));
  }
  return out;
}

bool is_normalized(const BorderDecomposition& b) {
  for (const auto& s : b.summands()) {
    if (s.weight.valuation() >= 1) return false;
    int v = -1;
    for (const auto& c : s.form.coefs()) {
      if (c.is_zero()) continue;
      if (!c.is_polynomial()) return false;
      if (v < 0 || c.valuation() < v) v = c.valuation();
      if (c.num().degree() > -s.weight.valuation()) return false;
    }
    if (v != 0) return false;
  }
  return true;
}

LinearForm<Rational> base_of_form(const LinearForm<EpsScalar>& l) {
  int v = 0;
  bool first = true;
  for (const auto& c : l.coefs()) {
    if (c.is_zero()) continue;
    if (first || c.valuation() < v) v = c.valuation();
    first = false;
  }
  if (first) throw ZeroInput("base of the zero form");
  std::vector<Rational> lead;
  for (const auto& c : l.coefs())
    lead.push_back(!c.is_zero() && c.valuation() == v ? c.leading_coefficient() : Rational(0));
  Rational pivot;
  for (const auto& x : lead)
    if (!is_zero(x)) {
      pivot = x;
      break;
    }
  for (auto& x : lead) x /= pivot;
  return LinearForm<Rational>(std::move(lead));
}

std::optional<LinearForm<Rational>> is_local(const BorderDecomposition& b) {
  if (b.empty()) throw PreconditionViolated("locality of an empty decomposition");
  auto base = base_of_form(b.summands().front().form);
  for (const auto& s : b.summands())
    if (!(base_of_form(s.form) == base)) return std::nullopt;
  return base;
}

EssentialReduction essential_reduce(const HomoPoly<Rational>& f, const BorderDecomposition& b) {
  const std::size_t n = f.nvars();
  if (b.nvars() != n) throw DimensionMismatch("decomposition and target differ in arity");
  std::size_t N = 0;
  RationalMatrix T = RationalMatrix::identity(n);
  if (f.degree() > 0 && !f.is_zero()) {
    const auto cols = monomials_of_degree(n, f.degree() - 1);
    std::map<Monomial, std::size_t, GrlexDescending> index;
    for (std::size_t j = 0; j < cols.size(); ++j) index.emplace(cols[j], j);
    // Transposed Jacobian: column i holds the coefficients of d f / d x_i.
    RationalMatrix jt(cols.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto expanded = differentiate(f, i, 1);
      for (const auto& [m, c] : expanded.terms()) jt(index.at(m), i) = c;
    }
    const Echelon<Rational> e = row_reduce(jt);
    N = e.pivot_cols.size();
    const auto kernel = nullspace(jt);
    T = RationalMatrix(n, n);
    std::size_t col = 0;
    for (std::size_t p : e.pivot_cols) T(p, col++) = 1;
    for (const auto& k : kernel) {
      for (std::size_t i = 0; i < n; ++i) T(i, col) = k[i];
      ++col;
    }
  }
  if (N > b.rank())
    throw AssertionViolation("essential variables exceed the number of summands",
                             std::to_string(N) + " > " + std::to_string(b.rank()));
  EssentialReduction out{substitute_linear(f, T), transform(b, lift(T)),
                         ChangeOfVars::from_rational(T), inverse(T), N};
  for (std::size_t v : out.f.support())
    if (v >= N) throw AssertionViolation("reduced polynomial uses a non-essential variable");
  return out;
}

BorderDecomposition transform(const BorderDecomposition& b, const EpsMatrix& m) {
  if (m.rows() != b.nvars()) throw DimensionMismatch("transform arity");
  BorderDecomposition out(m.cols(), b.degree());
  for (const auto& s : b.summands())
    if (auto form = LinearForm<EpsScalar>::nonzero(row_times(s.form.coefs(), m)))
      out.add(s.weight, std::move(*form));
  return out;
}

WaringDecomposition transform(const WaringDecomposition& w, const RationalMatrix& m) {
  if (m.rows() != w.nvars()) throw DimensionMismatch("transform arity");
  WaringDecomposition out(m.cols(), w.degree());
  for (const auto& s : w.summands())
    if (auto form = LinearForm<Rational>::nonzero(row_times(s.form.coefs(), m)))
      out.add(s.weight, std::move(*form));
  return out;
}

BorderDecomposition scale_weights(const BorderDecomposition& b, const EpsScalar& factor) {
  BorderDecomposition out(b.nvars(), b.degree());
  if (factor.is_zero()) return out;
  for (const auto& s : b.summands()) out.add(s.weight * factor, s.form);
  return out;
}

BorderDecomposition lift(const WaringDecomposition& w) {
  BorderDecomposition out(w.nvars(), w.degree());
  for (const auto& s : w.summands()) {
    std::vector<EpsScalar> c(s.form.coefs().begin(), s.form.coefs().end());
    out.add(EpsScalar(s.weight), LinearForm<EpsScalar>(std::move(c)));
  }
  return out;
}

WaringDecomposition compress(const WaringDecomposition& w) {
  std::vector<std::vector<Rational>> forms;
  std::vector<Rational> weights;
  std::map<std::vector<Rational>, std::size_t> index;
  for (const auto& s : w.summands()) {
    std::vector<Rational> f = s.form.coefs();
    Rational weight = s.weight;
    if (w.degree() == 0) {
      f.assign(w.nvars(), Rational(0));
      f[0] = 1;
    } else {
      Rational lead;
      for (const auto& x : f)
        if (!is_zero(x)) {
          lead = x;
          break;
        }
      for (auto& x : f) x /= lead;
      weight *= power(lead, w.degree());
    }
    auto [it, inserted] = index.try_emplace(f, forms.size());
    if (inserted) {
      forms.push_back(std::move(f));
      weights.push_back(weight);
    } else {
      weights[it->second] += weight;
    }
  }
  WaringDecomposition out(w.nvars(), w.degree());
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (!is_zero(weights[i])) out.add(weights[i], LinearForm<Rational>(forms[i]));
  return out;
}

}  // namespace deborder
