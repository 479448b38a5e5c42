#include "deborder/diagonalize.hpp"

#include <algorithm>
#include <string>

namespace deborder {

namespace {

/// Minimal valuation over the nonzero entries; nullopt for the zero vector.
std::optional<int> vector_valuation(const std::vector<EpsScalar>& v) {
  std::optional<int> best;
  for (const auto& c : v)
    if (!c.is_zero() && (!best || c.valuation() < *best)) best = c.valuation();
  return best;
}

std::vector<Rational> leading_vector(const std::vector<EpsScalar>& v, int valuation) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& c : v)
    out.push_back(!c.is_zero() && c.valuation() == valuation ? c.leading_coefficient() : Rational(0));
  return out;
}

}  // namespace

std::vector<EpsScalar> DvrEchelon::reduce(std::vector<EpsScalar> v) const {
  for (const auto& p : pivots_) {
    if (v[p.column].is_zero()) continue;
    const EpsScalar factor = v[p.column] / p.vector[p.column];
    if (factor.valuation() < 0)
      throw AssertionViolation("reduction factor outside the valuation ring");
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!p.vector[i].is_zero()) v[i] -= factor * p.vector[i];
  }
  return v;
}

DvrEchelon::Choice DvrEchelon::select(const std::vector<std::vector<EpsScalar>>& candidates) const {
  std::optional<Choice> best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto reduced = reduce(candidates[i]);
    const auto v = vector_valuation(reduced);
    if (!v || (best && *v >= best->valuation)) continue;
    best = Choice{i, *v, leading_vector(reduced, *v), std::move(reduced)};
  }
  if (!best) throw NoPivot("every candidate reduces to zero");
  return *best;
}

void DvrEchelon::push(std::vector<EpsScalar> reduced) {
  const auto v = vector_valuation(reduced);
  if (!v) throw NoPivot("zero vector cannot be a pivot");
  std::size_t col = 0;
  while (reduced[col].is_zero() || reduced[col].valuation() != *v) ++col;
  pivots_.push_back({std::move(reduced), col, *v});
}

DvrEchelon::Choice dvr_reduce_step(const std::vector<LinearForm<EpsScalar>>& candidates,
                                   const DvrEchelon& state) {
  std::vector<std::vector<EpsScalar>> vs;
  vs.reserve(candidates.size());
  for (const auto& c : candidates) vs.push_back(c.coefs());
  return state.select(vs);
}

DiagonalizedDecomposition diagonalize(const BorderDecomposition& b, const HomoPoly<Rational>& f) {
  if (const auto check = verify_border(b, f); !check)
    throw VerificationFailed(check.reason, check.witness);
  const BorderDecomposition nb = normalize_border(b);
  const std::size_t n = nb.nvars();
  const std::size_t r = nb.rank();

  std::vector<std::size_t> remaining(r);
  std::vector<std::vector<EpsScalar>> reduced(r);
  for (std::size_t i = 0; i < r; ++i) {
    remaining[i] = i;
    reduced[i] = nb.summands()[i].form.coefs();
  }

  DvrEchelon state;
  std::vector<Pivot> pivots;
  while (!remaining.empty()) {
    std::vector<std::vector<EpsScalar>> cands;
    for (std::size_t i : remaining) cands.push_back(reduced[i]);
    DvrEchelon::Choice choice;
    try {
      choice = state.select(cands);
    } catch (const NoPivot&) {
      break;
    }
    const std::size_t source = remaining[choice.index];
    if (!pivots.empty() && choice.valuation < pivots.back().valuation)
      throw AssertionViolation("pivot valuations are not monotone");
    pivots.push_back({pivots.size(), choice.valuation, source});
    state.push(std::move(choice.reduced));
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(choice.index));
    for (std::size_t i : remaining) reduced[i] = state.reduce(std::move(reduced[i]));
  }

  // Rows: eps^{-q_k} * pivot_k, then unit rows for the non-pivot columns.
  const std::size_t p = pivots.size();
  EpsMatrix rows(n, n);
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < p; ++k) {
    const auto& entry = state.pivots()[k];
    used[entry.column] = true;
    const EpsScalar scale = EpsScalar::eps_power(-entry.valuation);
    for (std::size_t j = 0; j < n; ++j) rows(k, j) = entry.vector[j] * scale;
  }
  std::size_t next = p;
  for (std::size_t c = 0; c < n; ++c)
    if (!used[c]) rows(next++, c) = EpsScalar(1);

  ChangeOfVars change = ChangeOfVars::from_matrix(invert_matrix(rows));

  std::vector<std::size_t> perm;
  for (const auto& pv : pivots) perm.push_back(pv.source);
  for (std::size_t i : remaining) perm.push_back(i);

  BorderDecomposition transformed(n, nb.degree());
  for (std::size_t i : perm) {
    const auto& s = nb.summands()[i];
    transformed.add(s.weight, LinearForm<EpsScalar>(row_times(s.form.coefs(), change.matrix)));
  }

  HomoPoly<Rational> limit = substitute_linear(f, change.at_zero);
  DiagonalizedDecomposition d{std::move(transformed), std::move(change), std::move(pivots),
                              std::move(perm), std::move(limit)};
  check_staircase(d);
  if (const auto check = verify_border(d.border, d.limit); !check)
    throw AssertionViolation("diagonalized decomposition does not converge to f(A0 x)", check.witness);
  const std::size_t essential = essential_variable_count(f);
  if (essential > p || p > std::min(n, r))
    throw AssertionViolation("pivot count out of range",
                             std::to_string(essential) + " <= " + std::to_string(p) + " <= " +
                                 std::to_string(std::min(n, r)) + " fails");
  return d;
}

void check_staircase(const DiagonalizedDecomposition& d) {
  const std::size_t p = d.pivots.size();
  const std::size_t n = d.border.nvars();
  for (std::size_t k = 0; k < p; ++k) {
    if (d.pivots[k].position != k) throw AssertionViolation("pivot positions out of order");
    if (k == 0 && d.pivots[k].valuation != 0) throw AssertionViolation("first pivot valuation is not 0");
    if (k > 0 && d.pivots[k].valuation < d.pivots[k - 1].valuation)
      throw AssertionViolation("pivot valuations decrease");
  }
  if (!is_unit_at_zero(d.transform.matrix)) throw AssertionViolation("A_0 is singular");
  const auto& summands = d.border.summands();
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& form = summands[i].form;
    const std::string where = "summand " + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) {
      const EpsScalar& c = form[j];
      if (i < p && j == i) {
        if (!(c == EpsScalar::eps_power(d.pivots[i].valuation)))
          throw AssertionViolation("pivot coefficient is not eps^q", where);
        continue;
      }
      const bool allowed = i < p ? j < i : j < p;
      if (!allowed) {
        if (!c.is_zero()) throw AssertionViolation("variable above the staircase", where);
        continue;
      }
      if (!c.is_zero() && c.valuation() < d.pivots[j].valuation)
        throw AssertionViolation("variable appears below its pivot order", where);
    }
  }
}

DiagonalizedDecomposition substitute_perturbation(const DiagonalizedDecomposition& d,
                                                  std::size_t var,
                                                  const std::vector<EpsScalar>& tail) {
  const std::size_t n = d.border.nvars();
  if (tail.size() != n || var >= n) throw DimensionMismatch("perturbation arity");
  bool any = false;
  for (const auto& t : tail) {
    if (t.is_zero()) continue;
    if (t.valuation() < 1) throw PreconditionViolated("perturbation tail must vanish at eps = 0");
    any = true;
  }
  if (!any) return d;
  EpsMatrix m = EpsMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) m(var, j) -= tail[j];
  DiagonalizedDecomposition out = d;
  out.border = transform(d.border, m);
  out.transform = ChangeOfVars::from_matrix(d.transform.matrix * m);
  return out;
}

BorderDecomposition derivative_along(const BorderDecomposition& b,
                                     const std::vector<EpsScalar>& direction, unsigned j) {
  if (direction.size() != b.nvars()) throw DimensionMismatch("derivative direction arity");
  if (j < 1 || j >= b.degree()) throw PreconditionViolated("derivative order must satisfy 1 <= j < d");
  const EpsScalar scale(Rational(falling_factorial(b.degree(), j)));
  BorderDecomposition out(b.nvars(), b.degree() - j);
  for (const auto& s : b.summands()) {
    EpsScalar c;
    for (std::size_t i = 0; i < direction.size(); ++i)
      if (!direction[i].is_zero()) c += s.form[i] * direction[i];
    if (c.is_zero()) continue;
    out.add(s.weight * scale * c.pow(j), s.form);
  }
  if (out.empty()) throw ZeroDerivative("no summand depends on the derivative direction");
  const ExpandedSum sum = expand(out);
  if (sum.is_zero() || sum.limit().is_zero())
    throw ZeroDerivative("the derivative of the limit vanishes");
  return normalize_border(out);
}

BorderDecomposition derivative_decomposition(const DiagonalizedDecomposition& d,
                                             std::size_t var, unsigned j) {
  if (var >= d.pivots.size()) throw PreconditionViolated("derivative variable is not a pivot variable");
  std::vector<EpsScalar> dir(d.border.nvars());
  dir[var] = EpsScalar(1);
  return derivative_along(d.border, dir, j);
}

BorderDecomposition restrict_vars_zero(const BorderDecomposition& b,
                                       const std::vector<std::size_t>& vars) {
  BorderDecomposition out(b.nvars(), b.degree());
  for (const auto& s : b.summands()) {
    auto c = s.form.coefs();
    for (std::size_t v : vars) {
      if (v >= c.size()) throw DimensionMismatch("restricted variable out of range");
      c[v] = EpsScalar();
    }
    if (auto form = LinearForm<EpsScalar>::nonzero(std::move(c))) out.add(s.weight, std::move(*form));
  }
  return out;
}

}  // namespace deborder
