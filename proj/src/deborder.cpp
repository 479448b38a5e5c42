#include "deborder/deborder.hpp"

#include <mpfr.h>

#include <atomic>
#include <functional>
#include <future>
#include <random>

namespace deborder {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Local: return "LOCAL";
    case CaseTag::Nonlocal: return "NONLOCAL";
    case CaseTag::Base: return "BASE";
  }
  return "?";
}

std::vector<LocalPart> partition_into_local(const BorderDecomposition& b,
                                            const HomoPoly<Rational>& f) {
  if (b.degree() + 1 < b.rank())
    throw PreconditionViolated("local partition requires degree >= rank - 1");
  std::vector<LinearForm<Rational>> bases;
  std::vector<BorderDecomposition> groups;
  for (const auto& s : b.summands()) {
    auto base = base_of_form(s.form);
    std::size_t g = 0;
    while (g < bases.size() && !(bases[g] == base)) ++g;
    if (g == bases.size()) {
      bases.push_back(std::move(base));
      groups.emplace_back(b.nvars(), b.degree());
    }
    groups[g].add(s.weight, s.form);
  }
  std::vector<LocalPart> parts;
  HomoPoly<Rational> total(f.nvars(), f.degree());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const ExpandedSum sum = expand(groups[g]);
    if (auto pole = sum.first_pole())
      throw LemmaCheckFailed("local-partition",
                             "partial sum of a local group does not converge", to_string(*pole));
    auto limit = sum.limit();
    total += limit;
    parts.push_back({std::move(groups[g]), std::move(limit), std::move(bases[g])});
  }
  if (!(total == f)) throw LemmaCheckFailed("local-partition", "local limits do not add up to f");
  return parts;
}

HomoPoly<Rational> extract_local_structure(const HomoPoly<Rational>& f, std::size_t base_var,
                                           unsigned rank, unsigned degree) {
  if (degree + 1 < rank) throw PreconditionViolated("local structure requires degree >= rank - 1");
  if (f.degree() != degree) throw DimensionMismatch("degree mismatch");
  if (base_var >= f.nvars()) throw DimensionMismatch("base variable out of range");
  const unsigned power = degree - rank + 1;
  HomoPoly<Rational> g(f.nvars(), rank - 1);
  for (const auto& [m, c] : f.terms()) {
    if (m[base_var] < power)
      throw LemmaCheckFailed("local-divisibility", "base power does not divide the local limit",
                             to_string(m));
    Monomial q = m;
    q[base_var] -= power;
    g.add_term(q, c);
  }
  return g;
}

SplitGroups split_and_group(const HomoPoly<Rational>& g, std::size_t y_size) {
  SplitGroups out{HomoPoly<Rational>(g.nvars(), g.degree()), {}};
  for (const auto& [m, c] : g.terms()) {
    std::size_t v = y_size;
    while (v < g.nvars() && m[v] == 0) ++v;
    if (v >= g.nvars()) {
      out.f0.add_term(m, c);
      continue;
    }
    const unsigned i = static_cast<unsigned>(v - y_size + 1);
    const unsigned k = m[v];
    Monomial q = m;
    q[v] = 0;
    auto [it, inserted] = out.cells.try_emplace({i, k}, g.nvars(), g.degree() - k);
    it->second.add_term(q, c);
  }
  return out;
}

WaringDecomposition dense_decompose(const HomoPoly<Rational>& h, std::uint64_t seed) {
  if (h.is_zero()) throw ZeroInput("dense decomposition of the zero polynomial");
  const std::size_t n = h.nvars();
  const unsigned e = h.degree();
  WaringDecomposition out(n, e);
  const auto vars = h.support();
  if (e == 0) {
    out.add(h.terms().begin()->second, LinearForm<Rational>::variable(n, 0));
    return out;
  }
  if (e == 1) {
    std::vector<Rational> c(n);
    for (const auto& [m, x] : h.terms())
      for (std::size_t v = 0; v < n; ++v)
        if (m[v] == 1) c[v] = x;
    out.add(1, LinearForm<Rational>(std::move(c)));
    return out;
  }
  if (vars.size() == 1) {
    out.add(h.terms().begin()->second, LinearForm<Rational>::variable(n, vars[0]));
    return out;
  }
  const std::size_t m = vars.size();
  const auto monos = monomials_of_degree(m, e);
  std::map<Monomial, std::size_t, GrlexDescending> index;
  for (std::size_t a = 0; a < monos.size(); ++a) index.emplace(monos[a], a);
  std::vector<Rational> rhs(monos.size());
  for (const auto& [mono, c] : h.terms()) {
    std::vector<unsigned> small(m);
    for (std::size_t k = 0; k < m; ++k) small[k] = mono[vars[k]];
    rhs[index.at(Monomial(std::move(small)))] = c;
  }

  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::vector<Rational>> forms;
    RationalMatrix system(monos.size(), monos.size());
    while (forms.size() < monos.size()) {
      std::vector<Rational> f(m);
      bool nonzero = false;
      for (auto& x : f) {
        x = static_cast<long>(rng() % 9) - 4;
        nonzero = nonzero || !is_zero(x);
      }
      if (!nonzero) continue;
      const std::size_t col = forms.size();
      const auto expanded = power_of_linear(f, e);
      for (const auto& [mono, c] : expanded.terms()) system(index.at(mono), col) = c;
      forms.push_back(std::move(f));
    }
    std::vector<Rational> weights;
    try {
      weights = solve(system, rhs);
    } catch (const Singular&) {
      continue;
    }
    for (std::size_t j = 0; j < forms.size(); ++j) {
      if (is_zero(weights[j])) continue;
      std::vector<Rational> full(n);
      for (std::size_t k = 0; k < m; ++k) full[vars[k]] = forms[j][k];
      out.add(weights[j], LinearForm<Rational>(std::move(full)));
    }
    return out;
  }
  throw RetryLimitExceeded("no solvable system of random powers found");
}

WaringDecomposition multiply_by_power(const WaringDecomposition& w, const LinearForm<Rational>& z,
                                      unsigned k) {
  if (k < 1) throw PreconditionViolated("power must be >= 1");
  if (z.nvars() != w.nvars()) throw DimensionMismatch("multiplier arity");
  const unsigned e = w.degree();
  const unsigned total = e + k;
  std::vector<Rational> nodes;
  for (unsigned j = 0; nodes.size() < total + 1; ++j) {
    if (j == 0) {
      nodes.emplace_back(0);
    } else {
      nodes.emplace_back(static_cast<long>(j));
      if (nodes.size() < total + 1) nodes.emplace_back(-static_cast<long>(j));
    }
  }
  std::vector<Rational> rhs(total + 1);
  rhs[k] = Rational(1) / Rational(binomial(total, k));
  const auto c = solve_vandermonde_transposed(nodes, rhs);

  WaringDecomposition out(w.nvars(), total);
  for (const auto& s : w.summands()) {
    // l parallel to z: l^e z^k = lambda^e z^(e+k).
    std::optional<Rational> lambda;
    if (e == 0) {
      lambda = 1;
    } else {
      std::size_t p = 0;
      while (is_zero(z[p])) ++p;
      const Rational ratio = s.form[p] / z[p];
      bool parallel = true;
      for (std::size_t i = 0; i < z.nvars() && parallel; ++i) parallel = s.form[i] == ratio * z[i];
      if (parallel) lambda = ratio;
    }
    if (lambda) {
      out.add(s.weight * power(*lambda, e), z);
      continue;
    }
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (is_zero(c[j])) continue;
      std::vector<Rational> f = s.form.coefs();
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += nodes[j] * z[i];
      out.add(s.weight * c[j], LinearForm<Rational>(std::move(f)));
    }
  }
  return out;
}

Integer rank_bound(unsigned d, unsigned r) {
  if (r <= 1) return Integer(d);
  mpfr_t x, e;
  mpfr_inits2(256, x, e, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(e, r, MPFR_RNDU);
  mpfr_sqrt(e, e, MPFR_RNDU);
  mpfr_mul_ui(e, e, 10, MPFR_RNDU);
  mpfr_set_ui(x, r, MPFR_RNDU);
  mpfr_pow(x, x, e, MPFR_RNDU);  // r >= 2, so rounding the exponent up rounds the power up
  mpfr_mul_ui(x, x, d, MPFR_RNDU);
  mpfr_ceil(x, x);
  Integer out;
  mpfr_get_z(out.get_mpz_t(), x, MPFR_RNDU);
  mpfr_clears(x, e, static_cast<mpfr_ptr>(nullptr));
  return out;
}

unsigned default_y_size(unsigned r) {
  Integer s;
  mpz_sqrt(s.get_mpz_t(), Integer(100u * r).get_mpz_t());
  return static_cast<unsigned>(s.get_ui());
}

namespace {

struct Outcome {
  WaringDecomposition w;
  std::vector<TraceRecord> trace;
};

class Solver {
 public:
  explicit Solver(const DeborderConfig& config) : config_(config), free_slots_(config.jobs > 0 ? config.jobs - 1 : 0) {}

  Outcome solve(const HomoPoly<Rational>& f, const BorderDecomposition& b, unsigned cell_i,
                unsigned cell_k, bool nested) const {
    const std::size_t n = f.nvars();
    const unsigned d = f.degree();
    Outcome out{WaringDecomposition(n, d), {}};
    if (f.is_zero()) return out;
    if (d == 0) {
      out.w.add(f.terms().begin()->second, LinearForm<Rational>::variable(n, 0));
      return out;
    }
    if (const auto check = verify_border(b, f); !check) {
      if (nested)
        throw LemmaCheckFailed("derivative-certificate",
                               "derived certificate does not converge to its target: " + check.reason,
                               check.witness);
      throw VerificationFailed(check.reason, check.witness);
    }
    const BorderDecomposition nb = normalize_border(b);
    const EssentialReduction ess = essential_reduce(f, nb);
    const std::size_t N = ess.essential;

    WaringDecomposition reduced(n, d);
    if (N == 1) {
      out.trace.push_back({CaseTag::Base, static_cast<unsigned>(nb.rank()), d, cell_i, cell_k});
      reduced.add(ess.f.coefficient(Monomial::unit(n, 0, d)), LinearForm<Rational>::variable(n, 0));
    } else {
      std::vector<std::size_t> dropped;
      for (std::size_t v = N; v < n; ++v) dropped.push_back(v);
      const BorderDecomposition cert = normalize_border(restrict_vars_zero(ess.border, dropped));
      const auto r = static_cast<unsigned>(cert.rank());
      Outcome sub{WaringDecomposition(n, d), {}};
      if (d + 1 >= r) {
        auto parts = partition_into_local(cert, ess.f);
        if (parts.size() > 1) {
          std::vector<std::function<Outcome()>> tasks;
          for (std::size_t p = 0; p < parts.size(); ++p) {
            if (parts[p].limit.is_zero()) continue;
            tasks.push_back([this, part = parts[p], p] {
              return solve(part.limit, part.border, static_cast<unsigned>(p + 1), 0, true);
            });
          }
          sub = merge(n, d, run(tasks));
        } else {
          sub = local_pipeline(ess.f, cert, cell_i, cell_k);
        }
      } else {
        sub = nonlocal_pipeline(ess.f, cert, cell_i, cell_k);
      }
      reduced = std::move(sub.w);
      out.trace = std::move(sub.trace);
    }
    out.w = compress(transform(reduced, ess.inverse));
    return out;
  }

 private:
  unsigned y_size(unsigned r) const {
    const unsigned y = config_.y_size ? *config_.y_size : default_y_size(r);
    return y == 0 ? 1 : y;
  }

  WaringDecomposition dense(const HomoPoly<Rational>& h) const {
    return dense_decompose(h, config_.seed);
  }

  /// Certificate for the cell (i,k): k derivatives along z, then z_1..z_i set to 0, over k!.
  BorderDecomposition descend(const DiagonalizedDecomposition& diag, std::size_t zvar, unsigned k,
                              std::size_t first_z) const {
    BorderDecomposition cert(diag.border.nvars(), diag.border.degree());
    if (config_.strengthened) {
      // One order at a time; the intermediate certificate is re-diagonalized
      // and the direction e_z pulled back through the new frame.
      cert = derivative_decomposition(diag, zvar, 1);
      for (unsigned step = 1; step < k; ++step) {
        const auto redo = diagonalize(cert, border_limit(cert));
        const EpsMatrix a_inv = invert_matrix(redo.transform.matrix);
        cert = transform(derivative_along(redo.border, a_inv.column(zvar), 1), a_inv);
      }
    } else {
      cert = derivative_decomposition(diag, zvar, k);
    }
    std::vector<std::size_t> zeroed;
    for (std::size_t v = first_z; v <= zvar; ++v) zeroed.push_back(v);
    cert = restrict_vars_zero(cert, zeroed);
    return scale_weights(cert, EpsScalar(Rational(1) / Rational(factorial(k))));
  }

  Outcome local_pipeline(const HomoPoly<Rational>& f, const BorderDecomposition& b, unsigned cell_i,
                         unsigned cell_k) const {
    const std::size_t n = f.nvars();
    const unsigned d = f.degree();
    const auto r = static_cast<unsigned>(b.rank());
    const DiagonalizedDecomposition diag = diagonalize(b, f);
    const auto base = is_local(diag.border);
    if (!base || !(*base == LinearForm<Rational>::variable(n, 0)))
      throw LemmaCheckFailed("perturbed-diagonalization", "diagonalized local decomposition is not based at x_1");
    const HomoPoly<Rational> g = extract_local_structure(diag.limit, 0, r, d);
    Outcome out{WaringDecomposition(n, d), {{CaseTag::Local, r, d, cell_i, cell_k}}};
    const unsigned ys = y_size(r);
    const unsigned m = d - r + 1;
    const auto x1 = LinearForm<Rational>::variable(n, 0);
    auto lift_base = [&](const WaringDecomposition& w) { return m == 0 ? w : multiply_by_power(w, x1, m); };

    WaringDecomposition w(n, d);
    if (r <= config_.base_threshold || diag.pivot_count() <= ys) {
      out.trace.push_back({CaseTag::Base, r, d, cell_i, cell_k});
      w = lift_base(dense(g));
    } else {
      const SplitGroups split = split_and_group(g, ys);
      if (!split.f0.is_zero()) {
        out.trace.push_back({CaseTag::Base, r, d, cell_i, cell_k});
        w.append(lift_base(dense(split.f0)));
      }
      const HomoPoly<Rational> x1_power = HomoPoly<Rational>::monomial(Monomial::unit(n, 0, m), 1);
      std::vector<std::function<Outcome()>> tasks;
      for (const auto& [cell, gik] : split.cells) {
        tasks.push_back([this, &diag, cell, target = x1_power * gik, ys] {
          const std::size_t zvar = ys + cell.first - 1;
          return descend_cell(diag, target, zvar, cell.first, cell.second, ys);
        });
      }
      Outcome cells = merge(n, d, run(tasks));
      w.append(cells.w);
      out.trace.insert(out.trace.end(), cells.trace.begin(), cells.trace.end());
    }
    out.w = transform(w, inverse(diag.transform.at_zero));
    return out;
  }

  Outcome nonlocal_pipeline(const HomoPoly<Rational>& f, const BorderDecomposition& b, unsigned cell_i,
                            unsigned cell_k) const {
    const std::size_t n = f.nvars();
    const unsigned d = f.degree();
    const auto r = static_cast<unsigned>(b.rank());
    const unsigned ys = y_size(r);
    Outcome out{WaringDecomposition(n, d), {}};
    if (r <= config_.base_threshold || f.support().size() <= ys) {
      out.trace.push_back({CaseTag::Base, r, d, cell_i, cell_k});
      out.w = dense(f);
      return out;
    }
    const DiagonalizedDecomposition diag = diagonalize(b, f);
    out.trace.push_back({CaseTag::Nonlocal, r, d, cell_i, cell_k});
    const SplitGroups split = split_and_group(diag.limit, ys);
    WaringDecomposition w(n, d);
    if (!split.f0.is_zero()) {
      out.trace.push_back({CaseTag::Base, r, d, cell_i, cell_k});
      w.append(dense(split.f0));
    }
    std::vector<std::function<Outcome()>> tasks;
    for (const auto& [cell, gik] : split.cells) {
      tasks.push_back([this, &diag, cell, target = gik, ys] {
        const std::size_t zvar = ys + cell.first - 1;
        return descend_cell(diag, target, zvar, cell.first, cell.second, ys);
      });
    }
    Outcome cells = merge(n, d, run(tasks));
    w.append(cells.w);
    out.trace.insert(out.trace.end(), cells.trace.begin(), cells.trace.end());
    out.w = transform(w, inverse(diag.transform.at_zero));
    return out;
  }

  /// Decomposes z^k * target where target = (1/k!) [d^k f~ / dz^k] at z_1..z_i = 0.
  Outcome descend_cell(const DiagonalizedDecomposition& diag, const HomoPoly<Rational>& target,
                       std::size_t zvar, unsigned i, unsigned k, std::size_t first_z) const {
    const std::size_t n = target.nvars();
    Outcome sub{WaringDecomposition(n, target.degree()), {}};
    if (target.degree() == 0) {
      sub.w.add(target.terms().begin()->second, LinearForm<Rational>::variable(n, 0));
    } else {
      sub = solve(target, descend(diag, zvar, k, first_z), i, k, true);
    }
    sub.w = multiply_by_power(sub.w, LinearForm<Rational>::variable(n, zvar), k);
    return sub;
  }

  std::vector<Outcome> run(const std::vector<std::function<Outcome()>>& tasks) const {
    std::vector<std::future<Outcome>> futures;
    std::vector<std::optional<Outcome>> results(tasks.size());
    std::vector<std::size_t> async_index;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      if (acquire()) {
        async_index.push_back(t);
        futures.push_back(std::async(std::launch::async, [this, &tasks, t] {
          struct Release {
            const Solver* s;
            ~Release() { s->free_slots_.fetch_add(1); }
          } guard{this};
          return tasks[t]();
        }));
      } else {
        results[t] = tasks[t]();
      }
    }
    for (std::size_t a = 0; a < futures.size(); ++a) results[async_index[a]] = futures[a].get();
    std::vector<Outcome> out;
    for (auto& r : results) out.push_back(std::move(*r));
    return out;
  }

  bool acquire() const {
    unsigned cur = free_slots_.load();
    while (cur > 0)
      if (free_slots_.compare_exchange_weak(cur, cur - 1)) return true;
    return false;
  }

  static Outcome merge(std::size_t n, unsigned d, std::vector<Outcome> parts) {
    Outcome out{WaringDecomposition(n, d), {}};
    for (auto& p : parts) {
      out.w.append(p.w);
      out.trace.insert(out.trace.end(), p.trace.begin(), p.trace.end());
    }
    return out;
  }

  const DeborderConfig& config_;
  mutable std::atomic<unsigned> free_slots_;
};

}  // namespace

std::pair<WaringDecomposition, DeborderReport> deborder(const HomoPoly<Rational>& f,
                                                        const BorderDecomposition& b,
                                                        const DeborderConfig& config) {
  if (f.is_zero()) throw ZeroInput("target polynomial is zero");
  if (const auto check = verify_border(b, f); !check) throw VerificationFailed(check.reason, check.witness);
  const Solver solver(config);
  Outcome outcome = solver.solve(f, b, 0, 0, false);
  WaringDecomposition w = compress(outcome.w);

  DeborderReport report;
  report.achieved_rank = w.rank();
  report.input_rank = b.rank();
  report.degree = f.degree();
  report.rank_bound = rank_bound(f.degree(), static_cast<unsigned>(b.rank()));
  report.trace = std::move(outcome.trace);
  const auto check = verify_waring(w, f);
  if (!check) throw AssertionViolation("output decomposition does not reproduce f", check.witness);
  report.verified = true;
  if (b.rank() >= 2 && Integer(static_cast<unsigned long>(report.achieved_rank)) > report.rank_bound)
    throw AssertionViolation("achieved rank exceeds the bound d * r^(10 sqrt r)");
  if (b.rank() == 1 && report.achieved_rank != 1)
    throw AssertionViolation("rank-one certificate produced a larger decomposition");
  return {std::move(w), std::move(report)};
}

}  // namespace deborder
