#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deborder/eps.hpp"
#include "deborder/homopoly.hpp"
#include "deborder/matrix.hpp"
#include "deborder/rational.hpp"

namespace deborder {

/// Nonzero linear form sum_i coefs[i] x_i.
template <class S>
class LinearForm {
 public:
  explicit LinearForm(std::vector<S> coefs) : coefs_(std::move(coefs)) {
    if (coefs_.empty()) throw DimensionMismatch("linear form without variables");
    bool any = false;
    for (const auto& c : coefs_) any = any || !is_zero(c);
    if (!any) throw ZeroInput("zero linear form");
  }

  static std::optional<LinearForm> nonzero(std::vector<S> coefs) {
    for (const auto& c : coefs)
      if (!is_zero(c)) return LinearForm(std::move(coefs));
    return std::nullopt;
  }
  static LinearForm variable(std::size_t nvars, std::size_t var) {
    std::vector<S> c(nvars);
    c[var] = S(1);
    return LinearForm(std::move(c));
  }

  std::size_t nvars() const { return coefs_.size(); }
  const S& operator[](std::size_t i) const { return coefs_[i]; }
  const std::vector<S>& coefs() const { return coefs_; }
  HomoPoly<S> power(unsigned d) const { return power_of_linear(coefs_, d); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<S> coefs_;
};

template <class S>
struct Summand {
  S weight;
  LinearForm<S> form;
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Weighted power sum  sum_i weight_i * form_i^degree.
template <class S>
class Decomposition {
 public:
  Decomposition(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
    if (nvars == 0) throw PreconditionViolated("decomposition with zero variables");
  }
  Decomposition(std::size_t nvars, unsigned degree, std::vector<Summand<S>> summands)
      : Decomposition(nvars, degree) {
    for (auto& s : summands) add(std::move(s.weight), std::move(s.form));
  }

  void add(S weight, LinearForm<S> form) {
    if (form.nvars() != nvars_) throw DimensionMismatch("summand arity");
    if (is_zero(weight)) throw ZeroInput("zero summand weight");
    summands_.push_back({std::move(weight), std::move(form)});
  }
  void append(const Decomposition& other) {
    if (other.nvars_ != nvars_ || other.degree_ != degree_)
      throw DimensionMismatch("appending an incompatible decomposition");
    summands_.insert(summands_.end(), other.summands_.begin(), other.summands_.end());
  }

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  std::size_t rank() const { return summands_.size(); }
  bool empty() const { return summands_.empty(); }
  const std::vector<Summand<S>>& summands() const { return summands_; }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::size_t nvars_;
  unsigned degree_;
  std::vector<Summand<S>> summands_;
};

using WaringDecomposition = Decomposition<Rational>;
using BorderDecomposition = Decomposition<EpsScalar>;

/// Linear change of variables x -> Mx whose matrix is regular and invertible
/// at eps = 0; `at_zero` is that eps = 0 part.
struct ChangeOfVars {
  EpsMatrix matrix;
  RationalMatrix at_zero;

  static ChangeOfVars from_matrix(EpsMatrix m);
  static ChangeOfVars from_rational(const RationalMatrix& m);
};

/// Expanded weighted power sum over a common denominator:
///   S(x, eps) = numer(x, eps) / denom(eps).
struct ExpandedSum {
  HomoPoly<EpsPoly> numer;
  EpsPoly denom;

  bool is_zero() const { return numer.is_zero(); }
  int valuation(const EpsPoly& coefficient) const;
  std::optional<Monomial> first_pole() const;
  /// Throws PoleAtZero.
  HomoPoly<Rational> limit() const;
  HomoPoly<EpsScalar> to_poly() const;
};

HomoPoly<Rational> expand(const WaringDecomposition& w);
ExpandedSum expand(const BorderDecomposition& b);

struct VerifyResult {
  bool ok = false;
  /// Border checks: minimal eps-valuation of the coefficients of S - f;
  /// empty when S equals f exactly.
  std::optional<int> order;
  std::string reason;
  std::string witness;
  explicit operator bool() const { return ok; }
};

VerifyResult verify_waring(const WaringDecomposition& w, const HomoPoly<Rational>& f);
/// Throws DegenerateInput when the expanded sum is identically zero.
VerifyResult verify_border(const BorderDecomposition& b, const HomoPoly<Rational>& f);
/// Limit of a border decomposition after checking that it converges.
HomoPoly<Rational> border_limit(const BorderDecomposition& b);

/// Moves each form's eps-content into its weight: forms become eps-polynomials
/// of valuation 0 and weights absorb (content)^degree.
BorderDecomposition extract_content(const BorderDecomposition& b);
/// Content extraction, deletion of summands contributing only O(eps), and
/// truncation of each form above eps^(-val(weight)). Preserves the limit.
BorderDecomposition normalize_border(const BorderDecomposition& b);
bool is_normalized(const BorderDecomposition& b);

/// Canonical projective representative of the eps -> 0 limit of [l].
LinearForm<Rational> base_of_form(const LinearForm<EpsScalar>& l);
std::optional<LinearForm<Rational>> is_local(const BorderDecomposition& b);

struct EssentialReduction {
  HomoPoly<Rational> f;        ///< f(Tx), only x_0..x_{N-1} occur
  BorderDecomposition border;  ///< forms l(Tx)
  ChangeOfVars transform;      ///< T (rational)
  RationalMatrix inverse;      ///< T^{-1}
  std::size_t essential = 0;   ///< N
};
EssentialReduction essential_reduce(const HomoPoly<Rational>& f, const BorderDecomposition& b);

/// Forms l -> l(Mx); summands whose form becomes zero are deleted.
BorderDecomposition transform(const BorderDecomposition& b, const EpsMatrix& m);
WaringDecomposition transform(const WaringDecomposition& w, const RationalMatrix& m);
BorderDecomposition scale_weights(const BorderDecomposition& b, const EpsScalar& factor);
BorderDecomposition lift(const WaringDecomposition& w);

/// Canonical forms (first nonzero coefficient 1), merged duplicates, zero
/// weights dropped. The power sum is unchanged.
WaringDecomposition compress(const WaringDecomposition& w);

}  // namespace deborder
