#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "deborder/decomposition.hpp"

namespace deborder {

/// One pivot of the eps-perturbed diagonal form: transformed summand
/// `position` reads  (terms in x_0..x_{position-1}) + eps^valuation x_position.
struct Pivot {
  std::size_t position = 0;  ///< equals the pivot variable index
  int valuation = 0;         ///< q_i
  std::size_t source = 0;    ///< index of the originating summand
};

/// Result of the perturbed diagonalization. `border` holds the summands
/// l_{perm[i]}(A x) reordered so the pivots come first; `limit` is f(A_0 x).
struct DiagonalizedDecomposition {
  BorderDecomposition border;
  ChangeOfVars transform;
  std::vector<Pivot> pivots;
  std::vector<std::size_t> perm;
  HomoPoly<Rational> limit;

  std::size_t pivot_count() const { return pivots.size(); }
};

/// Echelon state over the valuation ring Q[eps] localized at eps: pivot
/// vectors already reduced against each other, each with a pivot column.
class DvrEchelon {
 public:
  struct Entry {
    std::vector<EpsScalar> vector;
    std::size_t column;
    int valuation;
  };

  struct Choice {
    std::size_t index;
    int valuation;
    std::vector<Rational> leading;      ///< eps^valuation coefficient vector
    std::vector<EpsScalar> reduced;
  };

  const std::vector<Entry>& pivots() const { return pivots_; }

  /// Subtracts multiples (of non-negative valuation) of the pivots until every
  /// pivot column of v is zero.
  std::vector<EpsScalar> reduce(std::vector<EpsScalar> v) const;

  /// Reduces every candidate and picks the one of minimal valuation, smallest
  /// index on ties. Throws NoPivot when all candidates reduce to zero.
  Choice select(const std::vector<std::vector<EpsScalar>>& candidates) const;

  void push(std::vector<EpsScalar> reduced);

 private:
  std::vector<Entry> pivots_;
};

/// Single selection step on a fresh list of candidates against `state`.
DvrEchelon::Choice dvr_reduce_step(const std::vector<LinearForm<EpsScalar>>& candidates,
                                   const DvrEchelon& state);

DiagonalizedDecomposition diagonalize(const BorderDecomposition& b, const HomoPoly<Rational>& f);

/// Throws AssertionViolation unless the transformed summands have the
/// staircase shape of the diagonal form.
void check_staircase(const DiagonalizedDecomposition& d);

/// Replaces x_var by x_var - tail(x) in every transformed summand (tail must
/// have valuation >= 1 in every coefficient); the limit is unchanged.
DiagonalizedDecomposition substitute_perturbation(const DiagonalizedDecomposition& d,
                                                  std::size_t var,
                                                  const std::vector<EpsScalar>& tail);

/// Border decomposition of d^j/dx_var^j of the transformed power sum:
/// summands (w (d)_j c^j, L) with c = dL/dx_var, normalized. Throws
/// ZeroDerivative when the derivative of the limit vanishes.
BorderDecomposition derivative_decomposition(const DiagonalizedDecomposition& d,
                                             std::size_t var, unsigned j);

/// Directional variant used for generic decompositions: summands
/// (w (d)_j (L . dir)^j, L).
BorderDecomposition derivative_along(const BorderDecomposition& b,
                                     const std::vector<EpsScalar>& direction, unsigned j);

/// Sets the listed variables to zero in every form; vanishing forms are dropped.
BorderDecomposition restrict_vars_zero(const BorderDecomposition& b,
                                       const std::vector<std::size_t>& vars);

}  // namespace deborder
