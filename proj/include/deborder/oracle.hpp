#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deborder/decomposition.hpp"

namespace deborder {

/// sum_i coefs[i] x^(d-i) y^i
struct BinaryForm {
  unsigned degree = 0;
  std::vector<Rational> coefs;

  static BinaryForm from_poly(const HomoPoly<Rational>& f);
};

struct SylvesterRanks {
  unsigned wr = 0;
  unsigned bwr = 0;
};

SylvesterRanks sylvester_rank(const BinaryForm& f);

/// Rank of the map from order-s partial derivatives to forms of degree d-s.
std::size_t catalecticant_bound(const HomoPoly<Rational>& f, unsigned s);
/// max over s of catalecticant_bound(f, s)
std::size_t catalecticant_bound(const HomoPoly<Rational>& f);

enum class Family { Tangent, Osculating, Multibase, Random };

Family parse_family(const std::string& name);
const char* to_string(Family family);

struct FamilySpec {
  Family family = Family::Tangent;
  unsigned d = 3;
  unsigned j = 1;           ///< osculating order
  std::uint64_t seed = 1;
  unsigned nvars = 0;       ///< 0: the family's natural arity
  unsigned rank = 3;        ///< random family only
};

struct FamilyInstance {
  HomoPoly<Rational> f;
  BorderDecomposition border;
};

/// Throws PreconditionViolated on invalid parameters, RetryLimitExceeded when
/// the random family finds no instance with a nonzero limit.
FamilyInstance gen_family(const FamilySpec& spec);

/// Decomposition of a monomial by repeated multiply_by_power.
WaringDecomposition monomial_upper(const Monomial& m);

}  // namespace deborder
