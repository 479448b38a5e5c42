#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deborder/decomposition.hpp"
#include "deborder/diagonalize.hpp"

namespace deborder {

struct DeborderConfig {
  std::uint64_t seed = 1;
  /// Ranks at or below this go straight to the dense path.
  unsigned base_threshold = 4;
  /// Take derivatives one order at a time, re-diagonalizing in between.
  bool strengthened = false;
  /// Size of the Y block; defaults to floor(10 sqrt r).
  std::optional<unsigned> y_size;
  /// Maximum number of recursion branches evaluated concurrently.
  unsigned jobs = 1;
};

enum class CaseTag { Local, Nonlocal, Base };

const char* to_string(CaseTag tag);

struct TraceRecord {
  CaseTag tag;
  unsigned rank;
  unsigned degree;
  unsigned i;  ///< Z-index of the branch (0 at the root / local parts use the part number)
  unsigned k;  ///< derivative order of the branch
  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct DeborderReport {
  std::size_t achieved_rank = 0;
  std::size_t input_rank = 0;
  unsigned degree = 0;
  Integer rank_bound;
  std::vector<TraceRecord> trace;
  bool verified = false;
};

struct LocalPart {
  BorderDecomposition border;
  HomoPoly<Rational> limit;
  LinearForm<Rational> base;
};

/// Groups summands by the projective limit of their forms. Each group's
/// partial power sum must converge on its own (checked); the group limits add
/// up to f.
std::vector<LocalPart> partition_into_local(const BorderDecomposition& b,
                                            const HomoPoly<Rational>& f);

/// Cofactor g with f = x_base^(d-r+1) * g; throws LemmaCheckFailed when the
/// power does not divide f.
HomoPoly<Rational> extract_local_structure(const HomoPoly<Rational>& f, std::size_t base_var,
                                           unsigned rank, unsigned degree);

/// g = f0(Y) + sum_{i,k} z_i^k g_{i,k}(Y, z_{i+1}, ...), with Y = x_0..x_{y_size-1}
/// and z_i = x_{y_size+i-1} (i is 1-based). Every non-Y monomial goes to the
/// minimal i with z_i dividing it and the maximal k with z_i^k dividing it.
struct SplitGroups {
  HomoPoly<Rational> f0;
  std::map<std::pair<unsigned, unsigned>, HomoPoly<Rational>> cells;
};
SplitGroups split_and_group(const HomoPoly<Rational>& g, std::size_t y_size);

/// Exact decomposition with at most binom(m+e-1, e) summands, m the number
/// of variables occurring in h, from seeded pseudo-random integer forms.
WaringDecomposition dense_decompose(const HomoPoly<Rational>& h, std::uint64_t seed = 1);

/// Decomposition of z^k * (power sum of w), using
///   l^e z^k = sum_j c_j (l + t_j z)^(e+k),  t_j = 0, 1, -1, 2, -2, ...
WaringDecomposition multiply_by_power(const WaringDecomposition& w, const LinearForm<Rational>& z,
                                      unsigned k);

/// Certified upper rounding of ceil(d * r^(10 sqrt r)); d when r = 1.
Integer rank_bound(unsigned d, unsigned r);

/// floor(10 sqrt r)
unsigned default_y_size(unsigned r);

/// Turns a verified border decomposition of f into an exact Waring
/// decomposition of f. Throws VerificationFailed when b does not certify f,
/// LemmaCheckFailed when a structural hypothesis fails at runtime.
std::pair<WaringDecomposition, DeborderReport> deborder(const HomoPoly<Rational>& f,
                                                        const BorderDecomposition& b,
                                                        const DeborderConfig& config = {});

}  // namespace deborder
