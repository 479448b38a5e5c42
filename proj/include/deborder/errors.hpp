#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace deborder {

/// Base of every exception thrown by the library. `witness` optionally names
/// the offending object (a monomial, a summand index, a lemma hypothesis).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message, std::string witness = {})
      : std::runtime_error(message), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

#define DEBORDER_DEFINE_ERROR(Name)       \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

DEBORDER_DEFINE_ERROR(DimensionMismatch);
DEBORDER_DEFINE_ERROR(PreconditionViolated);
DEBORDER_DEFINE_ERROR(ZeroInput);
DEBORDER_DEFINE_ERROR(PoleAtZero);
DEBORDER_DEFINE_ERROR(Singular);
DEBORDER_DEFINE_ERROR(DuplicateNodes);
DEBORDER_DEFINE_ERROR(NoPivot);
DEBORDER_DEFINE_ERROR(ZeroDerivative);
DEBORDER_DEFINE_ERROR(DegenerateInput);
DEBORDER_DEFINE_ERROR(VerificationFailed);
DEBORDER_DEFINE_ERROR(AssertionViolation);
DEBORDER_DEFINE_ERROR(RetryLimitExceeded);
DEBORDER_DEFINE_ERROR(ParseError);

#undef DEBORDER_DEFINE_ERROR

/// A runtime-checked hypothesis of one of the structural lemmas failed.
/// `lemma()` is a stable tag such as "local-divisibility" or "local-partition".
class LemmaCheckFailed : public Error {
 public:
  LemmaCheckFailed(std::string lemma, const std::string& message,
                   std::string witness = {})
      : Error(message, std::move(witness)), lemma_(std::move(lemma)) {}

  const std::string& lemma() const noexcept { return lemma_; }

 private:
  std::string lemma_;
};

}  // namespace deborder
