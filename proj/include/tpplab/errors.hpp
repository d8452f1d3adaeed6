#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tpplab {

enum class Err {
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  NoInverse,
  BadParams,
  CentralSubgroupMismatch,
  ClosureTooLarge,
  CapExceeded,
  NotNormal,
  NotSubgroup,
  NotContained,
  EmptySet,
  ParseError,
  ValidationError,
  UnknownLabel,
  FingerprintMismatch,
  DuplicateLabel,
  IoError,
};

// Single exception type for the whole library. `witness` carries the
// element/row indices that exhibit the failed axiom, as the ops contract
// requires (e.g. NotAssociative(i, j, k), NotNormal(conjugator)).
class GroupError : public std::runtime_error {
public:
  GroupError(Err code, std::string message, std::vector<long> witness = {})
      : std::runtime_error(std::move(message)), code_(code), witness_(std::move(witness)) {}

  Err code() const { return code_; }
  const std::vector<long>& witness() const { return witness_; }

private:
  Err code_;
  std::vector<long> witness_;
};

}  // namespace tpplab
