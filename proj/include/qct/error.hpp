#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qct {

/// Every failure the workbench reports carries one of these kinds so callers
/// (and the CLI) can tell a check failure from bad input.
enum class ErrorKind {
  InputError,
  NotALattice,
  NotOrtholattice,
  NotOrthomodular,
  PastingInvalid,
  SeedNotChain,
  NotBoolean,
  ZeroVector,
  NotOrthogonal,
  NotComplete,
  AtomRankNotOne,
  ClosureCapExceeded,
  SizeCapExceeded,
  NotUnitary,
  LatticeNotClosed,
  PropNotInBlock,
  NoAutomorphismExists,
  HausdorffFailure,
  NotClopen,
  ParseError,
  UnknownBlock,
  UnknownProposition,
  BijectionFailure,
  ClosureFailure,
  NotUltrafilter,
  NoCanonicalBlock,
};

std::string_view to_string(ErrorKind kind);

class QctError : public std::runtime_error {
 public:
  QctError(ErrorKind kind, const std::string& message, std::string witness = {});

  ErrorKind kind() const { return kind_; }
  /// Names the offending elements, e.g. "(a,b)"; empty when not applicable.
  const std::string& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

}  // namespace qct
