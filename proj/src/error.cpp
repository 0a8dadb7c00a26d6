#include "qct/error.hpp"

namespace qct {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotOrtholattice: return "NotOrtholattice";
    case ErrorKind::NotOrthomodular: return "NotOrthomodular";
    case ErrorKind::PastingInvalid: return "PastingInvalid";
    case ErrorKind::SeedNotChain: return "SeedNotChain";
    case ErrorKind::NotBoolean: return "NotBoolean";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::AtomRankNotOne: return "AtomRankNotOne";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::LatticeNotClosed: return "LatticeNotClosed";
    case ErrorKind::PropNotInBlock: return "PropNotInBlock";
    case ErrorKind::NoAutomorphismExists: return "NoAutomorphismExists";
    case ErrorKind::HausdorffFailure: return "HausdorffFailure";
    case ErrorKind::NotClopen: return "NotClopen";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownBlock: return "UnknownBlock";
    case ErrorKind::UnknownProposition: return "UnknownProposition";
    case ErrorKind::BijectionFailure: return "BijectionFailure";
    case ErrorKind::ClosureFailure: return "ClosureFailure";
    case ErrorKind::NotUltrafilter: return "NotUltrafilter";
    case ErrorKind::NoCanonicalBlock: return "NoCanonicalBlock";
  }
  return "Unknown";
}

QctError::QctError(ErrorKind kind, const std::string& message,
                   std::string witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace qct
