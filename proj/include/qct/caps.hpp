#pragma once

#include <cstddef>

namespace qct {

/// Size limits for the exhaustive searches.
struct Caps {
  /// Largest lattice searched for ortho-automorphisms.
  std::size_t automorphism_elements = 16;
  /// Largest projection lattice built by closure.
  std::size_t closure_elements = 64;
  std::size_t hilbert_dim = 4;
  /// Points of a context space the dual algebra can hold (carrier 2^points).
  std::size_t dual_points = 20;
};

/// Defaults, with the element caps replaced by QCT_CAP when it holds a
/// positive integer.
Caps caps_from_env();

}  // namespace qct
