#pragma once

#include <string>
#include <vector>

#include "qct/hilbert.hpp"
#include "qct/oml.hpp"

namespace qct {

/// Bijection on lattice elements preserving order both ways, ortho and bounds.
struct OrthoAutomorphism {
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  bool is_identity() const;
  friend bool operator==(const OrthoAutomorphism&, const OrthoAutomorphism&) = default;
  friend auto operator<=>(const OrthoAutomorphism&, const OrthoAutomorphism&) = default;
};

/// (f ∘ g)(x) = f(g(x)).
OrthoAutomorphism compose(const OrthoAutomorphism& f, const OrthoAutomorphism& g);
OrthoAutomorphism inverse(const OrthoAutomorphism& f);
OrthoAutomorphism identity_automorphism(std::size_t size);

/// Checks the defining properties; returns an empty string or the violation.
std::string automorphism_violation(const OmlLattice& lattice, const OrthoAutomorphism& f);

/// All ortho-automorphisms in lexicographic order of `map`. Throws
/// SizeCapExceeded when the lattice has more than `cap` elements.
std::vector<OrthoAutomorphism> enumerate_ortho_automorphisms(const OmlLattice& lattice,
                                                             std::size_t cap = 16);

/// Image of a block's carrier, sorted.
std::vector<Elem> image(const OrthoAutomorphism& f, const std::vector<Elem>& carrier);

struct GroupReport {
  bool pass = true;
  /// "closure", "associativity", "identity" or "inverse" on failure.
  std::string failed_check;
  std::string witness;
};

/// Closure, associativity, identity and inverse membership on a finite set.
GroupReport check_group(const std::vector<OrthoAutomorphism>& group);

/// ⋁_{a' ∈ atoms(B')} (x ∧ a'), literally. `degenerate` when the result is 0.
struct PhiValue {
  Elem value;
  bool degenerate;
};
/// Throws InputError unless x is an atom of `from`.
PhiValue phi_formula(const OmlLattice& lattice, const Block& from, const Block& to, Elem x);

/// U U* = I.
bool is_unitary(const Matrix& u);

/// P ↦ U P U* on a projection lattice. Throws NotUnitary or LatticeNotClosed.
OrthoAutomorphism induced_automorphism(const Matrix& u, const ProjectionLattice& lattice);

/// f(UV) = f(U) ∘ f(V).
bool homomorphism_holds(const Matrix& u, const Matrix& v, const ProjectionLattice& lattice);

}  // namespace qct
