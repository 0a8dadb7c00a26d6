#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qct/frame.hpp"
#include "qct/report.hpp"

namespace qct {

/// Point set of a context space with at most 32 points.
using Mask = std::uint32_t;

Mask to_mask(const PointSet& s);
PointSet to_point_set(Mask m, std::size_t n);

/// Clopen algebra of a frame with one box per modal index.
class DualAlgebra {
 public:
  /// Throws SizeCapExceeded past caps.dual_points, ClosureFailure when the
  /// carrier is not a Boolean algebra closed under every box.
  explicit DualAlgebra(const QuantumFrame& frame);

  std::size_t points() const { return points_; }
  Mask full() const { return full_; }
  /// Sorted ascending.
  const std::vector<Mask>& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  /// Ordered by lowest point.
  const std::vector<Mask>& atoms() const { return atoms_; }
  std::optional<std::size_t> index_of(Mask m) const;
  bool contains(Mask m) const { return index_of(m).has_value(); }

  std::size_t modal_count() const { return succ_.size(); }
  Mask successors(std::size_t k, std::size_t c) const { return succ_[k][c]; }
  Mask box(std::size_t k, Mask m) const;
  Mask diamond(std::size_t k, Mask m) const { return full_ & ~box(k, full_ & ~m); }

 private:
  std::size_t points_;
  Mask full_;
  bool powerset_;
  std::vector<Mask> carrier_;
  std::vector<Mask> atoms_;
  std::vector<std::vector<Mask>> succ_;
};

/// Members indexed by carrier position.
using MemberSet = boost::dynamic_bitset<>;

struct Ultrafilter {
  MemberSet members;
  /// Meet of all members; an atom of the algebra.
  Mask atom;
  bool contains(const DualAlgebra& alg, Mask m) const { return members.test(*alg.index_of(m)); }
};

/// {S : m ⊆ S}.
MemberSet principal_filter(const DualAlgebra& alg, Mask m);

/// Nonempty, proper, upward closed, meet closed and prime. On failure the
/// offending set(s) go to witness.
bool is_ultrafilter(const DualAlgebra& alg, const MemberSet& members, std::string* witness = nullptr);

/// Principal filters at the atoms, in atom order, each checked with
/// is_ultrafilter.
std::vector<Ultrafilter> ultrafilters(const DualAlgebra& alg);

/// Context to ultrafilter and back.
///
/// forward(c) is generated by ↑U_c, the sets □_k ω with k = (B_i, g),
/// g the generator of c and ω ⊇ R_k(c), and ω_p = {c' : p ∈ Th(c')} for
/// p ∈ Th(c). The meet of the generators must be an atom of the algebra;
/// otherwise NotUltrafilter.
///
/// backward(f) takes B_f from the basic opens in f (NoCanonicalBlock unless
/// exactly one block occurs), P_f = {p ∈ B_f : ω_p ∈ f} and returns the
/// point (B_f, ⋀P_f).
class ThetaMap {
 public:
  explicit ThetaMap(const QuantumFrame& frame);

  const QuantumFrame& frame() const { return frame_; }
  const DualAlgebra& algebra() const { return alg_; }
  const std::vector<Ultrafilter>& ultrafilters() const { return ultra_; }

  std::size_t forward(std::size_t c) const { return forward_[c]; }
  std::size_t backward(std::size_t f) const { return backward_[f]; }
  /// Meet of the generators, with and without the ω_p sets.
  Mask meet(std::size_t c) const { return meet_[c]; }
  Mask literal_meet(std::size_t c) const { return literal_meet_[c]; }
  Mask prop_mask(Elem p) const { return prop_masks_[p]; }

  /// Info records on the unrepaired filter and on the modal-formula step
  /// of the backward construction.
  const Report& audit() const { return audit_; }

 private:
  QuantumFrame frame_;
  DualAlgebra alg_;
  std::vector<Ultrafilter> ultra_;
  std::vector<Mask> prop_masks_;
  std::vector<Mask> meet_;
  std::vector<Mask> literal_meet_;
  std::vector<std::size_t> forward_;
  std::vector<std::size_t> backward_;
  Report audit_;
};

/// Bijectivity, the two edge-case families, relation preservation in both
/// directions, the valuation isomorphism and modal commutation, followed by
/// the theta audit records. Relations and boxes are read from `frame`, which
/// must share theta's context space; passing a mutated frame turns the
/// check into a negative control.
Report verify_duality(const ThetaMap& theta, const QuantumFrame& frame);
Report verify_duality(const QuantumFrame& frame);

}  // namespace qct
