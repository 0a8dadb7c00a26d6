#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qct/context_space.hpp"
#include "qct/report.hpp"

namespace qct {

/// Relation index (B_i, p) with p a nonzero lattice element.
struct ModalIndex {
  std::size_t block;
  Elem prop;
  friend bool operator==(const ModalIndex&, const ModalIndex&) = default;
};

/// Context space with one accessibility relation per modal index.
/// (c, c') ∈ R^{B_i}_p iff p ∈ Th(c) and, with c'' = (block(c), p), c' is a
/// B_i point in U_{c''} or in U_x for some B_i point x ∈ A_{c''}.
class QuantumFrame {
 public:
  explicit QuantumFrame(std::shared_ptr<const ContextSpace> space);

  const ContextSpace& space() const { return *space_; }
  std::shared_ptr<const ContextSpace> space_ptr() const { return space_; }

  /// Ordered by block, then element.
  const std::vector<ModalIndex>& indices() const { return indices_; }
  std::optional<std::size_t> find_index(std::size_t block, Elem prop) const;
  /// "[Ba,a]".
  std::string index_label(std::size_t k) const;

  const PointSet& successors(std::size_t k, std::size_t point) const {
    return succ_[k][point];
  }
  bool related(std::size_t k, std::size_t from, std::size_t to) const {
    return succ_[k][from].test(to);
  }
  std::size_t edge_count() const;

  /// {c : every R_k successor of c lies in ω}. Throws NotClopen.
  PointSet box(std::size_t k, const PointSet& omega) const;
  /// ¬□¬ω.
  PointSet diamond(std::size_t k, const PointSet& omega) const;
  /// {c : p ∈ Th(c)} over every block containing p.
  PointSet prop_set(Elem p) const;

  /// Copy with one edge deleted; used as a negative control.
  QuantumFrame with_edge_removed(std::size_t k, std::size_t from, std::size_t to) const;

  /// Source condition, and closure of the clopen algebra under every box.
  Report verify() const;

 private:
  std::shared_ptr<const ContextSpace> space_;
  std::vector<ModalIndex> indices_;
  std::vector<std::vector<PointSet>> succ_;
};

QuantumFrame build_frame(const OmlLattice& lattice, Caps caps = {});

/// p ↦ {c in block B : p ∈ Th(c)} for every p in B.
struct PropClopenMap {
  std::size_t block;
  std::vector<std::pair<Elem, PointSet>> images;
};

/// Builds the map and checks injectivity and that every basic open of a
/// B point is recovered as a Boolean combination of images. Throws
/// BijectionFailure with a witness.
PropClopenMap prop_clopen_bijection(const QuantumFrame& frame, std::size_t block);

}  // namespace qct
