#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "qct/automorphism.hpp"
#include "qct/caps.hpp"
#include "qct/oml.hpp"
#include "qct/report.hpp"

namespace qct {

using PointSet = boost::dynamic_bitset<>;

/// ⋀props, or top for no props. Throws PropNotInBlock.
Elem context_generator(const OmlLattice& lattice, const Block& block, std::span<const Elem> props);
/// Th(B, P) = {q ∈ B : ⋀P ≤ q}, sorted. Throws PropNotInBlock.
std::vector<Elem> theory_of(const OmlLattice& lattice, const Block& block,
                            std::span<const Elem> props);
/// F_c = {q ∈ B : q ∧ p ≠ 0 for every p ∈ P}, sorted. Throws PropNotInBlock.
std::vector<Elem> compat_filter(const OmlLattice& lattice, const Block& block,
                                std::span<const Elem> props);

/// A context (B, P). In the canonical space props = {generator}; in the raw
/// space props is the literal proposition set.
struct Point {
  std::size_t block;
  Elem generator;
  std::vector<Elem> props;
};

/// Points, basic opens and the clopen algebra of a lattice's contexts.
/// Immutable after construction.
class ContextSpace {
 public:
  /// Canonical points are (block, g) for every g in the block, blocks in
  /// enumerate_blocks order and g in element order. With `quotient` off the
  /// points are the raw contexts (block, P) for every nonempty
  /// P ⊆ block \ {0}, ordered by the sorted index list of P.
  ContextSpace(OmlLattice lattice, bool quotient = true, Caps caps = {});

  const OmlLattice& lattice() const { return lattice_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool quotient() const { return quotient_; }
  const Caps& caps() const { return caps_; }

  /// "B<k>", 1-based.
  std::string block_label(std::size_t b) const;
  /// "B" followed by an atom name of the block, unique across blocks.
  const std::string& block_alias(std::size_t b) const { return aliases_[b]; }
  /// Accepts either label form.
  std::optional<std::size_t> find_block(std::string_view label) const;
  /// "(Ba,a)" canonically, "(Ba,{a,1})" raw.
  std::string point_label(std::size_t i) const;
  /// "U_Ba_a"; canonical points only.
  std::string open_name(std::size_t i) const;
  std::optional<std::size_t> find_point(std::size_t block, Elem generator) const;
  std::string format(const PointSet& s) const;

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const;
  PointSet block_points(std::size_t b) const;

  std::vector<Elem> theory(std::size_t i) const;
  std::vector<Elem> compat(std::size_t i) const;
  /// U_c = same-block points whose theory lies inside Th(c).
  const PointSet& basic_open(std::size_t i) const { return opens_[i]; }
  /// E(c, B'). Throws NoAutomorphismExists when no ortho-automorphism maps
  /// block(c) onto B'.
  PointSet basis_extension(std::size_t i, std::size_t target_block) const;
  /// Union of E(c, B') over all blocks B' reachable by some automorphism.
  PointSet f_max(std::size_t i) const;
  /// A_c: same-block points with Th(c') ⊆ F_c, plus f_max points of other blocks.
  PointSet immediately_accessible(std::size_t i) const;
  /// Levels 0..n of the accessibility chain in block b. Level k holds the
  /// points whose basic opens form A_k^B.
  std::vector<PointSet> chain(std::size_t i, std::size_t b, std::size_t n) const;
  /// Union of the basic opens generated by a set of points.
  PointSet union_of_opens(const PointSet& generators) const;

  /// Atoms of the clopen algebra V (Boolean closure of the basic opens).
  const std::vector<PointSet>& clopen_atoms() const { return clopen_atoms_; }
  /// Index of the V-atom containing point i.
  std::size_t atom_of(std::size_t i) const { return atom_of_[i]; }
  bool is_clopen(const PointSet& s) const;

  const std::vector<OrthoAutomorphism>& automorphisms() const { return automorphisms_; }
  /// Image block index of each block under automorphism k.
  std::size_t block_image(std::size_t k, std::size_t b) const { return block_image_[k][b]; }

 private:
  OmlLattice lattice_;
  bool quotient_;
  Caps caps_;
  std::vector<Block> blocks_;
  std::vector<std::string> aliases_;
  std::vector<Point> points_;
  std::vector<PointSet> opens_;
  std::vector<PointSet> clopen_atoms_;
  std::vector<std::size_t> atom_of_;
  std::vector<OrthoAutomorphism> automorphisms_;
  std::vector<std::vector<std::size_t>> block_image_;
};

struct StoneReport {
  Report report;
  std::size_t points = 0;
  std::size_t clopen_atoms = 0;
  /// 2^clopen_atoms rendered in decimal.
  std::string clopens;
};

/// Compactness (explicit finite subcover of the basic-open cover),
/// zero-dimensionality, Hausdorff separation by disjoint clopens and
/// closedness of points. Informational records describe the topology
/// generated by basic opens alone.
StoneReport stone_check(const ContextSpace& space);

}  // namespace qct
