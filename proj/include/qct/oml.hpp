#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qct {

/// Index of a lattice element. Indices follow declaration order.
using Elem = std::size_t;

/// Unvalidated lattice description, as read from a lattice file or built by a
/// generator. `relation` is either the cover (Hasse) relation or any relation
/// whose reflexive-transitive closure is the order.
struct RawLattice {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relation;
  bool relation_is_covers = true;
  std::vector<std::pair<std::string, std::string>> ortho;
  std::string bottom = "0";
  std::string top = "1";
};

/// A finite orthomodular lattice given by explicit tables. Immutable once
/// produced by validate_oml.
class OmlLattice {
 public:
  std::size_t size() const { return names_.size(); }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool leq(Elem x, Elem y) const { return leq_[x * size() + y] != 0; }
  Elem meet(Elem x, Elem y) const { return meet_[x * size() + y]; }
  Elem join(Elem x, Elem y) const { return join_[x * size() + y]; }
  Elem ortho(Elem x) const { return ortho_[x]; }

  /// x commutes with a iff (x ∧ a) ∨ (x⊥ ∧ a) = a.
  bool commutes(Elem x, Elem a) const {
    return join(meet(x, a), meet(ortho(x), a)) == a;
  }
  bool orthogonal(Elem x, Elem y) const { return leq(x, ortho(y)); }

  const std::string& name(Elem x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Elem> find(std::string_view name) const;
  /// Throws InputError for unknown names.
  Elem at(std::string_view name) const;

  /// Pairs (x, y) with x covered by y, sorted.
  std::vector<std::pair<Elem, Elem>> covers() const;
  /// Elements covering the bottom.
  std::vector<Elem> atoms() const;

  /// "{0,a,1}" style rendering of an element set.
  std::string format(std::span<const Elem> elems) const;

  friend OmlLattice validate_oml(const RawLattice& raw);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<char> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<Elem> ortho_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// Completes meet/join tables and checks every orthomodular lattice axiom.
/// Throws QctError with kind NotALattice, NotOrtholattice or NotOrthomodular
/// and a witness naming the first violating elements (declaration order).
OmlLattice validate_oml(const RawLattice& raw);

// Generators. All results pass validate_oml.

/// Boolean algebra with `atoms` atoms named a1..an.
OmlLattice make_boolean(std::size_t atoms);
/// MO(n): 0, 1 and n incomparable complementary pairs a,a',b,b',...
OmlLattice make_mo(std::size_t n);
/// Pastes Boolean blocks given by atom names at shared atoms and bounds.
/// Throws PastingInvalid when the pasted structure is not an OML.
OmlLattice make_greechie(const std::vector<std::vector<std::string>>& blocks);
RawLattice raw_greechie(const std::vector<std::vector<std::string>>& blocks);

/// A chain in ascending order, always containing bottom and top.
struct Chain {
  std::vector<Elem> elements;
};

/// Extends `seed` (plus bounds) to a maximal chain, adding the least-index
/// comparable element at each step. Throws SeedNotChain.
Chain maximal_chain(const OmlLattice& lattice, std::span<const Elem> seed = {});

/// Every maximal chain, i.e. every cover path from bottom to top.
std::vector<Chain> enumerate_maximal_chains(const OmlLattice& lattice);

/// {x : x commutes with every element of the chain}, sorted.
std::vector<Elem> centralizer(const OmlLattice& lattice, const Chain& chain);

/// Least superset of seed ∪ {0,1} closed under meet and join, sorted.
std::vector<Elem> sublattice_closure(const OmlLattice& lattice,
                                     std::span<const Elem> seed);

/// A Boolean sublattice. `carrier` and `atoms` are sorted.
struct Block {
  std::vector<Elem> carrier;
  std::vector<Elem> atoms;
  bool maximal = false;

  bool contains(Elem x) const;
  friend bool operator==(const Block& a, const Block& b) {
    return a.carrier == b.carrier;
  }
};

/// Empty when `carrier` is closed under meet, join and ortho, contains the
/// bounds and is distributive; otherwise a description with witnesses.
std::optional<std::string> boolean_violation(const OmlLattice& lattice,
                                             std::span<const Elem> carrier);

/// Builds a Block (atoms filled in) from a carrier known to be Boolean.
Block make_block(const OmlLattice& lattice, std::vector<Elem> carrier);

/// Maximal Boolean sublattice built from a maximal chain: centralizer,
/// sublattice closure, then meet/join closure of that set with its
/// orthocomplements. Throws NotBoolean if the result is not Boolean.
/// `maximal` is set by comparison with enumerate_blocks.
Block b_c_max(const OmlLattice& lattice, const Chain& chain);

/// All maximal Boolean sublattices in lexicographic order of carrier.
std::vector<Block> enumerate_blocks(const OmlLattice& lattice);

}  // namespace qct
