#include "qct/oml.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "qct/error.hpp"

namespace qct {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
           (ch >= '0' && ch <= '9') || ch == '_' || ch == '\'';
  });
}

std::string pair_witness(const std::vector<std::string>& names, Elem x,
                         Elem y) {
  return "(" + names[x] + "," + names[y] + ")";
}

}  // namespace

std::optional<Elem> OmlLattice::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem OmlLattice::at(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw QctError(ErrorKind::InputError,
                 "unknown lattice element '" + std::string(name) + "'");
}

std::vector<std::pair<Elem, Elem>> OmlLattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < size(); ++x) {
    for (Elem y = 0; y < size(); ++y) {
      if (x == y || !leq(x, y)) continue;
      bool direct = true;
      for (Elem z = 0; z < size() && direct; ++z) {
        if (z != x && z != y && leq(x, z) && leq(z, y)) direct = false;
      }
      if (direct) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<Elem> OmlLattice::atoms() const {
  std::vector<Elem> out;
  for (auto [x, y] : covers()) {
    if (x == bottom_) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string OmlLattice::format(std::span<const Elem> elems) const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += names_[elems[i]];
  }
  return out + "}";
}

OmlLattice validate_oml(const RawLattice& raw) {
  OmlLattice l;
  const std::size_t n = raw.elements.size();
  for (Elem i = 0; i < n; ++i) {
    const auto& name = raw.elements[i];
    if (!valid_name(name)) {
      throw QctError(ErrorKind::InputError,
                     "invalid element name '" + name + "'");
    }
    if (!l.index_.emplace(name, i).second) {
      throw QctError(ErrorKind::InputError,
                     "duplicate element name '" + name + "'");
    }
  }
  l.names_ = raw.elements;
  auto lookup = [&](const std::string& name) {
    auto it = l.index_.find(name);
    if (it == l.index_.end()) {
      throw QctError(ErrorKind::InputError,
                     "reference to undeclared element '" + name + "'");
    }
    return it->second;
  };
  l.bottom_ = lookup(raw.bottom);
  l.top_ = lookup(raw.top);
  if (auto z = l.find("0"); z && *z != l.bottom_) {
    throw QctError(ErrorKind::InputError, "name '0' is reserved for bottom");
  }
  if (auto o = l.find("1"); o && *o != l.top_) {
    throw QctError(ErrorKind::InputError, "name '1' is reserved for top");
  }
  if (l.bottom_ == l.top_) {
    throw QctError(ErrorKind::NotALattice,
                   "bottom equals top; the trivial lattice is rejected");
  }

  // Order: reflexive-transitive closure of the supplied relation.
  l.leq_.assign(n * n, 0);
  for (Elem i = 0; i < n; ++i) l.leq_[i * n + i] = 1;
  for (const auto& [a, b] : raw.relation) l.leq_[lookup(a) * n + lookup(b)] = 1;
  for (Elem k = 0; k < n; ++k) {
    for (Elem i = 0; i < n; ++i) {
      if (!l.leq_[i * n + k]) continue;
      for (Elem j = 0; j < n; ++j) {
        if (l.leq_[k * n + j]) l.leq_[i * n + j] = 1;
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (l.leq(x, y) && l.leq(y, x)) {
        throw QctError(ErrorKind::NotALattice, "order is not antisymmetric",
                       pair_witness(l.names_, x, y));
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (!l.leq(l.bottom_, x) || !l.leq(x, l.top_)) {
      throw QctError(ErrorKind::NotALattice,
                     "element " + l.names_[x] + " lies outside [bottom, top]",
                     "(" + l.names_[x] + ")");
    }
  }

  // Meets and joins as greatest lower / least upper bounds.
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      std::optional<Elem> glb, lub;
      for (Elem z = 0; z < n; ++z) {
        if (l.leq(z, x) && l.leq(z, y) && (!glb || l.leq(*glb, z))) glb = z;
        if (l.leq(x, z) && l.leq(y, z) && (!lub || l.leq(z, *lub))) lub = z;
      }
      // The candidate found by the scan must dominate every lower bound.
      for (Elem z = 0; z < n; ++z) {
        if (glb && l.leq(z, x) && l.leq(z, y) && !l.leq(z, *glb)) glb.reset();
        if (lub && l.leq(x, z) && l.leq(y, z) && !l.leq(*lub, z)) lub.reset();
      }
      if (!glb) {
        throw QctError(ErrorKind::NotALattice, "pair has no meet",
                       pair_witness(l.names_, x, y));
      }
      if (!lub) {
        throw QctError(ErrorKind::NotALattice, "pair has no join",
                       pair_witness(l.names_, x, y));
      }
      l.meet_[x * n + y] = *glb;
      l.join_[x * n + y] = *lub;
    }
  }

  // Lattice axioms, exhaustively.
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (l.meet(x, y) != l.meet(y, x) || l.join(x, y) != l.join(y, x)) {
        throw QctError(ErrorKind::NotALattice, "commutativity fails",
                       pair_witness(l.names_, x, y));
      }
      if (l.meet(x, l.join(x, y)) != x || l.join(x, l.meet(x, y)) != x) {
        throw QctError(ErrorKind::NotALattice, "absorption fails",
                       pair_witness(l.names_, x, y));
      }
      if ((l.meet(x, y) == x) != l.leq(x, y)) {
        throw QctError(ErrorKind::NotALattice, "meet disagrees with order",
                       pair_witness(l.names_, x, y));
      }
      for (Elem z = 0; z < n; ++z) {
        if (l.meet(x, l.meet(y, z)) != l.meet(l.meet(x, y), z) ||
            l.join(x, l.join(y, z)) != l.join(l.join(x, y), z)) {
          throw QctError(ErrorKind::NotALattice, "associativity fails",
                         "(" + l.names_[x] + "," + l.names_[y] + "," +
                             l.names_[z] + ")");
        }
      }
    }
  }

  // Orthocomplement.
  constexpr Elem unset = static_cast<Elem>(-1);
  l.ortho_.assign(n, unset);
  auto set_ortho = [&](Elem x, Elem y) {
    if (l.ortho_[x] != unset && l.ortho_[x] != y) {
      throw QctError(ErrorKind::NotOrtholattice,
                     "conflicting orthocomplements for " + l.names_[x],
                     "(" + l.names_[x] + ")");
    }
    l.ortho_[x] = y;
  };
  for (const auto& [a, b] : raw.ortho) set_ortho(lookup(a), lookup(b));
  // A one-directional entry x -> y also fixes y -> x.
  for (Elem x = 0; x < n; ++x) {
    if (l.ortho_[x] != unset && l.ortho_[l.ortho_[x]] == unset) {
      l.ortho_[l.ortho_[x]] = x;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (l.ortho_[x] == unset) {
      throw QctError(ErrorKind::NotOrtholattice,
                     "no orthocomplement given for " + l.names_[x],
                     "(" + l.names_[x] + ")");
    }
  }
  for (Elem x = 0; x < n; ++x) {
    const Elem xo = l.ortho(x);
    if (l.ortho(xo) != x) {
      throw QctError(ErrorKind::NotOrtholattice, "ortho is not an involution",
                     "(" + l.names_[x] + ")");
    }
    if (l.meet(x, xo) != l.bottom_ || l.join(x, xo) != l.top_) {
      throw QctError(ErrorKind::NotOrtholattice, "complement law fails",
                     "(" + l.names_[x] + ")");
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (l.leq(x, y) && !l.leq(l.ortho(y), l.ortho(x))) {
        throw QctError(ErrorKind::NotOrtholattice, "ortho is not antitone",
                       pair_witness(l.names_, x, y));
      }
    }
  }

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (l.leq(x, y) && l.join(x, l.meet(y, l.ortho(x))) != y) {
        throw QctError(ErrorKind::NotOrthomodular,
                       "y != x v (y ^ x') for x <= y",
                       pair_witness(l.names_, x, y));
      }
    }
  }
  return l;
}

OmlLattice make_boolean(std::size_t atoms) {
  if (atoms == 0) {
    throw QctError(ErrorKind::InputError, "boolean(n) needs n >= 1");
  }
  std::vector<std::string> block;
  for (std::size_t i = 1; i <= atoms; ++i) block.push_back("a" + std::to_string(i));
  return make_greechie({block});
}

OmlLattice make_mo(std::size_t n) {
  if (n == 0 || n > 26) {
    throw QctError(ErrorKind::InputError, "MO(n) needs 1 <= n <= 26");
  }
  RawLattice raw;
  raw.elements.push_back("0");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string a(1, static_cast<char>('a' + i));
    raw.elements.push_back(a);
    raw.elements.push_back(a + "'");
    raw.ortho.emplace_back(a, a + "'");
  }
  raw.elements.push_back("1");
  raw.ortho.emplace_back("0", "1");
  for (std::size_t i = 1; i + 1 < raw.elements.size(); ++i) {
    raw.relation.emplace_back("0", raw.elements[i]);
    raw.relation.emplace_back(raw.elements[i], "1");
  }
  return validate_oml(raw);
}

RawLattice raw_greechie(const std::vector<std::vector<std::string>>& blocks) {
  if (blocks.empty()) {
    throw QctError(ErrorKind::InputError, "greechie needs at least one block");
  }
  // Nodes are (block, atom subset); nodes naming the same atom set, or whose
  // complements name the same atom set, are one element of the pasting.
  struct Node {
    std::size_t block;
    std::uint32_t mask;
  };
  std::vector<Node> nodes;
  std::vector<std::size_t> node_base;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& atoms = blocks[b];
    if (atoms.empty() || atoms.size() > 16) {
      throw QctError(ErrorKind::InputError,
                     "each greechie block needs 1..16 atoms");
    }
    std::set<std::string> seen;
    for (const auto& a : atoms) {
      if (!valid_name(a) || a == "0" || a == "1") {
        throw QctError(ErrorKind::InputError, "invalid atom name '" + a + "'");
      }
      if (!seen.insert(a).second) {
        throw QctError(ErrorKind::InputError,
                       "atom '" + a + "' repeated within a block");
      }
    }
    node_base.push_back(nodes.size());
    for (std::uint32_t m = 0; m < (1u << atoms.size()); ++m) nodes.push_back({b, m});
  }
  auto atom_set = [&](std::size_t b, std::uint32_t mask) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (mask >> i & 1u) out.insert(blocks[b][i]);
    }
    return out;
  };
  auto full = [&](std::size_t b) {
    return static_cast<std::uint32_t>((1u << blocks[b].size()) - 1);
  };

  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::map<std::set<std::string>, std::size_t> by_set, by_complement;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto [b, m] = nodes[i];
    for (auto* table : {&by_set, &by_complement}) {
      auto key = atom_set(b, table == &by_set ? m : (full(b) & ~m));
      auto [it, inserted] = table->emplace(std::move(key), i);
      if (!inserted) parent[root(i)] = root(it->second);
    }
  }

  // Canonical element order: 0, then by first appearance level by level, 1.
  std::map<std::size_t, std::size_t> class_id;
  std::vector<std::size_t> class_rep;
  auto visit = [&](std::size_t node) {
    const auto r = root(node);
    if (class_id.emplace(r, class_rep.size()).second) class_rep.push_back(node);
  };
  visit(node_base[0]);
  std::size_t max_atoms = 0;
  for (const auto& b : blocks) max_atoms = std::max(max_atoms, b.size());
  for (std::size_t level = 1; level < max_atoms; ++level) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (std::uint32_t m = 1; m < full(b); ++m) {
        if (static_cast<std::size_t>(__builtin_popcount(m)) == level) {
          visit(node_base[b] + m);
        }
      }
    }
  }
  visit(node_base[0] + full(0));
  const std::size_t bottom_class = class_id.at(root(node_base[0]));
  const std::size_t top_class = class_id.at(root(node_base[0] + full(0)));
  if (bottom_class == top_class) {
    throw QctError(ErrorKind::PastingInvalid, "pasting collapses 0 and 1");
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (class_id.at(root(node_base[b])) != bottom_class ||
        class_id.at(root(node_base[b] + full(b))) != top_class) {
      throw QctError(ErrorKind::PastingInvalid,
                     "block bounds were identified with inner elements");
    }
  }

  const std::size_t n = class_rep.size();
  auto class_of = [&](std::size_t b, std::uint32_t m) {
    return class_id.at(root(node_base[b] + m));
  };
  std::vector<std::string> names(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (c == bottom_class) { names[c] = "0"; continue; }
    if (c == top_class) { names[c] = "1"; continue; }
    std::string atom_name, coatom_name;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (class_id.at(root(i)) != c) continue;
      const auto [b, m] = nodes[i];
      if (__builtin_popcount(m) == 1 && atom_name.empty()) {
        atom_name = *atom_set(b, m).begin();
      }
      const auto cm = full(b) & ~m;
      if (__builtin_popcount(cm) == 1 && coatom_name.empty()) {
        coatom_name = *atom_set(b, cm).begin() + "'";
      }
    }
    if (!atom_name.empty()) {
      names[c] = atom_name;
    } else if (!coatom_name.empty()) {
      names[c] = coatom_name;
    } else {
      const auto [b, m] = nodes[class_rep[c]];
      std::string joined;
      for (std::size_t i = 0; i < blocks[b].size(); ++i) {
        if (m >> i & 1u) joined += (joined.empty() ? "" : "_") + blocks[b][i];
      }
      names[c] = joined;
    }
  }

  RawLattice raw;
  raw.elements = names;
  raw.relation_is_covers = false;
  std::vector<std::size_t> ortho(n, n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::uint32_t m = 0; m <= full(b); ++m) {
      const auto x = class_of(b, m);
      const auto xo = class_of(b, full(b) & ~m);
      if (ortho[x] != n && ortho[x] != xo) {
        throw QctError(ErrorKind::PastingInvalid,
                       "orthocomplement of " + names[x] + " is ambiguous",
                       "(" + names[x] + ")");
      }
      ortho[x] = xo;
      for (std::uint32_t s = m;; s = (s - 1) & m) {
        raw.relation.emplace_back(names[class_of(b, s)], names[x]);
        if (s == 0) break;
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) raw.ortho.emplace_back(names[c], names[ortho[c]]);
  return raw;
}

OmlLattice make_greechie(const std::vector<std::vector<std::string>>& blocks) {
  RawLattice raw = raw_greechie(blocks);
  try {
    return validate_oml(raw);
  } catch (const QctError& e) {
    if (e.kind() == ErrorKind::InputError) throw;
    throw QctError(ErrorKind::PastingInvalid, e.what(), e.witness());
  }
}

Chain maximal_chain(const OmlLattice& lattice, std::span<const Elem> seed) {
  std::vector<Elem> chain(seed.begin(), seed.end());
  for (Elem x : chain) {
    if (x >= lattice.size()) {
      throw QctError(ErrorKind::InputError, "seed element out of range");
    }
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      const Elem x = chain[i], y = chain[j];
      if (!lattice.leq(x, y) && !lattice.leq(y, x)) {
        throw QctError(ErrorKind::SeedNotChain, "seed elements are incomparable",
                       "(" + lattice.name(x) + "," + lattice.name(y) + ")");
      }
    }
  }
  auto in_chain = [&](Elem x) {
    return std::find(chain.begin(), chain.end(), x) != chain.end();
  };
  for (Elem bound : {lattice.bottom(), lattice.top()}) {
    if (!in_chain(bound)) chain.push_back(bound);
  }
  // One pass suffices: a rejected element stays incomparable to a member.
  for (Elem x = 0; x < lattice.size(); ++x) {
    if (in_chain(x)) continue;
    const bool comparable = std::all_of(chain.begin(), chain.end(), [&](Elem y) {
      return lattice.leq(x, y) || lattice.leq(y, x);
    });
    if (comparable) chain.push_back(x);
  }
  std::sort(chain.begin(), chain.end(),
            [&](Elem a, Elem b) { return a != b && lattice.leq(a, b); });
  return Chain{std::move(chain)};
}

std::vector<Chain> enumerate_maximal_chains(const OmlLattice& lattice) {
  std::vector<std::vector<Elem>> up(lattice.size());
  for (auto [x, y] : lattice.covers()) up[x].push_back(y);
  std::vector<Chain> out;
  std::vector<Elem> path{lattice.bottom()};
  auto dfs = [&](auto&& self, Elem x) -> void {
    if (x == lattice.top()) {
      out.push_back(Chain{path});
      return;
    }
    for (Elem y : up[x]) {
      path.push_back(y);
      self(self, y);
      path.pop_back();
    }
  };
  dfs(dfs, lattice.bottom());
  return out;
}

std::vector<Elem> centralizer(const OmlLattice& lattice, const Chain& chain) {
  std::vector<Elem> out;
  for (Elem x = 0; x < lattice.size(); ++x) {
    const bool central = std::all_of(
        chain.elements.begin(), chain.elements.end(),
        [&](Elem a) { return lattice.commutes(x, a); });
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<Elem> sublattice_closure(const OmlLattice& lattice,
                                     std::span<const Elem> seed) {
  std::vector<char> member(lattice.size(), 0);
  std::vector<Elem> items;
  auto add = [&](Elem x) {
    if (!member[x]) {
      member[x] = 1;
      items.push_back(x);
    }
  };
  add(lattice.bottom());
  add(lattice.top());
  for (Elem x : seed) add(x);
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(lattice.meet(items[i], items[j]));
      add(lattice.join(items[i], items[j]));
    }
  }
  std::sort(items.begin(), items.end());
  return items;
}

bool Block::contains(Elem x) const {
  return std::binary_search(carrier.begin(), carrier.end(), x);
}

std::optional<std::string> boolean_violation(const OmlLattice& lattice,
                                             std::span<const Elem> carrier) {
  std::vector<char> member(lattice.size(), 0);
  for (Elem x : carrier) member[x] = 1;
  if (!member[lattice.bottom()] || !member[lattice.top()]) {
    return "carrier misses a bound";
  }
  for (Elem x : carrier) {
    if (!member[lattice.ortho(x)]) {
      return "not closed under ortho at " + lattice.name(x);
    }
    for (Elem y : carrier) {
      if (!member[lattice.meet(x, y)] || !member[lattice.join(x, y)]) {
        return "not closed under meet/join at (" + lattice.name(x) + "," +
               lattice.name(y) + ")";
      }
    }
  }
  for (Elem x : carrier) {
    for (Elem y : carrier) {
      for (Elem z : carrier) {
        if (lattice.meet(x, lattice.join(y, z)) !=
            lattice.join(lattice.meet(x, y), lattice.meet(x, z))) {
          return "distributivity fails at (" + lattice.name(x) + "," +
                 lattice.name(y) + "," + lattice.name(z) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

Block make_block(const OmlLattice& lattice, std::vector<Elem> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  Block block;
  for (Elem x : carrier) {
    if (x == lattice.bottom()) continue;
    const bool minimal = std::none_of(carrier.begin(), carrier.end(), [&](Elem y) {
      return y != x && y != lattice.bottom() && lattice.leq(y, x);
    });
    if (minimal) block.atoms.push_back(x);
  }
  block.carrier = std::move(carrier);
  return block;
}

Block b_c_max(const OmlLattice& lattice, const Chain& chain) {
  std::vector<Elem> seed = chain.elements;
  for (Elem x : centralizer(lattice, chain)) seed.push_back(x);
  auto l_c = sublattice_closure(lattice, seed);
  std::vector<Elem> with_orthos = l_c;
  for (Elem y : l_c) with_orthos.push_back(lattice.ortho(y));
  auto carrier = sublattice_closure(lattice, with_orthos);
  if (auto bad = boolean_violation(lattice, carrier)) {
    throw QctError(ErrorKind::NotBoolean, *bad, lattice.format(carrier));
  }
  Block block = make_block(lattice, std::move(carrier));
  const auto blocks = enumerate_blocks(lattice);
  block.maximal = std::find(blocks.begin(), blocks.end(), block) != blocks.end();
  return block;
}

std::vector<Block> enumerate_blocks(const OmlLattice& lattice) {
  // Blocks of an OML are exactly its maximal sets of pairwise compatible
  // elements; enumerate those as maximal cliques (Bron-Kerbosch with pivot).
  using Bits = boost::dynamic_bitset<>;
  const std::size_t n = lattice.size();
  std::vector<Bits> adj(n, Bits(n));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (x != y && lattice.commutes(x, y) && lattice.commutes(y, x)) adj[x].set(y);
    }
  }
  std::vector<std::vector<Elem>> cliques;
  auto bk = [&](auto&& self, Bits r, Bits p, Bits x) -> void {
    if (p.none() && x.none()) {
      std::vector<Elem> clique;
      for (auto i = r.find_first(); i != Bits::npos; i = r.find_next(i)) clique.push_back(i);
      cliques.push_back(std::move(clique));
      return;
    }
    const Bits px = p | x;
    std::size_t pivot = px.find_first();
    for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
      if ((p & adj[u]).count() > (p & adj[pivot]).count()) pivot = u;
    }
    const Bits candidates = p - adj[pivot];
    for (auto v = candidates.find_first(); v != Bits::npos;
         v = candidates.find_next(v)) {
      Bits r2 = r;
      r2.set(v);
      self(self, r2, p & adj[v], x & adj[v]);
      p.reset(v);
      x.set(v);
    }
  };
  Bits all(n);
  all.set();
  bk(bk, Bits(n), all, Bits(n));

  std::vector<Block> blocks;
  for (auto& clique : cliques) {
    if (auto bad = boolean_violation(lattice, clique)) {
      throw QctError(ErrorKind::NotBoolean,
                     "maximal compatible set is not Boolean: " + *bad,
                     lattice.format(clique));
    }
    Block b = make_block(lattice, std::move(clique));
    b.maximal = true;
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.carrier < b.carrier; });
  return blocks;
}

}  // namespace qct
