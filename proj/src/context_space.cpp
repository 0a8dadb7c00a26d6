#include "qct/context_space.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "qct/error.hpp"

namespace qct {

namespace {

void require_in_block(const OmlLattice& l, const Block& block, std::span<const Elem> props) {
  for (Elem p : props) {
    if (p >= l.size() || !block.contains(p)) {
      throw QctError(ErrorKind::PropNotInBlock,
                     (p < l.size() ? l.name(p) : std::to_string(p)) + " is not in the block",
                     p < l.size() ? "(" + l.name(p) + ")" : "");
    }
  }
}

}  // namespace

Elem context_generator(const OmlLattice& l, const Block& block, std::span<const Elem> props) {
  require_in_block(l, block, props);
  Elem g = l.top();
  for (Elem p : props) g = l.meet(g, p);
  return g;
}

std::vector<Elem> theory_of(const OmlLattice& l, const Block& block, std::span<const Elem> props) {
  const Elem g = context_generator(l, block, props);
  std::vector<Elem> out;
  for (Elem q : block.carrier) {
    if (l.leq(g, q)) out.push_back(q);
  }
  return out;
}

std::vector<Elem> compat_filter(const OmlLattice& l, const Block& block,
                                std::span<const Elem> props) {
  require_in_block(l, block, props);
  std::vector<Elem> out;
  for (Elem q : block.carrier) {
    const bool ok = std::all_of(props.begin(), props.end(),
                                [&](Elem p) { return l.meet(q, p) != l.bottom(); });
    if (ok) out.push_back(q);
  }
  return out;
}

ContextSpace::ContextSpace(OmlLattice lattice, bool quotient, Caps caps)
    : lattice_(std::move(lattice)), quotient_(quotient), caps_(caps) {
  const auto& l = lattice_;
  blocks_ = enumerate_blocks(l);

  // Aliases: "B" + the first atom not already used by an earlier block and
  // not colliding with an index label.
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    std::string alias;
    for (Elem a : blocks_[b].atoms) {
      const std::string cand = "B" + l.name(a);
      const bool taken = std::find(aliases_.begin(), aliases_.end(), cand) != aliases_.end();
      bool index_like = false;
      for (std::size_t k = 0; k < blocks_.size(); ++k) index_like |= cand == block_label(k);
      if (!taken && !index_like) {
        alias = cand;
        break;
      }
    }
    aliases_.push_back(alias.empty() ? block_label(b) : alias);
  }

  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& carrier = blocks_[b].carrier;
    if (quotient_) {
      for (Elem g : carrier) points_.push_back({b, g, {g}});
      continue;
    }
    std::vector<Elem> nonzero;
    for (Elem x : carrier) {
      if (x != l.bottom()) nonzero.push_back(x);
    }
    if (nonzero.size() > 15) {
      throw QctError(ErrorKind::SizeCapExceeded, "raw context enumeration limited to 16-element blocks");
    }
    std::vector<std::vector<Elem>> subsets;
    for (std::uint32_t m = 1; m < (1u << nonzero.size()); ++m) {
      std::vector<Elem> s;
      for (std::size_t i = 0; i < nonzero.size(); ++i) {
        if (m >> i & 1u) s.push_back(nonzero[i]);
      }
      subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end());
    for (auto& s : subsets) points_.push_back({b, context_generator(l, blocks_[b], s), std::move(s)});
  }

  const std::size_t n = points_.size();
  opens_.assign(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (points_[j].block == points_[i].block && l.leq(points_[i].generator, points_[j].generator)) {
        opens_[i].set(j);
      }
    }
  }

  std::map<std::vector<bool>, std::size_t> signature_atom;
  atom_of_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> sig(n);
    for (std::size_t i = 0; i < n; ++i) sig[i] = opens_[i].test(j);
    auto [it, fresh] = signature_atom.emplace(sig, clopen_atoms_.size());
    if (fresh) clopen_atoms_.push_back(PointSet(n));
    clopen_atoms_[it->second].set(j);
    atom_of_[j] = it->second;
  }

  if (l.size() <= caps_.automorphism_elements) {
    automorphisms_ = enumerate_ortho_automorphisms(l, caps_.automorphism_elements);
    for (const auto& f : automorphisms_) {
      auto& row = block_image_.emplace_back();
      for (const auto& b : blocks_) {
        const auto img = image(f, b.carrier);
        auto it = std::find_if(blocks_.begin(), blocks_.end(),
                               [&](const Block& c) { return c.carrier == img; });
        row.push_back(static_cast<std::size_t>(it - blocks_.begin()));
      }
    }
  }
}

std::string ContextSpace::block_label(std::size_t b) const { return "B" + std::to_string(b + 1); }

std::optional<std::size_t> ContextSpace::find_block(std::string_view label) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (label == block_label(b)) return b;
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (label == aliases_[b]) return b;
  }
  return std::nullopt;
}

std::string ContextSpace::point_label(std::size_t i) const {
  const auto& p = points_[i];
  if (quotient_) return "(" + aliases_[p.block] + "," + lattice_.name(p.generator) + ")";
  return "(" + aliases_[p.block] + "," + lattice_.format(p.props) + ")";
}

std::string ContextSpace::open_name(std::size_t i) const {
  const auto& p = points_[i];
  return "U_" + aliases_[p.block] + "_" + lattice_.name(p.generator);
}

std::optional<std::size_t> ContextSpace::find_point(std::size_t block, Elem generator) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].block == block && points_[i].generator == generator && quotient_) return i;
  }
  return std::nullopt;
}

std::string ContextSpace::format(const PointSet& s) const {
  std::string out = "{";
  bool first = true;
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) {
    if (!first) out += ",";
    out += point_label(i);
    first = false;
  }
  return out + "}";
}

PointSet ContextSpace::full_set() const {
  PointSet s(size());
  s.set();
  return s;
}

PointSet ContextSpace::block_points(std::size_t b) const {
  PointSet s(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (points_[i].block == b) s.set(i);
  }
  return s;
}

std::vector<Elem> ContextSpace::theory(std::size_t i) const {
  return theory_of(lattice_, blocks_[points_[i].block], points_[i].props);
}

std::vector<Elem> ContextSpace::compat(std::size_t i) const {
  return compat_filter(lattice_, blocks_[points_[i].block], points_[i].props);
}

PointSet ContextSpace::basis_extension(std::size_t i, std::size_t target) const {
  if (automorphisms_.empty()) {
    throw QctError(ErrorKind::SizeCapExceeded, "lattice exceeds the automorphism search cap");
  }
  const auto& c = points_[i];
  PointSet out(size());
  bool any = false;
  // Φ⁻¹(Th(c')) ⊆ Th(c) with Th = ↑g reduces to g' ≥ Φ(g).
  for (std::size_t k = 0; k < automorphisms_.size(); ++k) {
    if (block_image_[k][c.block] != target) continue;
    any = true;
    const Elem image_gen = automorphisms_[k](c.generator);
    for (std::size_t j = 0; j < size(); ++j) {
      if (points_[j].block == target && lattice_.leq(image_gen, points_[j].generator)) out.set(j);
    }
  }
  if (!any) {
    throw QctError(ErrorKind::NoAutomorphismExists,
                   "no ortho-automorphism maps " + aliases_[c.block] + " onto " + aliases_[target],
                   "(" + aliases_[c.block] + "," + aliases_[target] + ")");
  }
  return out;
}

PointSet ContextSpace::f_max(std::size_t i) const {
  PointSet out(size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    try {
      out |= basis_extension(i, b);
    } catch (const QctError& e) {
      if (e.kind() != ErrorKind::NoAutomorphismExists) throw;
    }
  }
  return out;
}

PointSet ContextSpace::immediately_accessible(std::size_t i) const {
  const auto& c = points_[i];
  const auto filter = compat(i);
  PointSet out(size());
  for (std::size_t j = 0; j < size(); ++j) {
    if (points_[j].block != c.block) continue;
    const auto th = theory(j);
    if (std::includes(filter.begin(), filter.end(), th.begin(), th.end())) out.set(j);
  }
  out |= f_max(i) - block_points(c.block);
  return out;
}

std::vector<PointSet> ContextSpace::chain(std::size_t i, std::size_t b, std::size_t n) const {
  std::vector<PointSet> levels;
  PointSet current(size());
  current.set(i);
  levels.push_back(current);
  const PointSet in_block = block_points(b);
  for (std::size_t k = 1; k <= n; ++k) {
    PointSet next = current;
    for (auto c = current.find_first(); c != PointSet::npos; c = current.find_next(c)) {
      next |= immediately_accessible(c) & in_block;
    }
    current = next;
    levels.push_back(current);
  }
  return levels;
}

PointSet ContextSpace::union_of_opens(const PointSet& generators) const {
  PointSet out(size());
  for (auto c = generators.find_first(); c != PointSet::npos; c = generators.find_next(c)) {
    out |= opens_[c];
  }
  return out;
}

bool ContextSpace::is_clopen(const PointSet& s) const {
  if (s.size() != size()) return false;
  for (const auto& atom : clopen_atoms_) {
    if ((s & atom).any() && !atom.is_subset_of(s)) return false;
  }
  return true;
}

StoneReport stone_check(const ContextSpace& space) {
  StoneReport out;
  auto& report = out.report;
  const std::size_t n = space.size();
  out.points = n;
  out.clopen_atoms = space.clopen_atoms().size();
  out.clopens = (boost::multiprecision::cpp_int(1) << out.clopen_atoms).str();

  // Compactness: greedy extraction of a finite subcover from the cover by
  // all basic opens.
  {
    PointSet covered(n);
    std::vector<std::size_t> chosen;
    while (!covered.all()) {
      std::size_t best = 0, gain = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t g = (space.basic_open(i) - covered).count();
        if (g > gain) {
          gain = g;
          best = i;
        }
      }
      if (gain == 0) break;
      covered |= space.basic_open(best);
      chosen.push_back(best);
    }
    std::string names;
    for (auto i : chosen) names += (names.empty() ? "" : ",") + space.point_label(i);
    report.add("compact_subcover", covered.all() ? Status::Pass : Status::Fail,
               std::to_string(chosen.size()) + " basic opens cover " + std::to_string(n) +
                   " points: U of " + names);
  }

  // Zero-dimensionality: each V-atom is the intersection of the basic opens
  // containing it and the complements of those that do not, so V is
  // generated by basic opens and their complements; every basic open and its
  // complement are unions of V-atoms.
  {
    std::string witness;
    for (std::size_t a = 0; a < space.clopen_atoms().size() && witness.empty(); ++a) {
      const auto& atom = space.clopen_atoms()[a];
      const std::size_t rep = atom.find_first();
      PointSet term = space.full_set();
      for (std::size_t i = 0; i < n; ++i) {
        term &= space.basic_open(i).test(rep) ? space.basic_open(i) : ~space.basic_open(i);
      }
      if (term != atom) witness = space.format(atom);
    }
    for (std::size_t i = 0; i < n && witness.empty(); ++i) {
      if (!space.is_clopen(space.basic_open(i)) || !space.is_clopen(~space.basic_open(i))) {
        witness = space.point_label(i);
      }
    }
    report.add("zero_dimensional", witness.empty() ? Status::Pass : Status::Fail,
               "every clopen atom is a Boolean combination of basic opens", witness);
  }

  // Hausdorff: distinct points are separated by the clopen atom of the first
  // and its complement.
  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i) {
      for (std::size_t j = i + 1; j < n && witness.empty(); ++j) {
        const PointSet& u = space.clopen_atoms()[space.atom_of(i)];
        const PointSet v = ~u;
        if (!(u.test(i) && v.test(j) && !u.intersects(v))) {
          witness = "(" + space.point_label(i) + "," + space.point_label(j) + ")";
        }
      }
    }
    report.add("hausdorff", witness.empty() ? Status::Pass : Status::Fail,
               "distinct points lie in disjoint clopens", witness);
  }

  // Points are closed: each singleton's complement is clopen.
  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i) {
      PointSet rest = space.full_set();
      rest.reset(i);
      if (!space.is_clopen(rest)) witness = space.point_label(i);
    }
    report.add("points_closed", witness.empty() ? Status::Pass : Status::Fail,
               "complement of every point is clopen", witness);
  }

  // The topology generated by basic opens alone: the smallest neighbourhood
  // of a point is its own basic open.
  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i) {
      for (std::size_t j = i + 1; j < n && witness.empty(); ++j) {
        if (space.basic_open(i).intersects(space.basic_open(j))) {
          witness = "(" + space.point_label(i) + "," + space.point_label(j) + ")";
        }
      }
    }
    report.add("basic_open_topology_hausdorff", Status::Info,
               witness.empty() ? "basic opens alone separate all points"
                               : "basic opens alone do not separate this pair; separation uses "
                                 "complements from the clopen algebra",
               witness);
  }
  return out;
}

}  // namespace qct
