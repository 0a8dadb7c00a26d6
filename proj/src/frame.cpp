#include "qct/frame.hpp"

#include <algorithm>

#include "qct/error.hpp"

namespace qct {

namespace {

PointSet clopen_hull(const ContextSpace& s, const PointSet& set) {
  PointSet out = s.empty_set();
  for (auto i = set.find_first(); i != PointSet::npos; i = set.find_next(i)) {
    out |= s.clopen_atoms()[s.atom_of(i)];
  }
  return out;
}

}  // namespace

QuantumFrame::QuantumFrame(std::shared_ptr<const ContextSpace> space) : space_(std::move(space)) {
  const auto& s = *space_;
  const auto& l = s.lattice();
  if (!s.quotient()) {
    throw QctError(ErrorKind::InputError, "frames are built on the canonical context space");
  }
  for (std::size_t b = 0; b < s.blocks().size(); ++b) {
    for (Elem p = 0; p < l.size(); ++p) {
      if (p != l.bottom()) indices_.push_back({b, p});
    }
  }
  std::vector<PointSet> accessible;
  for (std::size_t i = 0; i < s.size(); ++i) accessible.push_back(s.immediately_accessible(i));

  succ_.assign(indices_.size(), std::vector<PointSet>(s.size(), s.empty_set()));
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    const auto [bi, p] = indices_[k];
    const PointSet target_block = s.block_points(bi);
    for (std::size_t c = 0; c < s.size(); ++c) {
      const auto& pt = s.points()[c];
      if (!s.blocks()[pt.block].contains(p) || !l.leq(pt.generator, p)) continue;
      const std::size_t c2 = *s.find_point(pt.block, p);
      PointSet depth1 = s.basic_open(c2) | s.union_of_opens(accessible[c2] & target_block);
      succ_[k][c] = depth1 & target_block;
    }
  }
}

std::optional<std::size_t> QuantumFrame::find_index(std::size_t block, Elem prop) const {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k].block == block && indices_[k].prop == prop) return k;
  }
  return std::nullopt;
}

std::string QuantumFrame::index_label(std::size_t k) const {
  return "[" + space_->block_alias(indices_[k].block) + "," +
         space_->lattice().name(indices_[k].prop) + "]";
}

std::size_t QuantumFrame::edge_count() const {
  std::size_t n = 0;
  for (const auto& row : succ_) {
    for (const auto& s : row) n += s.count();
  }
  return n;
}

PointSet QuantumFrame::box(std::size_t k, const PointSet& omega) const {
  if (!space_->is_clopen(omega)) {
    throw QctError(ErrorKind::NotClopen, "box argument is not clopen", space_->format(omega));
  }
  PointSet out = space_->empty_set();
  for (std::size_t c = 0; c < space_->size(); ++c) {
    if (succ_[k][c].is_subset_of(omega)) out.set(c);
  }
  return out;
}

PointSet QuantumFrame::diamond(std::size_t k, const PointSet& omega) const {
  return ~box(k, ~omega);
}

PointSet QuantumFrame::prop_set(Elem p) const {
  const auto& s = *space_;
  PointSet out = s.empty_set();
  for (std::size_t c = 0; c < s.size(); ++c) {
    const auto& pt = s.points()[c];
    if (s.blocks()[pt.block].contains(p) && s.lattice().leq(pt.generator, p)) out.set(c);
  }
  return out;
}

QuantumFrame QuantumFrame::with_edge_removed(std::size_t k, std::size_t from, std::size_t to) const {
  QuantumFrame copy = *this;
  copy.succ_[k][from].reset(to);
  return copy;
}

Report QuantumFrame::verify() const {
  Report report;
  const auto& s = *space_;
  std::string witness;
  for (std::size_t k = 0; k < indices_.size() && witness.empty(); ++k) {
    for (std::size_t c = 0; c < s.size() && witness.empty(); ++c) {
      if (succ_[k][c].none()) continue;
      const auto th = s.theory(c);
      if (!std::binary_search(th.begin(), th.end(), indices_[k].prop)) {
        witness = index_label(k) + " " + s.point_label(c);
      }
    }
  }
  report.add("source_condition", witness.empty() ? Status::Pass : Status::Fail,
             "edges leave only contexts whose theory contains the index proposition", witness);

  // box(ω) is a union of clopen atoms for every clopen ω exactly when points
  // of one atom have successor sets with the same clopen hull.
  witness.clear();
  for (std::size_t k = 0; k < indices_.size() && witness.empty(); ++k) {
    for (const auto& atom : s.clopen_atoms()) {
      const std::size_t first = atom.find_first();
      const PointSet hull = clopen_hull(s, succ_[k][first]);
      for (auto c = atom.find_next(first); c != PointSet::npos; c = atom.find_next(c)) {
        if (clopen_hull(s, succ_[k][c]) != hull) {
          witness = index_label(k) + " (" + s.point_label(first) + "," + s.point_label(c) + ")";
          break;
        }
      }
      if (!witness.empty()) break;
    }
  }
  report.add("box_preserves_clopens", witness.empty() ? Status::Pass : Status::Fail,
             "every box maps the clopen algebra into itself", witness);
  return report;
}

QuantumFrame build_frame(const OmlLattice& lattice, Caps caps) {
  return QuantumFrame(std::make_shared<const ContextSpace>(lattice, true, caps));
}

PropClopenMap prop_clopen_bijection(const QuantumFrame& frame, std::size_t block) {
  const auto& s = frame.space();
  const auto& l = s.lattice();
  const Block& b = s.blocks()[block];
  const PointSet in_block = s.block_points(block);
  PropClopenMap map;
  map.block = block;
  for (Elem p : b.carrier) map.images.emplace_back(p, frame.prop_set(p) & in_block);

  for (std::size_t i = 0; i < map.images.size(); ++i) {
    for (std::size_t j = i + 1; j < map.images.size(); ++j) {
      if (map.images[i].second == map.images[j].second) {
        throw QctError(ErrorKind::BijectionFailure, "two propositions share a clopen",
                       "(" + l.name(map.images[i].first) + "," + l.name(map.images[j].first) + ")");
      }
    }
  }
  // U_c = B points whose theory avoids everything outside Th(c).
  for (auto c = in_block.find_first(); c != PointSet::npos; c = in_block.find_next(c)) {
    const auto th = s.theory(c);
    PointSet rebuilt = in_block;
    for (const auto& [p, img] : map.images) {
      if (!std::binary_search(th.begin(), th.end(), p)) rebuilt &= ~img;
    }
    if (rebuilt != s.basic_open(c)) {
      throw QctError(ErrorKind::BijectionFailure, "basic open not recovered from propositions",
                     s.point_label(c));
    }
  }
  return map;
}

}  // namespace qct
