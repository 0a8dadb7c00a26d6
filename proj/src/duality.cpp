#include "qct/duality.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "qct/error.hpp"

namespace qct {

Mask to_mask(const PointSet& s) {
  Mask m = 0;
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) m |= Mask{1} << i;
  return m;
}

PointSet to_point_set(Mask m, std::size_t n) {
  PointSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m >> i & 1u) s.set(i);
  }
  return s;
}

namespace {

std::string mask_string(Mask m) {
  std::string out = "{";
  for (std::size_t i = 0; m >> i; ++i) {
    if (!(m >> i & 1u)) continue;
    if (out.size() > 1) out += ",";
    out += std::to_string(i);
  }
  return out + "}";
}

}  // namespace

DualAlgebra::DualAlgebra(const QuantumFrame& frame) {
  const auto& s = frame.space();
  points_ = s.size();
  const std::size_t cap = std::min<std::size_t>(s.caps().dual_points, 32);
  if (points_ > cap) {
    throw QctError(ErrorKind::SizeCapExceeded,
                   "dual algebra over " + std::to_string(points_) + " points exceeds the cap of " +
                       std::to_string(cap),
                   std::to_string(points_));
  }
  full_ = points_ == 32 ? ~Mask{0} : (Mask{1} << points_) - 1;

  for (const auto& a : s.clopen_atoms()) atoms_.push_back(to_mask(a));
  std::sort(atoms_.begin(), atoms_.end(),
            [](Mask x, Mask y) { return std::countr_zero(x) < std::countr_zero(y); });
  Mask cover = 0;
  for (Mask a : atoms_) {
    if (a == 0 || (cover & a)) {
      throw QctError(ErrorKind::ClosureFailure, "clopen atoms are not a partition",
                     s.format(to_point_set(a, points_)));
    }
    cover |= a;
  }
  if (cover != full_) {
    throw QctError(ErrorKind::ClosureFailure, "clopen atoms do not cover the space",
                   s.format(to_point_set(full_ & ~cover, points_)));
  }

  const std::size_t n_atoms = atoms_.size();
  carrier_.reserve(std::size_t{1} << n_atoms);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n_atoms); ++pick) {
    Mask m = 0;
    for (std::size_t i = 0; i < n_atoms; ++i) {
      if (pick >> i & 1u) m |= atoms_[i];
    }
    carrier_.push_back(m);
  }
  std::sort(carrier_.begin(), carrier_.end());
  powerset_ = points_ < 32 && carrier_.size() == (std::size_t{1} << points_);

  auto closure_failure = [&](const std::string& what, Mask m) {
    throw QctError(ErrorKind::ClosureFailure, what, s.format(to_point_set(m, points_)));
  };
  for (std::size_t c = 0; c < points_; ++c) {
    const Mask u = to_mask(s.basic_open(c));
    if (!contains(u)) closure_failure("basic open outside the algebra", u);
  }
  if (carrier_.size() <= 4096) {
    for (Mask a : carrier_) {
      if (!contains(full_ & ~a)) closure_failure("complement outside the algebra", a);
      for (Mask b : carrier_) {
        if (!contains(a | b)) closure_failure("union outside the algebra", a | b);
        if (!contains(a & b)) closure_failure("intersection outside the algebra", a & b);
      }
    }
  } else {
    for (Mask a : carrier_) {
      if (!contains(full_ & ~a)) closure_failure("complement outside the algebra", a);
    }
  }

  succ_.assign(frame.indices().size(), std::vector<Mask>(points_, 0));
  for (std::size_t k = 0; k < succ_.size(); ++k) {
    for (std::size_t c = 0; c < points_; ++c) succ_[k][c] = to_mask(frame.successors(k, c));
    for (Mask a : carrier_) {
      const Mask b = box(k, a);
      if (!contains(b)) {
        throw QctError(ErrorKind::ClosureFailure, "box " + frame.index_label(k) + " leaves the algebra",
                       s.format(to_point_set(a, points_)));
      }
    }
  }
}

std::optional<std::size_t> DualAlgebra::index_of(Mask m) const {
  if (m & ~full_) return std::nullopt;
  if (powerset_) return m;
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), m);
  if (it == carrier_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - carrier_.begin());
}

Mask DualAlgebra::box(std::size_t k, Mask m) const {
  Mask out = 0;
  for (std::size_t c = 0; c < points_; ++c) {
    if ((succ_[k][c] & ~m) == 0) out |= Mask{1} << c;
  }
  return out;
}

MemberSet principal_filter(const DualAlgebra& alg, Mask m) {
  MemberSet out(alg.size());
  for (std::size_t i = 0; i < alg.size(); ++i) {
    if ((alg.carrier()[i] & m) == m) out.set(i);
  }
  return out;
}

bool is_ultrafilter(const DualAlgebra& alg, const MemberSet& members, std::string* witness) {
  auto fail = [&](std::string w) {
    if (witness) *witness = std::move(w);
    return false;
  };
  const auto& carrier = alg.carrier();
  if (members.size() != carrier.size()) return fail("size");
  if (!members.test(*alg.index_of(alg.full()))) return fail("nonempty: full set missing");
  if (members.test(*alg.index_of(0))) return fail("proper: {} is a member");
  Mask meet = alg.full();
  for (auto i = members.find_first(); i != MemberSet::npos; i = members.find_next(i)) {
    meet &= carrier[i];
    for (Mask a : alg.atoms()) {
      if (!members.test(*alg.index_of(carrier[i] | a))) {
        return fail("upward: " + mask_string(carrier[i]) + " < " + mask_string(carrier[i] | a));
      }
    }
  }
  // Upward closed and finite: meet closed iff the meet of all members is one.
  if (!members.test(*alg.index_of(meet))) return fail("meet: " + mask_string(meet));
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (members.test(i) == members.test(*alg.index_of(alg.full() & ~carrier[i]))) {
      return fail("prime: " + mask_string(carrier[i]));
    }
  }
  return true;
}

std::vector<Ultrafilter> ultrafilters(const DualAlgebra& alg) {
  std::vector<Ultrafilter> out;
  for (Mask a : alg.atoms()) {
    Ultrafilter f{principal_filter(alg, a), a};
    std::string w;
    if (!is_ultrafilter(alg, f.members, &w)) {
      throw QctError(ErrorKind::NotUltrafilter, "principal filter at " + mask_string(a), w);
    }
    out.push_back(std::move(f));
  }
  return out;
}

ThetaMap::ThetaMap(const QuantumFrame& frame)
    : frame_(frame), alg_(frame_), ultra_(qct::ultrafilters(alg_)) {
  const auto& s = frame_.space();
  const auto& l = s.lattice();
  const std::size_t n = s.size();
  for (Elem p = 0; p < l.size(); ++p) prop_masks_.push_back(to_mask(frame_.prop_set(p)));

  auto find_ultra = [&](Mask m) -> std::optional<std::size_t> {
    for (std::size_t f = 0; f < ultra_.size(); ++f) {
      if (ultra_[f].atom == m) return f;
    }
    return std::nullopt;
  };

  std::size_t literal_ok = 0;
  std::string literal_witness;
  for (std::size_t c = 0; c < n; ++c) {
    const Point& pt = s.points()[c];
    Mask literal = to_mask(s.basic_open(c));
    if (pt.generator != l.bottom()) {
      for (std::size_t b = 0; b < s.blocks().size(); ++b) {
        const std::size_t k = *frame_.find_index(b, pt.generator);
        literal &= alg_.box(k, alg_.successors(k, c));
      }
    }
    Mask repaired = literal;
    for (Elem p : s.theory(c)) repaired &= prop_masks_[p];
    literal_meet_.push_back(literal);
    meet_.push_back(repaired);

    if (find_ultra(literal)) {
      ++literal_ok;
    } else if (literal_witness.empty()) {
      literal_witness = s.point_label(c);
    }
    auto f = find_ultra(repaired);
    if (!f) {
      throw QctError(ErrorKind::NotUltrafilter,
                     repaired == 0 ? "filter of a context is improper"
                                   : "filter of a context has several ultrafilter extensions",
                     s.point_label(c));
    }
    forward_.push_back(*f);
  }
  audit_.add("literal_filter_lemma", Status::Info,
             "filter from U_c and modal sets alone is an ultrafilter for " +
                 std::to_string(literal_ok) + " of " + std::to_string(n) + " contexts",
             literal_witness);

  std::size_t modal_changed = 0;
  std::string modal_witness;
  for (std::size_t f = 0; f < ultra_.size(); ++f) {
    const Mask atom = ultra_[f].atom;
    std::set<std::size_t> blocks;
    for (std::size_t x = 0; x < n; ++x) {
      const Mask u = to_mask(s.basic_open(x));
      if ((atom & u) == atom) blocks.insert(s.points()[x].block);
    }
    if (blocks.size() != 1) {
      std::string w = "(";
      for (std::size_t b : blocks) w += (w.size() > 1 ? "," : "") + s.block_alias(b);
      throw QctError(ErrorKind::NoCanonicalBlock,
                     blocks.empty() ? "no basic open in the ultrafilter"
                                    : "basic opens of the ultrafilter span several blocks",
                     w + ")");
    }
    const std::size_t bf = *blocks.begin();
    Elem g = l.top();
    for (Elem p : s.blocks()[bf].carrier) {
      if ((atom & prop_masks_[p]) == atom) g = l.meet(g, p);
    }
    backward_.push_back(*s.find_point(bf, g));

    // Literal modal step: Φ(p) for every □_{(B_i,p)} ω_p ∈ f with B_i ≠ B_f.
    Elem widened = g;
    std::string gained;
    for (std::size_t k = 0; k < frame_.indices().size(); ++k) {
      const auto [bi, p] = frame_.indices()[k];
      if (bi == bf || !s.blocks()[bi].contains(p)) continue;
      if ((atom & alg_.box(k, prop_masks_[p])) != atom) continue;
      for (std::size_t a = 0; a < s.automorphisms().size(); ++a) {
        if (s.block_image(a, bi) != bf) continue;
        const Elem q = s.automorphisms()[a](p);
        if (l.meet(widened, q) != widened && gained.empty()) gained = l.name(q);
        widened = l.meet(widened, q);
      }
    }
    if (widened != g) {
      ++modal_changed;
      if (modal_witness.empty()) modal_witness = s.point_label(backward_.back()) + " gains " + gained;
    }
  }
  audit_.add("modal_inclusion", Status::Info,
             "translating propositions of boxed sets into B_f moves the recovered context for " +
                 std::to_string(modal_changed) + " of " + std::to_string(ultra_.size()) +
                 " ultrafilters; backward uses direct inclusion only",
             modal_witness);
}

namespace {

std::string point_pair(const ContextSpace& s, std::size_t a, std::size_t b) {
  return "(" + s.point_label(a) + "," + s.point_label(b) + ")";
}

}  // namespace

Report verify_duality(const ThetaMap& theta, const QuantumFrame& frame) {
  if (frame.space_ptr() != theta.frame().space_ptr()) {
    throw QctError(ErrorKind::InputError, "frame and theta map use different context spaces");
  }
  Report report;
  const auto& s = frame.space();
  const auto& alg = theta.algebra();
  const auto& ultra = theta.ultrafilters();
  const std::size_t n = s.size();
  const std::size_t m = ultra.size();
  const std::size_t indices = frame.indices().size();

  {
    std::string w;
    for (std::size_t f = 0; f < m && w.empty(); ++f) {
      if (!is_ultrafilter(alg, ultra[f].members, &w)) w = std::to_string(f) + " " + w;
    }
    report.add("ultrafilters", w.empty() && m == alg.atoms().size() ? Status::Pass : Status::Fail,
               std::to_string(m) + " ultrafilters over a carrier of " + std::to_string(alg.size()) +
                   " sets",
               w);
  }

  std::string w;
  for (std::size_t a = 0; a < n && w.empty(); ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (theta.forward(a) == theta.forward(b)) {
        w = point_pair(s, a, b);
        break;
      }
    }
  }
  report.add("theta_injective", w.empty() ? Status::Pass : Status::Fail,
             "distinct contexts map to distinct ultrafilters", w);

  w.clear();
  std::vector<bool> hit(m, false);
  for (std::size_t c = 0; c < n; ++c) hit[theta.forward(c)] = true;
  for (std::size_t f = 0; f < m; ++f) {
    if (!hit[f]) {
      w = "ultrafilter at " + s.format(to_point_set(ultra[f].atom, n));
      break;
    }
  }
  report.add("theta_surjective", w.empty() ? Status::Pass : Status::Fail,
             std::to_string(n) + " contexts onto " + std::to_string(m) + " ultrafilters", w);

  w.clear();
  for (std::size_t c = 0; c < n && w.empty(); ++c) {
    if (theta.backward(theta.forward(c)) != c) w = s.point_label(c);
  }
  for (std::size_t f = 0; f < m && w.empty(); ++f) {
    if (theta.forward(theta.backward(f)) != f) w = "ultrafilter at " + s.format(to_point_set(ultra[f].atom, n));
  }
  report.add("theta_inverse", w.empty() ? Status::Pass : Status::Fail,
             "backward undoes forward on both sides", w);

  for (auto [name, gen] : {std::pair{"empty_p_contexts", s.lattice().top()},
                           std::pair{"inconsistent_p_contexts", s.lattice().bottom()}}) {
    w.clear();
    std::size_t count = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (s.points()[c].generator != gen) continue;
      ++count;
      std::string why;
      if (!is_ultrafilter(alg, ultra[theta.forward(c)].members, &why) && w.empty()) {
        w = s.point_label(c) + " " + why;
      }
    }
    report.add(name, w.empty() ? Status::Pass : Status::Fail,
               std::to_string(count) + " contexts map to valid ultrafilters", w);
  }

  // Double-dual relation: f R' f' iff {U : □U ∈ f} ⊆ f'.
  std::vector<std::vector<Mask>> succ(indices, std::vector<Mask>(n));
  std::vector<std::vector<Mask>> dual_succ(indices, std::vector<Mask>(m, 0));
  for (std::size_t k = 0; k < indices; ++k) {
    for (std::size_t c = 0; c < n; ++c) succ[k][c] = to_mask(frame.successors(k, c));
    std::vector<std::size_t> box_at(alg.size());
    for (std::size_t i = 0; i < alg.size(); ++i) box_at[i] = *alg.index_of(alg.box(k, alg.carrier()[i]));
    for (std::size_t f = 0; f < m; ++f) {
      MemberSet pre(alg.size());
      for (std::size_t i = 0; i < alg.size(); ++i) {
        if (ultra[f].members.test(box_at[i])) pre.set(i);
      }
      for (std::size_t g = 0; g < m; ++g) {
        if (pre.is_subset_of(ultra[g].members)) dual_succ[k][f] |= Mask{1} << g;
      }
    }
  }

  w.clear();
  std::string detail = "(c,c') in R iff (Θc,Θc') in R' for every index";
  for (std::size_t k = 0; k < indices && w.empty(); ++k) {
    for (std::size_t c = 0; c < n && w.empty(); ++c) {
      for (std::size_t d = 0; d < n; ++d) {
        const bool in_frame = succ[k][c] >> d & 1u;
        const bool in_dual = dual_succ[k][theta.forward(c)] >> theta.forward(d) & 1u;
        if (in_frame != in_dual) {
          w = frame.index_label(k) + " " + s.point_label(c) + "->" + s.point_label(d);
          detail = in_frame ? "edge has no double-dual counterpart" : "double-dual edge missing from the frame";
          break;
        }
      }
    }
  }
  report.add("relations_preserved", w.empty() ? Status::Pass : Status::Fail, detail, w);

  auto image = [&](Mask set) {
    Mask out = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (set >> c & 1u) out |= Mask{1} << theta.forward(c);
    }
    return out;
  };
  const Mask all_ultra = m == 32 ? ~Mask{0} : (Mask{1} << m) - 1;

  w.clear();
  for (std::size_t i = 0; i < alg.size() && w.empty(); ++i) {
    const Mask set = alg.carrier()[i];
    Mask valuation = 0;
    for (std::size_t f = 0; f < m; ++f) {
      if (ultra[f].members.test(i)) valuation |= Mask{1} << f;
    }
    Mask joined = 0;
    for (Mask a : alg.atoms()) {
      if ((a & set) == a) joined |= image(a);
    }
    if (image(set) != valuation || joined != valuation ||
        image(alg.full() & ~set) != (all_ultra & ~valuation)) {
      w = s.format(to_point_set(set, n));
    }
  }
  for (std::size_t a = 0; a < alg.atoms().size() && w.empty(); ++a) {
    if (std::popcount(image(alg.atoms()[a])) != 1) w = s.format(to_point_set(alg.atoms()[a], n));
  }
  report.add("valuation_isomorphism", w.empty() ? Status::Pass : Status::Fail,
             "S -> {f : S in f} agrees with the Θ-image and is a Boolean isomorphism", w);

  w.clear();
  for (std::size_t k = 0; k < indices && w.empty(); ++k) {
    for (Mask set : alg.carrier()) {
      Mask box = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if ((succ[k][c] & ~set) == 0) box |= Mask{1} << c;
      }
      const Mask img = image(set);
      Mask dual_box = 0;
      for (std::size_t f = 0; f < m; ++f) {
        if ((dual_succ[k][f] & ~img) == 0) dual_box |= Mask{1} << f;
      }
      if (image(box) != dual_box) {
        w = frame.index_label(k) + " " + s.format(to_point_set(set, n));
        break;
      }
    }
  }
  report.add("modal_commutation", w.empty() ? Status::Pass : Status::Fail,
             "Θ(□S) equals the double-dual box of Θ(S)", w);

  for (const auto& r : theta.audit().records) report.records.push_back(r);
  return report;
}

Report verify_duality(const QuantumFrame& frame) {
  try {
    ThetaMap theta(frame);
    return verify_duality(theta, frame);
  } catch (const QctError& e) {
    if (e.kind() != ErrorKind::NotUltrafilter && e.kind() != ErrorKind::NoCanonicalBlock) throw;
    Report report;
    report.add("theta", Status::Fail, e.what(), e.witness());
    return report;
  }
}

}  // namespace qct
