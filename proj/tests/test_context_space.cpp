#include <algorithm>
#include <set>

#include "doctest.h"
#include "qct/context_space.hpp"
#include "qct/error.hpp"

using namespace qct;

namespace {

std::vector<OmlLattice> corpus() {
  return {make_boolean(2), make_boolean(3), make_mo(2), make_mo(3),
          make_greechie({{"a", "b", "c"}, {"c", "d", "e"}})};
}

std::size_t pt(const ContextSpace& s, const std::string& block, const std::string& gen) {
  return *s.find_point(*s.find_block(block), s.lattice().at(gen));
}

std::set<std::string> labels(const ContextSpace& s, const PointSet& set) {
  std::set<std::string> out;
  for (auto i = set.find_first(); i != PointSet::npos; i = set.find_next(i)) {
    out.insert(s.point_label(i));
  }
  return out;
}

bool subset(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("theories and compatibility filters in MO(2)") {
  auto l = make_mo(2);
  auto blocks = enumerate_blocks(l);
  const Block& ba = blocks[0];
  const Elem a = l.at("a"), ap = l.at("a'");
  CHECK(l.format(theory_of(l, ba, std::vector<Elem>{a})) == "{a,1}");
  CHECK(l.format(theory_of(l, ba, std::vector<Elem>{})) == "{1}");
  CHECK(l.format(theory_of(l, ba, std::vector<Elem>{a, ap})) == "{0,a,a',1}");
  CHECK(l.format(compat_filter(l, ba, std::vector<Elem>{a})) == "{a,1}");
  CHECK(compat_filter(l, ba, std::vector<Elem>{}) == ba.carrier);
  // Only 1 meets both a and a' above 0.
  CHECK(l.format(compat_filter(l, ba, std::vector<Elem>{a, ap})) == "{1}");
  CHECK(compat_filter(l, ba, std::vector<Elem>{l.bottom()}).empty());
  CHECK_THROWS_AS(theory_of(l, ba, std::vector<Elem>{l.at("b")}), QctError);
}

TEST_CASE("MO(2) canonical space") {
  ContextSpace s(make_mo(2));
  CHECK(s.size() == 8);
  CHECK(s.block_alias(0) == "Ba");
  CHECK(s.block_alias(1) == "Bb");
  CHECK(s.find_block("B2") == s.find_block("Bb"));
  const auto ca = pt(s, "Ba", "a");
  CHECK(labels(s, s.basic_open(ca)) == std::set<std::string>{"(Ba,1)", "(Ba,a)"});
  CHECK(labels(s, s.basic_open(pt(s, "Ba", "1"))) == std::set<std::string>{"(Ba,1)"});
  // The swap a <-> a' fixes Ba, so (Ba,a') joins through that automorphism.
  CHECK(labels(s, s.basis_extension(ca, 0)) ==
        std::set<std::string>{"(Ba,1)", "(Ba,a)", "(Ba,a')"});
  CHECK(labels(s, s.basis_extension(ca, 1)) ==
        std::set<std::string>{"(Bb,1)", "(Bb,b)", "(Bb,b')"});
  CHECK(labels(s, s.f_max(ca)) ==
        std::set<std::string>{"(Ba,1)", "(Ba,a)", "(Ba,a')", "(Bb,1)", "(Bb,b)", "(Bb,b')"});
  // Inconsistent context: every context of the target block qualifies.
  CHECK(s.basis_extension(pt(s, "Ba", "0"), 1) == s.block_points(1));
  // Empty premises: only the tautology theory in each block.
  CHECK(labels(s, s.f_max(pt(s, "Ba", "1"))) == std::set<std::string>{"(Ba,1)", "(Bb,1)"});
  CHECK(s.open_name(ca) == "U_Ba_a");
}

TEST_CASE("single block lattices have f_max = E(c, B)") {
  ContextSpace s(make_boolean(3));
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.f_max(i) == s.basis_extension(i, 0));
}

TEST_CASE("basis extension matches the literal subset condition") {
  for (const auto& l : corpus()) {
    ContextSpace s(l);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto th = s.theory(i);
      for (std::size_t b = 0; b < s.blocks().size(); ++b) {
        PointSet expected = s.empty_set();
        bool any = false;
        for (const auto& f : s.automorphisms()) {
          if (image(f, s.blocks()[s.points()[i].block].carrier) != s.blocks()[b].carrier) continue;
          any = true;
          const auto finv = inverse(f);
          for (std::size_t j = 0; j < s.size(); ++j) {
            if (s.points()[j].block != b) continue;
            std::vector<Elem> pulled = image(finv, s.theory(j));
            if (subset(pulled, th)) expected.set(j);
          }
        }
        if (any) {
          CHECK(s.basis_extension(i, b) == expected);
        } else {
          CHECK_THROWS_AS(s.basis_extension(i, b), QctError);
        }
      }
    }
  }
}

TEST_CASE("basic open invariants") {
  for (const auto& l : corpus()) {
    ContextSpace s(l);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s.basic_open(i).test(i));
      for (std::size_t j = 0; j < s.size(); ++j) {
        const bool same_block = s.points()[i].block == s.points()[j].block;
        const bool th_sub = same_block && subset(s.theory(j), s.theory(i));
        CHECK(s.basic_open(i).test(j) == th_sub);
        if (same_block) CHECK(th_sub == s.basic_open(j).is_subset_of(s.basic_open(i)));
      }
    }
    // The inconsistent point's open is the whole block.
    for (std::size_t b = 0; b < s.blocks().size(); ++b) {
      CHECK(s.basic_open(*s.find_point(b, l.bottom())) == s.block_points(b));
    }
  }
}

TEST_CASE("compatibility filters are upward closed; filters for atom generators") {
  for (const auto& l : corpus()) {
    ContextSpace s(l);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto f = s.compat(i);
      const auto& block = s.blocks()[s.points()[i].block];
      const Elem g = s.points()[i].generator;
      if (g == l.bottom()) {
        CHECK(f.empty());
        continue;
      }
      for (Elem x : f) {
        for (Elem y : block.carrier) {
          if (l.leq(x, y)) CHECK(std::binary_search(f.begin(), f.end(), y));
        }
      }
      const bool atom = std::binary_search(block.atoms.begin(), block.atoms.end(), g);
      if (atom) {
        for (Elem x : f) {
          for (Elem y : f) CHECK(std::binary_search(f.begin(), f.end(), l.meet(x, y)));
        }
      }
    }
  }
  // A non-atom generator gives a compatibility set that is not meet closed.
  ContextSpace s(make_boolean(2));
  const auto f = s.compat(*s.find_point(0, s.lattice().top()));
  const Elem a1 = s.lattice().at("a1"), a2 = s.lattice().at("a2");
  CHECK(std::binary_search(f.begin(), f.end(), a1));
  CHECK(std::binary_search(f.begin(), f.end(), a2));
  CHECK(!std::binary_search(f.begin(), f.end(), s.lattice().meet(a1, a2)));
}

TEST_CASE("accessibility chains grow to a fixpoint") {
  for (const auto& l : corpus()) {
    ContextSpace s(l);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t b = 0; b < s.blocks().size(); ++b) {
        auto levels = s.chain(i, b, s.size() + 1);
        for (std::size_t k = 1; k < levels.size(); ++k) {
          CHECK(levels[k - 1].is_subset_of(levels[k]));
        }
        CHECK(levels[s.size()] == levels[s.size() + 1]);
      }
    }
  }
  ContextSpace s(make_mo(2));
  const auto ca = pt(s, "Ba", "a");
  auto levels = s.chain(ca, 0, 1);
  // A_c in block Ba: theories inside F_c = {a, 1}.
  CHECK(labels(s, levels[1]) == std::set<std::string>{"(Ba,1)", "(Ba,a)"});
  CHECK(labels(s, s.immediately_accessible(ca)) ==
        std::set<std::string>{"(Ba,1)", "(Ba,a)", "(Bb,1)", "(Bb,b)", "(Bb,b')"});
}

TEST_CASE("stone checks on the corpus") {
  for (const auto& l : corpus()) {
    ContextSpace s(l);
    auto r = stone_check(s);
    CHECK(r.report.pass());
    CHECK(r.clopen_atoms == s.size());
  }
  ContextSpace mo2(make_mo(2));
  auto r = stone_check(mo2);
  CHECK(r.points == 8);
  CHECK(r.clopens == "256");
  ContextSpace b2(make_boolean(2));
  CHECK(b2.size() == 4);
  CHECK(stone_check(b2).clopens == "16");
}

TEST_CASE("raw contexts break Hausdorff") {
  ContextSpace raw(make_mo(2), false);
  CHECK(raw.size() == 14);
  auto r = stone_check(raw);
  CHECK(!r.report.pass());
  const auto* fail = r.report.first_failure();
  REQUIRE(fail != nullptr);
  CHECK(fail->check == "hausdorff");
  CHECK(fail->witness == "((Ba,{a}),(Ba,{a,1}))");
}

TEST_CASE("clopen algebra is a Boolean set algebra") {
  ContextSpace s(make_mo(2));
  PointSet u = s.basic_open(1), v = s.basic_open(5);
  CHECK(s.is_clopen(u | v));
  CHECK(s.is_clopen(u & v));
  CHECK(s.is_clopen(~u));
  CHECK(s.is_clopen(s.empty_set()));
  CHECK(s.is_clopen(s.full_set()));
}
