#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qct/automorphism.hpp"
#include "qct/context_space.hpp"
#include "qct/duality.hpp"
#include "qct/error.hpp"
#include "qct/formula.hpp"
#include "qct/frame.hpp"
#include "qct/hilbert.hpp"
#include "qct/lattice_io.hpp"
#include "qct/oml.hpp"

using namespace qct;

namespace {

// Empty string on success, otherwise the reason.
using Check = std::function<std::string()>;

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  Check run;
};

OmlLattice greechie2() { return make_greechie({{"a", "b", "c"}, {"c", "d", "e"}}); }

std::vector<OmlLattice> corpus() { return {make_boolean(2), make_mo(2), make_mo(3), greechie2()}; }

std::string axiom_gate() {
  std::vector<std::pair<std::string, std::function<OmlLattice()>>> good = {
      {"boolean(1)", [] { return make_boolean(1); }}, {"boolean(2)", [] { return make_boolean(2); }},
      {"boolean(3)", [] { return make_boolean(3); }}, {"MO(2)", [] { return make_mo(2); }},
      {"MO(3)", [] { return make_mo(3); }},           {"MO(4)", [] { return make_mo(4); }},
      {"greechie", greechie2},
  };
  for (const auto& [name, make] : good) {
    try {
      make();
    } catch (const QctError& e) {
      return name + " rejected: " + e.what();
    }
  }
  try {
    read_lattice(std::string(QCT_DATA) + "/o6.json");
  } catch (const QctError& e) {
    if (e.kind() != ErrorKind::NotOrthomodular) return std::string("O6 rejected as ") + e.what();
    if (e.witness() != "(a,b)") return "O6 witness " + e.witness();
    return {};
  }
  return "O6 accepted";
}

std::string pipeline() {
  for (const auto& l : {make_mo(2), make_mo(3), greechie2()}) {
    const auto blocks = enumerate_blocks(l);
    for (const auto& chain : enumerate_maximal_chains(l)) {
      const Block b = b_c_max(l, chain);
      const std::string where = l.format(chain.elements);
      if (auto v = boolean_violation(l, b.carrier)) return "not Boolean at chain " + where + ": " + *v;
      if (!b.maximal) return "not maximal at chain " + where;
      if (std::find(blocks.begin(), blocks.end(), b) == blocks.end()) return "not a block at chain " + where;
    }
  }
  return {};
}

std::string basis_round_trip() {
  for (const char* file : {"bases_dim2.json", "bases_dim3.json"}) {
    const BasesFile bf = read_bases(std::string(QCT_DATA) + "/" + file);
    for (std::size_t i = 0; i < bf.bases.size(); ++i) {
      const std::string where = std::string(file) + " basis " + std::to_string(i + 1);
      const ProjectionBlock block = block_from_basis(bf.bases[i]);
      if (block_from_basis(basis_from_block(block)).elements != block.elements) return where + ": round trip";
      Matrix sum = Matrix::zero(bf.dim);
      for (std::size_t a = 0; a < block.atoms.size(); ++a) {
        sum = sum + block.atoms[a];
        for (std::size_t b = 0; b < block.atoms.size(); ++b) {
          if (a != b && !(block.atoms[a] * block.atoms[b] == Matrix::zero(bf.dim))) {
            return where + ": P_iP_j != 0";
          }
        }
      }
      if (!(sum == Matrix::identity(bf.dim))) return where + ": sum != I";
    }
  }
  return {};
}

std::string group_check() {
  std::vector<std::pair<std::string, OmlLattice>> ls = {
      {"boolean(2)", make_boolean(2)}, {"MO(2)", make_mo(2)}, {"MO(3)", make_mo(3)}};
  for (const auto& [name, l] : ls) {
    const auto group = enumerate_ortho_automorphisms(l);
    const auto r = check_group(group);
    if (!r.pass) return name + ": " + r.failed_check + " " + r.witness;
    if (name == "MO(2)" && group.size() != 8) return "MO(2) has " + std::to_string(group.size());
  }
  return {};
}

std::string stone_suite() {
  for (const auto& l : corpus()) {
    const ContextSpace s(l);
    const auto r = stone_check(s);
    for (const char* check : {"compact_subcover", "zero_dimensional", "points_closed", "hausdorff"}) {
      bool seen = false;
      for (const auto& rec : r.report.records) {
        if (rec.check != check) continue;
        seen = true;
        if (rec.status != Status::Pass) return std::string(check) + " fails: " + rec.witness;
      }
      if (!seen) return std::string(check) + " missing";
    }
  }
  const ContextSpace raw(make_mo(2), false);
  for (const auto& rec : stone_check(raw).report.records) {
    if (rec.check != "hausdorff") continue;
    if (rec.status != Status::Fail) return "raw MO(2) is Hausdorff";
    if (rec.witness != "((Ba,{a}),(Ba,{a,1}))") return "raw witness " + rec.witness;
    return {};
  }
  return "raw hausdorff record missing";
}

PointSet from_mask(std::size_t n, std::uint64_t m) {
  PointSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m >> i & 1u) s.set(i);
  }
  return s;
}

std::string modal_distribution() {
  auto check = [](const QuantumFrame& f, const PointSet& w, const PointSet& v, std::size_t k) {
    return (f.box(k, w) & f.box(k, v)) == f.box(k, w & v);
  };
  const auto b2 = build_frame(make_boolean(2));
  const std::size_t n2 = b2.space().size();
  for (std::size_t k = 0; k < b2.indices().size(); ++k) {
    for (std::uint64_t a = 0; a < (1u << n2); ++a) {
      for (std::uint64_t b = 0; b < (1u << n2); ++b) {
        if (!check(b2, from_mask(n2, a), from_mask(n2, b), k)) return "boolean(2) " + b2.index_label(k);
      }
    }
  }
  const auto mo2 = build_frame(make_mo(2));
  const std::size_t n = mo2.space().size();
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
  for (std::size_t k = 0; k < mo2.indices().size(); ++k) {
    for (int t = 0; t < 500; ++t) {
      if (!check(mo2, from_mask(n, pick(rng)), from_mask(n, pick(rng)), k)) return "MO(2) " + mo2.index_label(k);
    }
  }
  return {};
}

std::string clopen_correspondence() {
  for (const auto& l : {make_boolean(2), make_boolean(3), make_mo(2), make_mo(3), greechie2()}) {
    const auto f = build_frame(l);
    for (std::size_t b = 0; b < f.space().blocks().size(); ++b) {
      try {
        prop_clopen_bijection(f, b);
      } catch (const QctError& e) {
        return f.space().block_alias(b) + ": " + e.what() + " " + e.witness();
      }
    }
  }
  return {};
}

std::string duality() {
  for (const auto& l : corpus()) {
    const auto frame = build_frame(l);
    const ThetaMap theta(frame);
    const Report r = verify_duality(theta, frame);
    if (const auto* f = r.first_failure()) return f->check + " " + f->witness;
    if (theta.ultrafilters().size() != frame.space().size()) return "ultrafilter count";
  }
  const auto frame = build_frame(make_mo(2));
  const ThetaMap theta(frame);
  const std::size_t from = 0;
  const std::size_t k = *frame.find_index(0, frame.space().lattice().top());
  const std::size_t to = frame.successors(k, from).find_first();
  const std::string edge =
      frame.index_label(k) + " " + frame.space().point_label(from) + "->" + frame.space().point_label(to);
  const Report cut = verify_duality(theta, frame.with_edge_removed(k, from, to));
  const auto* f = cut.first_failure();
  if (!f) return "negative control passed";
  if (f->check != "relations_preserved" || f->witness != edge) return "negative control witness " + f->witness;
  return {};
}

std::string edge_cases() {
  for (const auto& l : {make_boolean(2), make_boolean(3), make_mo(2), make_mo(3), greechie2()}) {
    const auto frame = build_frame(l);
    const auto& s = frame.space();
    const ThetaMap theta(frame);
    std::size_t seen = 0;
    for (std::size_t c = 0; c < s.size(); ++c) {
      const Elem g = s.points()[c].generator;
      if (g != s.lattice().top() && g != s.lattice().bottom()) continue;
      ++seen;
      std::string why;
      if (!is_ultrafilter(theta.algebra(), theta.ultrafilters()[theta.forward(c)].members, &why)) {
        return s.point_label(c) + ": " + why;
      }
    }
    if (seen != 2 * s.blocks().size()) return "edge-case contexts missing";
  }
  return {};
}

std::vector<std::pair<std::string, std::string>> rows(const char* file) {
  std::ifstream in(std::string(QCT_TEST_DATA) + "/" + file);
  std::vector<std::pair<std::string, std::string>> out;
  for (std::string line; std::getline(in, line);) {
    if (line.starts_with("#")) continue;
    const auto tab = line.find('\t');
    if (tab != std::string::npos) out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return out;
}

std::string parser() {
  const auto golden = rows("formulas_golden.txt");
  if (golden.size() != 30) return "golden corpus has " + std::to_string(golden.size());
  for (const auto& [input, printed] : golden) {
    const auto tree = parse_formula(input);
    const std::string text = print_formula(*tree);
    if (text != printed || !same_tree(*parse_formula(text), *tree)) return "round trip: " + input;
  }
  const auto bad = rows("formulas_malformed.txt");
  if (bad.size() != 10) return "malformed corpus has " + std::to_string(bad.size());
  for (const auto& [input, pos] : bad) {
    try {
      parse_formula(input);
      return "accepted: " + input;
    } catch (const ParseError& e) {
      if (e.position() != std::stoul(pos)) return "position " + std::to_string(e.position()) + ": " + input;
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "axiom gate", 1, axiom_gate},
      {2, "chain to maximal Boolean sublattice", 5, pipeline},
      {3, "basis/sublattice round trip", 1, basis_round_trip},
      {4, "ortho-automorphism group", 5, group_check},
      {5, "Stone suite", 10, stone_suite},
      {6, "modal distribution", 30, modal_distribution},
      {7, "clopen/proposition correspondence", 5, clopen_correspondence},
      {8, "duality", 120, duality},
      {9, "edge-case contexts", 10, edge_cases},
      {10, "formula parser", 1, parser},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.run();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && secs > c.limit_s) reason = "over time limit";
    failed += !reason.empty();
    std::printf("criterion %2d %s  %s (%.3f s, limit %g s)%s%s\n", c.id, reason.empty() ? "PASS" : "FAIL",
                c.name, secs, c.limit_s, reason.empty() ? "" : ": ", reason.c_str());
  }
  return failed ? 1 : 0;
}
