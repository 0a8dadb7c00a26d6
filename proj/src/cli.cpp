#include "qct/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qct/automorphism.hpp"
#include "qct/caps.hpp"
#include "qct/context_space.hpp"
#include "qct/duality.hpp"
#include "qct/error.hpp"
#include "qct/formula.hpp"
#include "qct/frame.hpp"
#include "qct/hilbert.hpp"
#include "qct/lattice_io.hpp"
#include "qct/oml.hpp"

namespace qct {

namespace {

using Json = nlohmann::ordered_json;

struct Context {
  std::string path;
  bool json = false;
  bool no_quotient = false;
  bool make_lattice = false;
  bool contexts = false;
  std::string chain;
  std::string formula;
  Caps caps;
};

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::InputError:
    case ErrorKind::ParseError:
    case ErrorKind::UnknownBlock:
    case ErrorKind::UnknownProposition:
    case ErrorKind::PropNotInBlock:
    case ErrorKind::SeedNotChain:
    case ErrorKind::SizeCapExceeded:
    case ErrorKind::ClosureCapExceeded: return true;
    default: return false;
  }
}

Json names(const OmlLattice& l, std::span<const Elem> elems) {
  Json out = Json::array();
  for (Elem e : elems) out.push_back(l.name(e));
  return out;
}

Json set_labels(const ContextSpace& s, const PointSet& set) {
  Json out = Json::array();
  for (auto i = set.find_first(); i != PointSet::npos; i = set.find_next(i)) out.push_back(s.point_label(i));
  return out;
}

Json records_json(const Report& report) {
  Json out = Json::array();
  for (const auto& r : report.records) {
    Json j = {{"check", r.check}, {"status", std::string(to_string(r.status))}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (!r.witness.empty()) j["witness"] = r.witness;
    out.push_back(std::move(j));
  }
  return out;
}

void print_records(std::ostream& out, const Report& report) {
  for (const auto& r : report.records) {
    out << "  " << r.check << ": " << to_string(r.status);
    if (!r.witness.empty()) out << " witness=" << r.witness;
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n";
  }
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

std::string pass_word(bool pass) { return pass ? "PASS" : "FAIL"; }

int cmd_validate(const Context& ctx, std::ostream& out) {
  const OmlLattice l = read_lattice(ctx.path);
  const auto blocks = enumerate_blocks(l);
  if (ctx.json) {
    emit(out, Json{{"command", "validate"},
                   {"status", "pass"},
                   {"elements", l.size()},
                   {"atoms", l.atoms().size()},
                   {"blocks", blocks.size()}});
  } else {
    out << "validate: PASS (elements=" << l.size() << ", atoms=" << l.atoms().size()
        << ", blocks=" << blocks.size() << ")\n";
  }
  return kExitOk;
}

int cmd_blocks(const Context& ctx, std::ostream& out) {
  const OmlLattice l = read_lattice(ctx.path);
  const auto blocks = enumerate_blocks(l);
  Json list = Json::array();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string label = "B" + std::to_string(b + 1);
    if (ctx.json) {
      list.push_back(Json{{"label", label},
                          {"elements", names(l, blocks[b].carrier)},
                          {"atoms", names(l, blocks[b].atoms)}});
    } else {
      out << label << " " << l.format(blocks[b].carrier) << " atoms=" << l.format(blocks[b].atoms)
          << "\n";
    }
  }
  if (ctx.json) {
    emit(out, Json{{"command", "blocks"}, {"count", blocks.size()}, {"blocks", list}});
  } else {
    out << "blocks: " << blocks.size() << "\n";
  }
  return kExitOk;
}

int cmd_construct(const Context& ctx, std::ostream& out) {
  const OmlLattice l = read_lattice(ctx.path);
  std::vector<Elem> seed;
  std::stringstream in(ctx.chain);
  for (std::string name; std::getline(in, name, ',');) {
    if (!name.empty()) seed.push_back(l.at(name));
  }
  const Chain chain = maximal_chain(l, seed);
  const auto central = centralizer(l, chain);
  const Block block = b_c_max(l, chain);
  const auto blocks = enumerate_blocks(l);
  const auto it = std::find(blocks.begin(), blocks.end(), block);
  const bool boolean = !boolean_violation(l, block.carrier).has_value();
  const bool pass = boolean && block.maximal && it != blocks.end();
  const std::string label = it == blocks.end() ? "" : "B" + std::to_string(it - blocks.begin() + 1);

  if (ctx.json) {
    emit(out, Json{{"command", "construct"},
                   {"status", pass ? "pass" : "fail"},
                   {"chain", names(l, chain.elements)},
                   {"centralizer", names(l, central)},
                   {"block", names(l, block.carrier)},
                   {"atoms", names(l, block.atoms)},
                   {"boolean", boolean},
                   {"maximal", block.maximal},
                   {"label", label}});
  } else {
    out << "chain:";
    for (std::size_t i = 0; i < chain.elements.size(); ++i) {
      out << (i ? " < " : " ") << l.name(chain.elements[i]);
    }
    out << "\ncentralizer: " << l.format(central) << "\n";
    out << "B_C^max: " << l.format(block.carrier) << " atoms=" << l.format(block.atoms) << "\n";
    out << "construct: " << pass_word(pass) << " (boolean=" << (boolean ? "yes" : "no")
        << ", maximal=" << (block.maximal ? "yes" : "no");
    if (!label.empty()) out << ", block=" << label;
    out << ")\n";
  }
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_hilbert(const Context& ctx, std::ostream& out) {
  const BasesFile file = read_bases(ctx.path, ctx.caps.hilbert_dim);
  Json bases = Json::array();
  bool pass = true;
  for (std::size_t i = 0; i < file.bases.size(); ++i) {
    const ProjectionBlock block = block_from_basis(file.bases[i]);
    const ProjectionBlock back = block_from_basis(basis_from_block(block));
    const bool round_trip = back.elements == block.elements;
    pass = pass && round_trip;
    if (ctx.json) {
      Json atoms = Json::array();
      for (const auto& a : block.atoms) atoms.push_back(Json(matrix_to_json(a)));
      bases.push_back(Json{{"index", i + 1}, {"round_trip", round_trip}, {"atoms", atoms}});
    } else {
      out << "basis " << i + 1 << ": " << block.atoms.size()
          << " atoms, pairwise orthogonal, sum = I, round trip " << (round_trip ? "ok" : "FAILED")
          << "\n";
    }
  }
  Json doc{{"command", "hilbert"}, {"dim", file.dim}, {"bases", bases}};
  if (ctx.make_lattice) {
    const ProjectionLattice pl = lattice_from_bases(file.bases, ctx.caps.closure_elements);
    const auto blocks = enumerate_blocks(pl.lattice);
    Json unitaries = Json::array();
    if (!ctx.json) {
      out << "lattice: " << pl.lattice.size() << " elements, " << blocks.size() << " blocks\n";
    }
    for (std::size_t u = 0; u < file.unitaries.size(); ++u) {
      const Matrix& m = file.unitaries[u];
      std::string result;
      try {
        const auto f = induced_automorphism(m, pl);
        bool hom = true;
        for (const auto& v : file.unitaries) hom = hom && homomorphism_holds(m, v, pl);
        result = automorphism_violation(pl.lattice, f).empty() && hom ? "ok" : "not an automorphism";
      } catch (const QctError& e) {
        result = std::string(to_string(e.kind()));
      }
      pass = pass && result == "ok";
      if (ctx.json) {
        unitaries.push_back(Json{{"index", u + 1}, {"induced", result}});
      } else {
        out << "unitary " << u + 1 << ": induced automorphism " << result << "\n";
      }
    }
    doc["lattice"] = lattice_to_json(pl.lattice);
    doc["blocks"] = blocks.size();
    doc["unitaries"] = unitaries;
  }
  doc["status"] = pass ? "pass" : "fail";
  if (ctx.json) {
    emit(out, doc);
  } else {
    out << "hilbert: " << pass_word(pass) << " (dim=" << file.dim << ", bases=" << file.bases.size()
        << ")\n";
  }
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_contexts(const Context& ctx, std::ostream& out) {
  const ContextSpace s(read_lattice(ctx.path), !ctx.no_quotient, ctx.caps);
  const auto& l = s.lattice();
  Json points = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto th = s.theory(i);
    if (ctx.json) {
      Json p{{"label", s.point_label(i)},
             {"block", s.block_alias(s.points()[i].block)},
             {"theory", names(l, th)},
             {"basic_open", set_labels(s, s.basic_open(i))}};
      if (s.quotient()) p["atom_name"] = s.open_name(i);
      points.push_back(std::move(p));
    } else {
      out << s.point_label(i) << " Th=" << l.format(th) << " U=" << s.format(s.basic_open(i));
      if (s.quotient()) out << " name=" << s.open_name(i);
      out << "\n";
    }
  }
  if (ctx.json) {
    Json blocks = Json::array();
    for (std::size_t b = 0; b < s.blocks().size(); ++b) {
      blocks.push_back(Json{{"label", s.block_label(b)}, {"alias", s.block_alias(b)}});
    }
    emit(out, Json{{"command", "contexts"},
                   {"quotient", s.quotient()},
                   {"blocks", blocks},
                   {"points", points},
                   {"clopen_atoms", s.clopen_atoms().size()}});
  } else {
    out << "contexts: " << s.size() << " points, " << s.clopen_atoms().size() << " clopen atoms\n";
  }
  return kExitOk;
}

int cmd_stone(const Context& ctx, std::ostream& out) {
  const ContextSpace s(read_lattice(ctx.path), !ctx.no_quotient, ctx.caps);
  const StoneReport r = stone_check(s);
  const bool pass = r.report.pass();
  if (ctx.json) {
    emit(out, Json{{"command", "stone"},
                   {"status", pass ? "pass" : "fail"},
                   {"quotient", s.quotient()},
                   {"points", r.points},
                   {"clopens", r.clopens},
                   {"records", records_json(r.report)}});
  } else {
    out << "stone: " << pass_word(pass) << " (points=" << r.points << ", clopens=" << r.clopens
        << ")\n";
    print_records(out, r.report);
  }
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_frame(const Context& ctx, std::ostream& out) {
  const QuantumFrame frame = build_frame(read_lattice(ctx.path), ctx.caps);
  const auto& s = frame.space();
  const Report r = frame.verify();
  Json edges = Json::array();
  for (std::size_t k = 0; k < frame.indices().size(); ++k) {
    for (std::size_t c = 0; c < s.size(); ++c) {
      const PointSet& succ = frame.successors(k, c);
      if (succ.none()) continue;
      if (ctx.json) {
        edges.push_back(Json{{"index", frame.index_label(k)},
                             {"from", s.point_label(c)},
                             {"to", set_labels(s, succ)}});
      } else {
        out << frame.index_label(k) << " " << s.point_label(c) << " -> " << s.format(succ) << "\n";
      }
    }
  }
  if (ctx.json) {
    emit(out, Json{{"command", "frame"},
                   {"status", r.pass() ? "pass" : "fail"},
                   {"points", s.size()},
                   {"indices", frame.indices().size()},
                   {"edges", frame.edge_count()},
                   {"relations", edges},
                   {"records", records_json(r)}});
  } else {
    out << "frame: " << pass_word(r.pass()) << " (points=" << s.size()
        << ", indices=" << frame.indices().size() << ", edges=" << frame.edge_count() << ")\n";
    print_records(out, r);
  }
  return r.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_eval(const Context& ctx, std::ostream& out) {
  const FormulaPtr f = parse_formula(ctx.formula);
  const QuantumFrame frame = build_frame(read_lattice(ctx.path), ctx.caps);
  const auto& s = frame.space();
  const PointSet result = eval(frame, *f);
  if (ctx.json) {
    emit(out, Json{{"command", "eval"},
                   {"formula", print_formula(*f)},
                   {"count", result.count()},
                   {"points", set_labels(s, result)}});
  } else {
    for (auto i = result.find_first(); i != PointSet::npos; i = result.find_next(i)) {
      out << s.point_label(i) << "\n";
    }
    out << "eval: " << result.count() << " of " << s.size() << " points satisfy "
        << print_formula(*f) << "\n";
  }
  return kExitOk;
}

int cmd_duality(const Context& ctx, std::ostream& out) {
  const QuantumFrame frame = build_frame(read_lattice(ctx.path), ctx.caps);
  const Report r = verify_duality(frame);
  const std::size_t n = frame.space().size();
  if (ctx.json) {
    emit(out, Json{{"command", "duality"},
                   {"status", r.pass() ? "pass" : "fail"},
                   {"points", n},
                   {"indices", frame.indices().size()},
                   {"records", records_json(r)}});
  } else {
    out << "duality: " << pass_word(r.pass()) << " (points=" << n
        << ", indices=" << frame.indices().size() << ")\n";
    print_records(out, r);
  }
  return r.pass() ? kExitOk : kExitCheckFailed;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

int cmd_export_dot(const Context& ctx, std::ostream& out) {
  const OmlLattice l = read_lattice(ctx.path);
  std::ostringstream dot;
  if (!ctx.contexts) {
    dot << "digraph hasse {\n  rankdir=BT;\n";
    for (Elem x = 0; x < l.size(); ++x) dot << "  " << quoted(l.name(x)) << ";\n";
    for (const auto& [x, y] : l.covers()) {
      dot << "  " << quoted(l.name(x)) << " -> " << quoted(l.name(y)) << ";\n";
    }
    dot << "}\n";
  } else {
    const QuantumFrame frame = build_frame(l, ctx.caps);
    const auto& s = frame.space();
    dot << "digraph contexts {\n";
    for (std::size_t c = 0; c < s.size(); ++c) dot << "  " << quoted(s.point_label(c)) << ";\n";
    for (std::size_t k = 0; k < frame.indices().size(); ++k) {
      for (std::size_t c = 0; c < s.size(); ++c) {
        const PointSet& succ = frame.successors(k, c);
        for (auto d = succ.find_first(); d != PointSet::npos; d = succ.find_next(d)) {
          dot << "  " << quoted(s.point_label(c)) << " -> " << quoted(s.point_label(d))
              << " [label=" << quoted(frame.index_label(k)) << "];\n";
        }
      }
    }
    dot << "}\n";
  }
  if (ctx.json) {
    emit(out, Json{{"command", "export-dot"},
                   {"graph", ctx.contexts ? "contexts" : "hasse"},
                   {"dot", dot.str()}});
  } else {
    out << dot.str();
  }
  return kExitOk;
}

void report_error(const QctError& e, const Context& ctx, const std::string& command,
                  std::ostream& out, std::ostream& err) {
  const bool input = is_input_error(e.kind());
  if (ctx.json) {
    Json doc{{"command", command},
             {"status", input ? "error" : "fail"},
             {"error", std::string(to_string(e.kind()))},
             {"message", e.what()}};
    if (!e.witness().empty()) doc["witness"] = e.witness();
    emit(out, doc);
  } else {
    std::ostream& line = input ? err : out;
    line << to_string(e.kind());
    if (!e.witness().empty()) line << " witness=" << e.witness();
    line << "\n";
  }
  err << "error: " << e.what() << "\n";
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err << "  " << ctx.formula << "\n  " << std::string(pe->position(), ' ') << "^\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.caps = caps_from_env();
  std::size_t cap = 0;

  CLI::App app{"Finite quantum contextual frames: lattices, context spaces, frames, duality"};
  app.name("qct");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "Machine-readable output");
  app.add_option("--cap", cap, "Element cap for automorphism search and projection closure")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));

  std::vector<std::pair<CLI::App*, std::function<int(const Context&, std::ostream&)>>> commands;
  auto add = [&](const char* name, const char* help, const char* what, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option(what, ctx.path, "Input file")->required();
    commands.emplace_back(sub, fn);
    return sub;
  };
  add("validate", "Check the orthomodular lattice axioms", "lattice", cmd_validate);
  add("blocks", "List maximal Boolean sublattices", "lattice", cmd_blocks);
  add("construct", "Build B_C^max from a maximal chain", "lattice", cmd_construct)
      ->add_option("--chain", ctx.chain, "Comma-separated seed chain, e.g. a,b");
  add("hilbert", "Check exact bases and their projection blocks", "bases", cmd_hilbert)
      ->add_flag("--make-lattice", ctx.make_lattice, "Close the bases into a projection lattice");
  add("contexts", "List context points and basic opens", "lattice", cmd_contexts)
      ->add_flag("--no-quotient", ctx.no_quotient, "Use raw (B, P) contexts");
  add("stone", "Check the Stone space properties", "lattice", cmd_stone)
      ->add_flag("--no-quotient", ctx.no_quotient, "Use raw (B, P) contexts");
  add("frame", "Build the quantum frame and list its relations", "lattice", cmd_frame);
  add("eval", "Evaluate a formula on the quantum frame", "lattice", cmd_eval)
      ->add_option("-f,--formula", ctx.formula, "Formula")
      ->required();
  add("duality", "Verify the frame against its double dual", "lattice", cmd_duality);
  add("export-dot", "Hasse diagram (or context graph) in DOT", "lattice", cmd_export_dot)
      ->add_flag("--contexts", ctx.contexts, "Export the accessibility relations instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* shown = &app;
    for (auto* sub : app.get_subcommands()) shown = sub;
    out << shown->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (cap > 0) {
    ctx.caps.automorphism_elements = cap;
    ctx.caps.closure_elements = cap;
  }

  for (const auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      return fn(ctx, out);
    } catch (const QctError& e) {
      report_error(e, ctx, sub->get_name(), out, err);
      return is_input_error(e.kind()) ? kExitInputError : kExitCheckFailed;
    } catch (const nlohmann::json::exception& e) {
      report_error(QctError(ErrorKind::InputError, e.what()), ctx, sub->get_name(), out, err);
      return kExitInputError;
    }
  }
  return kExitInputError;
}

}  // namespace qct
