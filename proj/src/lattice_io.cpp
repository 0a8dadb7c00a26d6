#include "qct/lattice_io.hpp"

#include <fstream>
#include <sstream>

#include "qct/error.hpp"

namespace qct {

namespace {

std::string as_name(const nlohmann::json& v, const char* where) {
  if (!v.is_string()) {
    throw QctError(ErrorKind::InputError,
                   std::string("expected element name in '") + where + "'");
  }
  return v.get<std::string>();
}

std::vector<std::pair<std::string, std::string>> pairs(const nlohmann::json& v,
                                                        const char* where) {
  if (!v.is_array()) {
    throw QctError(ErrorKind::InputError, std::string("'") + where + "' must be an array");
  }
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : v) {
    if (!p.is_array() || p.size() != 2) {
      throw QctError(ErrorKind::InputError,
                     std::string("'") + where + "' entries must be [x, y] pairs");
    }
    out.emplace_back(as_name(p[0], where), as_name(p[1], where));
  }
  return out;
}

}  // namespace

RawLattice raw_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw QctError(ErrorKind::InputError, "lattice file must be an object");
  if (doc.contains("greechie")) {
    const auto& g = doc["greechie"];
    if (!g.is_array()) throw QctError(ErrorKind::InputError, "'greechie' must be an array");
    std::vector<std::vector<std::string>> blocks;
    for (const auto& b : g) {
      if (!b.is_array()) {
        throw QctError(ErrorKind::InputError, "each greechie block must be an array");
      }
      auto& atoms = blocks.emplace_back();
      for (const auto& a : b) atoms.push_back(as_name(a, "greechie"));
    }
    return raw_greechie(blocks);
  }
  RawLattice raw;
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw QctError(ErrorKind::InputError, "missing 'elements' array");
  }
  for (const auto& e : doc["elements"]) raw.elements.push_back(as_name(e, "elements"));
  if (doc.contains("covers") == doc.contains("leq")) {
    throw QctError(ErrorKind::InputError, "give exactly one of 'covers' or 'leq'");
  }
  raw.relation_is_covers = doc.contains("covers");
  raw.relation = pairs(doc[raw.relation_is_covers ? "covers" : "leq"],
                       raw.relation_is_covers ? "covers" : "leq");
  if (!doc.contains("ortho") || !doc["ortho"].is_object()) {
    throw QctError(ErrorKind::InputError, "missing 'ortho' object");
  }
  for (const auto& [k, v] : doc["ortho"].items()) raw.ortho.emplace_back(k, as_name(v, "ortho"));
  if (doc.contains("bottom")) raw.bottom = as_name(doc["bottom"], "bottom");
  if (doc.contains("top")) raw.top = as_name(doc["top"], "top");
  return raw;
}

OmlLattice lattice_from_json(const nlohmann::json& doc) {
  const bool pasted = doc.is_object() && doc.contains("greechie");
  RawLattice raw = raw_from_json(doc);
  if (!pasted) return validate_oml(raw);
  try {
    return validate_oml(raw);
  } catch (const QctError& e) {
    if (e.kind() == ErrorKind::InputError) throw;
    throw QctError(ErrorKind::PastingInvalid, e.what(), e.witness());
  }
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw QctError(ErrorKind::InputError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw QctError(ErrorKind::InputError,
                   path.string() + ": JSON syntax error at byte " + std::to_string(e.byte),
                   "byte " + std::to_string(e.byte));
  }
}

OmlLattice read_lattice(const std::filesystem::path& path) {
  return lattice_from_json(read_json_file(path));
}

nlohmann::ordered_json lattice_to_json(const OmlLattice& lattice) {
  nlohmann::ordered_json out;
  out["elements"] = lattice.names();
  auto covers = nlohmann::ordered_json::array();
  for (auto [x, y] : lattice.covers()) covers.push_back({lattice.name(x), lattice.name(y)});
  out["covers"] = covers;
  nlohmann::ordered_json ortho = nlohmann::ordered_json::object();
  for (Elem x = 0; x < lattice.size(); ++x) ortho[lattice.name(x)] = lattice.name(lattice.ortho(x));
  out["ortho"] = ortho;
  out["bottom"] = lattice.name(lattice.bottom());
  out["top"] = lattice.name(lattice.top());
  return out;
}

}  // namespace qct
