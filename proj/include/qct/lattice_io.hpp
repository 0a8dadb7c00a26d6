#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qct/oml.hpp"

namespace qct {

/// Reads either the explicit form
///   {"elements": [...], "covers"|"leq": [[x,y],...], "ortho": {x: y},
///    "bottom": "0", "top": "1"}
/// or {"greechie": [[atoms...], ...]} and validates it.
OmlLattice lattice_from_json(const nlohmann::json& doc);
RawLattice raw_from_json(const nlohmann::json& doc);
OmlLattice read_lattice(const std::filesystem::path& path);

/// Explicit form with the cover relation; round-trips through lattice_from_json.
nlohmann::ordered_json lattice_to_json(const OmlLattice& lattice);

/// Parses a file into JSON, reporting syntax errors as InputError with the
/// byte offset.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace qct
