#ifndef PFK3_LATTICE_IO_HPP
#define PFK3_LATTICE_IO_HPP

// JSON form of a GLattice:
//   {"label": "...", "gram": [[...], ...], "action": [[...], ...]}

#include "pfk3/lattice.hpp"

#include <json.hpp>

#include <string>

namespace pfk3 {

nlohmann::ordered_json lattice_to_json(const GLattice& lattice);

/// Throws Error on missing fields, ragged rows or non-integer entries.
GLattice lattice_from_json(const nlohmann::json& j);

/// Reads and parses a lattice file; throws Error on I/O or parse failure.
GLattice read_lattice_file(const std::string& path);

}  // namespace pfk3

#endif  // PFK3_LATTICE_IO_HPP
