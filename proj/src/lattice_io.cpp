#include "pfk3/lattice_io.hpp"

#include <fstream>

namespace pfk3 {

namespace {

nlohmann::ordered_json matrix_to_json(const IntMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_int64(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw Error(std::string("lattice field '") + field + "' must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  IntMatrix m(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows)
      throw Error(std::string("lattice field '") + field + "' must be a square matrix");
    for (Eigen::Index c = 0; c < rows; ++c) {
      const auto& entry = row[static_cast<std::size_t>(c)];
      if (!entry.is_number_integer())
        throw Error(std::string("lattice field '") + field + "' has a non-integer entry");
      m(i, c) = Integer(entry.get<long long>());
    }
  }
  return m;
}

}  // namespace

nlohmann::ordered_json lattice_to_json(const GLattice& lattice) {
  nlohmann::ordered_json j;
  j["label"] = lattice.label;
  j["gram"] = matrix_to_json(lattice.gram);
  j["action"] = matrix_to_json(lattice.action);
  return j;
}

GLattice lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("gram") || !j.contains("action"))
    throw Error("lattice JSON needs 'gram' and 'action'");
  GLattice out;
  out.gram = matrix_from_json(j.at("gram"), "gram");
  out.action = matrix_from_json(j.at("action"), "action");
  if (out.gram.rows() != out.action.rows()) throw Error("gram and action have different sizes");
  out.label = j.value("label", std::string("lattice"));
  return out;
}

GLattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lattice file '" + path + "'");
  try {
    return lattice_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error("cannot parse lattice file '" + path + "': " + e.what());
  }
}

}  // namespace pfk3
