#include "qschur/labeled_matrix.hpp"

#include <stdexcept>

#include "json.hpp"

namespace qschur {

using json = nlohmann::ordered_json;

std::string write_document(const MatrixDocument& doc) {
  const auto& m = doc.matrix;
  if (static_cast<Eigen::Index>(m.row_labels.size()) != m.values.rows() ||
      static_cast<Eigen::Index>(m.col_labels.size()) != m.values.cols())
    throw std::invalid_argument("label counts do not match the matrix dimensions");
  json j;
  j["format"] = doc.format;
  j["n"] = doc.n;
  j["d"] = doc.d;
  j["q"] = doc.q;
  j["tolerance"] = doc.tolerance;
  j["basis_order"] = doc.basis_order;
  j["rows"] = m.values.rows();
  j["cols"] = m.values.cols();
  j["row_labels"] = m.row_labels;
  j["col_labels"] = m.col_labels;
  json entries = json::array();
  if (doc.storage == Storage::dense) {
    j["storage"] = "dense";
    for (Eigen::Index r = 0; r < m.values.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.values.cols(); ++c) row.push_back(m.values(r, c));
      entries.push_back(std::move(row));
    }
  } else {
    j["storage"] = "sparse";
    for (Eigen::Index r = 0; r < m.values.rows(); ++r)
      for (Eigen::Index c = 0; c < m.values.cols(); ++c)
        if (m.values(r, c) != 0.0) entries.push_back(json::array({r, c, m.values(r, c)}));
  }
  j["entries"] = std::move(entries);
  return j.dump(1) + "\n";
}

MatrixDocument read_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed matrix document: ") + e.what());
  }
  try {
    MatrixDocument doc;
    doc.format = j.at("format").get<std::string>();
    doc.n = j.at("n").get<int>();
    doc.d = j.at("d").get<int>();
    doc.q = j.at("q").get<std::string>();
    doc.tolerance = j.at("tolerance").get<double>();
    doc.basis_order = j.at("basis_order").get<std::string>();
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    doc.matrix.row_labels = j.at("row_labels").get<std::vector<std::string>>();
    doc.matrix.col_labels = j.at("col_labels").get<std::vector<std::string>>();
    if (static_cast<Eigen::Index>(doc.matrix.row_labels.size()) != rows ||
        static_cast<Eigen::Index>(doc.matrix.col_labels.size()) != cols)
      throw std::invalid_argument("label counts do not match rows/cols");
    doc.matrix.values = Eigen::MatrixXd::Zero(rows, cols);
    const auto storage = j.at("storage").get<std::string>();
    const auto& entries = j.at("entries");
    if (storage == "dense") {
      doc.storage = Storage::dense;
      if (static_cast<Eigen::Index>(entries.size()) != rows)
        throw std::invalid_argument("dense entries have the wrong row count");
      for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& row = entries.at(r);
        if (static_cast<Eigen::Index>(row.size()) != cols)
          throw std::invalid_argument("dense entries have the wrong column count");
        for (Eigen::Index c = 0; c < cols; ++c) doc.matrix.values(r, c) = row.at(c).get<double>();
      }
    } else if (storage == "sparse") {
      doc.storage = Storage::sparse;
      for (const auto& e : entries) {
        const auto r = e.at(0).get<Eigen::Index>();
        const auto c = e.at(1).get<Eigen::Index>();
        if (r < 0 || r >= rows || c < 0 || c >= cols)
          throw std::invalid_argument("sparse entry out of range");
        doc.matrix.values(r, c) = e.at(2).get<double>();
      }
    } else {
      throw std::invalid_argument("unknown storage '" + storage + "'");
    }
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed matrix document: ") + e.what());
  }
}

}  // namespace qschur
