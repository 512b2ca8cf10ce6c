#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qschur {

/// Real matrix with a text label for every row and column.
struct LabeledMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  Eigen::MatrixXd values;
};

enum class Storage { dense, sparse };

/// Serialized matrix plus the metadata needed to reproduce it.
struct MatrixDocument {
  std::string format;  // what the matrix is, e.g. "schur_transform"
  int n = 0;
  int d = 0;
  std::string q;  // QParam::tag()
  double tolerance = 0.0;
  std::string basis_order = "v1";
  Storage storage = Storage::dense;
  LabeledMatrix matrix;
};

/// JSON text. Doubles are written so that reading them back is bit-exact.
std::string write_document(const MatrixDocument& doc);
/// Throws std::invalid_argument on malformed input or label/shape mismatch.
MatrixDocument read_document(std::string_view text);

}  // namespace qschur
