#include "slgen/mat/text.hpp"

#include "slgen/poly/text.hpp"

namespace slgen {

Matrix<GaloisField> parse_matrix(const GaloisFieldPtr& field, std::string_view text) {
  std::vector<GaloisField::value_type> data;
  std::size_t cols = 0, rows = 0;
  for (const auto& row : split_top_level(text, ';')) {
    if (row.empty()) continue;  // tolerate a trailing ';'
    const auto entries = split_top_level(row, ',');
    if (rows == 0) cols = entries.size();
    if (entries.size() != cols) throw ParseError("matrix rows have different lengths");
    for (const auto& e : entries) data.push_back(parse_field_value(*field, e));
    ++rows;
  }
  if (rows == 0) throw ParseError("empty matrix");
  return Matrix<GaloisField>(field, rows, cols, std::move(data));
}

std::string format_matrix(const Matrix<GaloisField>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      s += m.ring().format(m(i, j));
    }
  }
  return s;
}

}  // namespace slgen
