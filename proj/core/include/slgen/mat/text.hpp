#pragma once

#include <string>

#include <string_view>

#include "slgen/ff/galois_field.hpp"
#include "slgen/mat/matrix.hpp"

namespace slgen {

/// Rows separated by ';', entries by ','. Entries use the field value syntax
/// of parse_field_value. Every row must have the same length.
Matrix<GaloisField> parse_matrix(const GaloisFieldPtr& field, std::string_view text);

/// Inverse of parse_matrix.
std::string format_matrix(const Matrix<GaloisField>& m);

}  // namespace slgen
