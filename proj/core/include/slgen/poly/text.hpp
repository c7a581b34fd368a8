#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slgen/ff/galois_field.hpp"
#include "slgen/poly/polynomial.hpp"

namespace slgen {

/// Splits on `sep` outside parentheses and trims blanks from each piece.
std::vector<std::string> split_top_level(std::string_view text, char sep);

/// An integer (reduced mod p) or a "(c0,c1,...)" coefficient tuple over F_p.
GaloisField::value_type parse_field_value(const GaloisField& field, std::string_view text);

/// Comma-separated ascending coefficients, e.g. "-1,-1,-1,1,0,-1,0,1".
Polynomial<GaloisField> parse_polynomial(const GaloisFieldPtr& field, std::string_view text);

/// Inverse of parse_polynomial; the zero polynomial prints as "0".
std::string format_polynomial(const Polynomial<GaloisField>& f);

}  // namespace slgen
