#include "slgen/poly/text.hpp"

#include <cctype>
#include <charconv>

namespace slgen {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_integer(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == sep && depth == 0)) {
      out.emplace_back(trim(text.substr(start, i - start)));
      start = i + 1;
      continue;
    }
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth < 0) throw ParseError("unbalanced ')' in '" + std::string(text) + "'");
  }
  if (depth != 0) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
  return out;
}

GaloisField::value_type parse_field_value(const GaloisField& field, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty field value");
  if (text.front() != '(') return field.from_int(parse_integer(text));
  if (text.back() != ')') throw ParseError("unterminated tuple '" + std::string(text) + "'");
  const auto parts = split_top_level(text.substr(1, text.size() - 2), ',');
  if (parts.size() > field.degree())
    throw ParseError("tuple '" + std::string(text) + "' has more than " + std::to_string(field.degree()) + " coefficients");
  std::vector<std::uint32_t> digits;
  const auto p = static_cast<std::int64_t>(field.characteristic());
  for (const auto& part : parts) {
    auto c = parse_integer(part) % p;
    digits.push_back(static_cast<std::uint32_t>(c < 0 ? c + p : c));
  }
  return field.from_digits(digits);
}

Polynomial<GaloisField> parse_polynomial(const GaloisFieldPtr& field, std::string_view text) {
  std::vector<GaloisField::value_type> coeffs;
  for (const auto& part : split_top_level(text, ',')) coeffs.push_back(parse_field_value(*field, part));
  return Polynomial<GaloisField>(field, std::move(coeffs));
}

std::string format_polynomial(const Polynomial<GaloisField>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) s += ',';
    s += f.ring().format(f.coeffs()[i]);
  }
  return s;
}

}  // namespace slgen
