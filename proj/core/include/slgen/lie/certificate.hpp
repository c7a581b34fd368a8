#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slgen/ff/galois_field.hpp"
#include "slgen/mat/matrix.hpp"

namespace slgen {

enum class Target { sl, psl };

std::string to_string(Target t);
/// "sl" or "psl"; throws ParseError otherwise.
Target parse_target(const std::string& s);

/// True when the scalar matrices lie in sl_n, i.e. p divides n.
bool center_in_sl(unsigned n, std::uint64_t p);

/// n^2 - 1 for sl, and for psl when p does not divide n; n^2 - 2 for psl
/// when p | n (the quotient by the scalars).
std::size_t expected_dimension(unsigned n, std::uint64_t p, Target target);

/// Outcome of a generation check. For psl with p | n the identity is
/// adjoined before closing and closure_dim is reported modulo the scalars.
struct GenPairCertificate {
  std::string field_spec;
  unsigned n = 0;
  std::vector<Matrix<GaloisField>> generators;
  Target target = Target::sl;
  std::size_t closure_dim = 0;
  std::size_t expected_dim = 0;
  bool verdict = false;
  std::string strategy;
  std::optional<std::uint64_t> seed;
  /// Index of the winning trial for randomized searches.
  std::optional<std::uint64_t> trial;
};

GenPairCertificate is_generating(const std::vector<Matrix<GaloisField>>& gens, Target target = Target::sl,
                                 std::string strategy = "given", std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace slgen
