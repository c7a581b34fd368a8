#pragma once

#include <cstdint>
#include <vector>

#include "slgen/constructions/sets.hpp"
#include "slgen/ff/galois_field.hpp"

namespace slgen {

/// Strictly increasing nonnegative integers starting at 0.
struct SidonSet {
  std::vector<std::int64_t> elems;
};

/// Sums a_i + a_j over i < j pairwise distinct.
bool is_distinct_sum_set(const SidonSet& s);
/// Sums a_i + a_j over i <= j pairwise distinct (no 3-term progressions
/// either). Every builder below produces this stronger form.
bool is_sidon(const SidonSet& s);

/// n + 1 elements, 0 first. Each new element is the least integer keeping
/// all sums a_i + a_j, i <= j, distinct.
SidonSet sidon_greedy(unsigned n);

/// n + 1 elements a_k = 2 p k + (k^2 mod p), k = 0..n, where p is the least
/// prime >= n + 1. Every element is below 2 p^2.
SidonSet sidon_erdos_turan(unsigned n);

/// {a_1, ..., a_n, -(a_1 + ... + a_n)} as integers.
std::vector<std::int64_t> sidon_diagonal(const SidonSet& s);

/// sidon_diagonal reduced into the field, rechecked there. Throws
/// ConsistencyLost when the reduction breaks consistency and
/// PreconditionError in characteristic 2.
DiagonalSet<GaloisField> consistent_from_sidon(const SidonSet& s, const GaloisFieldPtr& field);

}  // namespace slgen
