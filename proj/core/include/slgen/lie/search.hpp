#pragma once

#include <cstdint>
#include <optional>

#include "slgen/ff/galois_field.hpp"
#include "slgen/lie/certificate.hpp"
#include "slgen/mat/matrix.hpp"
#include "slgen/random.hpp"

namespace slgen {

/// Uniform element of sl_n(F_q): all entries uniform except the last
/// diagonal one, which absorbs the trace.
Matrix<GaloisField> random_traceless(const GaloisFieldPtr& field, unsigned n, Rng& rng);

struct SearchOutcome {
  std::optional<GenPairCertificate> certificate;
  /// Trials examined up to and including the winning one, or the budget.
  std::uint64_t trials_used = 0;
};

/// Samples random traceless pairs, trial i drawing from trial_rng(seed, i),
/// and reports the lowest-index generating pair. With threads > 1 trials
/// run concurrently; the reported pair is the same for any thread count.
SearchOutcome random_pair_search(unsigned n, const GaloisFieldPtr& field, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads = 1, Target target = Target::sl);

}  // namespace slgen
