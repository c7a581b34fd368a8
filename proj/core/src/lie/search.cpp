#include "slgen/lie/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "slgen/lie/closure.hpp"

namespace slgen {

Matrix<GaloisField> random_traceless(const GaloisFieldPtr& field, unsigned n, Rng& rng) {
  std::vector<GaloisField::value_type> d(std::size_t{n} * n);
  auto trace = field->zero();
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == n - 1 && j == n - 1) continue;
      d[i * n + j] = field->random(rng);
      if (i == j) trace = field->add(trace, d[i * n + j]);
    }
  d.back() = field->neg(trace);
  return Matrix<GaloisField>(field, n, n, std::move(d));
}

namespace {

struct Trial {
  Matrix<GaloisField> x, y;
};

Trial draw(const GaloisFieldPtr& field, unsigned n, std::uint64_t seed, std::uint64_t index) {
  auto rng = trial_rng(seed, index);
  auto x = random_traceless(field, n, rng);
  auto y = random_traceless(field, n, rng);
  return {std::move(x), std::move(y)};
}

bool generates(const Trial& t, Target target) {
  const auto& f = t.x.ring();
  const auto n = static_cast<unsigned>(t.x.size());
  const bool quotient = target == Target::psl && center_in_sl(n, f.characteristic());
  const std::size_t full = std::size_t{n} * n - 1;
  return closure_dimension({t.x, t.y}, full, quotient) == full;
}

}  // namespace

SearchOutcome random_pair_search(unsigned n, const GaloisFieldPtr& field, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads, Target target) {
  if (n < 2) throw PreconditionError("random_pair_search(): n must be >= 2");
  if (trials == 0) throw PreconditionError("random_pair_search(): trials must be >= 1");
  threads = std::max(1U, threads);

  std::atomic<std::uint64_t> best{trials};
  auto worker = [&](unsigned t) {
    for (std::uint64_t i = t; i < trials && i < best.load(std::memory_order_relaxed); i += threads) {
      if (!generates(draw(field, n, seed, i), target)) continue;
      auto cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
      return;
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  SearchOutcome out;
  const std::uint64_t found = best.load();
  if (found == trials) {
    out.trials_used = trials;
    return out;
  }
  out.trials_used = found + 1;
  auto t = draw(field, n, seed, found);
  auto cert = is_generating({t.x, t.y}, target, "random-search", seed);
  if (!cert.verdict) throw InternalError("random_pair_search(): winning pair failed re-certification");
  cert.trial = found;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace slgen
