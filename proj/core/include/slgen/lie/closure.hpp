#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "slgen/error.hpp"
#include "slgen/ff/galois_field.hpp"
#include "slgen/lie/bits.hpp"
#include "slgen/lie/subspace.hpp"
#include "slgen/mat/matrix.hpp"

namespace slgen {

inline constexpr std::size_t kNoStop = std::numeric_limits<std::size_t>::max();

/// Checks the closure preconditions: nonempty, square, one size, one field,
/// every generator traceless.
template <Field F>
void validate_generators(const std::vector<Matrix<F>>& gens) {
  if (gens.empty()) throw PreconditionError("closure: empty generator list");
  const std::size_t n = gens.front().size();
  for (const auto& g : gens) {
    require_same_owner(gens.front().ring_ptr().get(), g.ring_ptr().get(), "closure generators");
    if (g.size() != n) throw MismatchError("closure: generators have different sizes");
    if (!g.ring().is_zero(g.trace())) throw PreconditionError("closure: generator is not traceless");
  }
}

/// Span of a generating set closed under the bracket, with the left-normed
/// monomials that were inserted, in insertion order.
template <Field F>
struct Closure {
  Subspace<F> space;
  std::vector<Matrix<F>> elements;
};

/// Worklist closure. Every inserted element is a left-normed monomial
/// [g_i1, ..., g_ik]; it is bracketed on the right with each generator, FIFO.
/// That is enough: [m, g] for any m in the span is a combination of brackets
/// already queued. Stops early once the dimension reaches `stop_at`. With
/// `adjoin_identity` the scalar matrices are put in the span first.
template <Field F>
Closure<F> close(const std::vector<Matrix<F>>& gens, std::size_t stop_at = kNoStop, bool adjoin_identity = false) {
  validate_generators(gens);
  const std::size_t n = gens.front().size();
  const auto& ring = gens.front().ring_ptr();
  Closure<F> c{Subspace<F>(ring, n * n), {}};
  if (adjoin_identity) c.space.insert(Matrix<F>::identity(ring, n).data());
  for (const auto& g : gens) {
    if (c.space.dim() >= stop_at) return c;
    if (c.space.insert(g.data())) c.elements.push_back(g);
  }
  for (std::size_t k = 0; k < c.elements.size(); ++k) {
    for (const auto& g : gens) {
      if (c.space.dim() >= stop_at) return c;
      auto b = bracket(c.elements[k], g);
      if (c.space.insert(b.data())) c.elements.push_back(std::move(b));
    }
  }
  return c;
}

template <Field F>
std::size_t closure_dimension_generic(const std::vector<Matrix<F>>& gens, std::size_t stop_at = kNoStop,
                                      bool adjoin_identity = false) {
  return close(gens, stop_at, adjoin_identity).space.dim();
}

/// Same algorithm on word-packed F_2 matrices.
std::size_t closure_dimension_f2(const std::vector<BitMatrix>& gens, std::size_t stop_at = kNoStop,
                                 bool adjoin_identity = false);

/// Uses the packed path over F_2 and the dense path otherwise.
std::size_t closure_dimension(const std::vector<Matrix<GaloisField>>& gens, std::size_t stop_at = kNoStop,
                              bool adjoin_identity = false);

}  // namespace slgen
