#include "slgen/lie/closure.hpp"

namespace slgen {

std::size_t closure_dimension_f2(const std::vector<BitMatrix>& gens, std::size_t stop_at, bool adjoin_identity) {
  if (gens.empty()) throw PreconditionError("closure: empty generator list");
  const unsigned n = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != n) throw MismatchError("closure: generators have different sizes");
    if (g.trace()) throw PreconditionError("closure: generator is not traceless");
  }
  BitSubspace space(std::size_t{n} * n);
  std::vector<BitMatrix> elements;
  if (adjoin_identity) space.insert(BitMatrix::identity(n).flatten());
  for (const auto& g : gens) {
    if (space.dim() >= stop_at) return space.dim();
    if (space.insert(g.flatten())) elements.push_back(g);
  }
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& g : gens) {
      if (space.dim() >= stop_at) return space.dim();
      auto b = bracket(elements[k], g);
      if (space.insert(b.flatten())) elements.push_back(std::move(b));
    }
  }
  return space.dim();
}

std::size_t closure_dimension(const std::vector<Matrix<GaloisField>>& gens, std::size_t stop_at, bool adjoin_identity) {
  validate_generators(gens);
  if (gens.front().ring().order() == 2 && gens.front().size() <= BitMatrix::kMaxSize) {
    std::vector<BitMatrix> packed;
    packed.reserve(gens.size());
    for (const auto& g : gens) packed.push_back(BitMatrix::from_matrix(g));
    return closure_dimension_f2(packed, stop_at, adjoin_identity);
  }
  return closure_dimension_generic(gens, stop_at, adjoin_identity);
}

}  // namespace slgen
