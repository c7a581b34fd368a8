#include "slgen/poly/phi.hpp"

#include "slgen/poly/algorithms.hpp"

namespace slgen {

FqPoly frobenius_min_poly(const GaloisFieldPtr& field, unsigned n) {
  return FqPoly::monomial(field, field->one(), n) - FqPoly::constant(field, field->one());
}

PhiFactorization phi_factorization(const GaloisFieldPtr& field, unsigned n) {
  if (n == 0) throw PreconditionError("phi_factorization(): n must be >= 1");
  FqPoly phi(field, std::vector<GaloisField::value_type>(n, field->one()));
  PhiFactorization out{n, phi, {}};
  if (n == 1) return out;
  for (auto& f : factor(phi)) {
    auto [cof, rem] = divmod(phi, f.poly);
    if (!rem.is_zero()) throw InternalError("factor does not divide Phi");
    out.factors.push_back({f.poly, f.multiplicity, cof});
  }
  return out;
}

std::vector<FqPoly> divisors_of_xn_minus_1(const GaloisFieldPtr& field, unsigned n) {
  std::vector<FqPoly> divs{FqPoly::constant(field, field->one())};
  for (const auto& f : factor(frobenius_min_poly(field, n))) {
    std::vector<FqPoly> next;
    for (const auto& d : divs) {
      auto acc = d;
      next.push_back(acc);
      for (unsigned e = 1; e <= f.multiplicity; ++e) {
        acc = acc * f.poly;
        next.push_back(acc);
      }
    }
    divs = std::move(next);
  }
  return divs;
}

}  // namespace slgen
