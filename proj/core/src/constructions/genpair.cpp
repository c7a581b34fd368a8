#include "slgen/constructions/genpair.hpp"

#include <cstdlib>

#include "slgen/constructions/frobenius.hpp"
#include "slgen/constructions/sidon.hpp"
#include "slgen/mat/constructors.hpp"

namespace slgen {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::consistent: return "consistent";
    case Strategy::sidon: return "sidon";
    case Strategy::normal: return "normal";
    case Strategy::sharply_traceless: return "sharply-traceless";
    case Strategy::automatic: return "auto";
  }
  throw InternalError("unknown strategy");
}

Strategy parse_strategy(const std::string& s) {
  for (auto v : {Strategy::consistent, Strategy::sidon, Strategy::normal, Strategy::sharply_traceless,
                 Strategy::automatic})
    if (to_string(v) == s) return v;
  throw ParseError("unknown strategy '" + s + "'");
}

namespace {

GenPairCertificate certify(const std::vector<Matrix<GaloisField>>& pair, std::string strategy) {
  auto cert = is_generating(pair, Target::sl, std::move(strategy));
  if (!cert.verdict)
    throw InternalError("construction '" + cert.strategy + "' produced a non-generating pair (closure dim " +
                        std::to_string(cert.closure_dim) + ")");
  return cert;
}

}  // namespace

GenPairCertificate genpair_from_consistent(const DiagonalSet<GaloisField>& d, std::string strategy) {
  if (d.values.size() < 2) throw PreconditionError("genpair_from_consistent(): need n >= 2");
  if (!d.consistent) throw PreconditionError("genpair_from_consistent(): diagonal set is not consistent");
  if (!d.sum_zero) throw PreconditionError("genpair_from_consistent(): diagonal entries must sum to zero");
  return certify({diag(d.field, d.values), one_matrix(d.field, d.values.size())}, std::move(strategy));
}

Matrix<GaloisField> trace_row_matrix(const TowerField& tower, const TowerField::value_type& alpha) {
  const auto& f = tower.base();
  const unsigned n = tower.degree();
  Matrix<GaloisField> m = -Matrix<GaloisField>::identity(tower.base_ptr(), n);
  auto power = tower.one();
  std::vector<GaloisField::value_type> data = m.data();
  for (unsigned j = 0; j < n; ++j) {
    data[j] = f.add(data[j], tower.trace(power));
    power = tower.mul(power, alpha);
  }
  return Matrix<GaloisField>(tower.base_ptr(), n, n, std::move(data));
}

GenPairCertificate companion_genpair(const TowerField& tower, const TowerField::value_type& alpha,
                                     std::string strategy) {
  const unsigned n = tower.degree();
  if (n < 2) throw PreconditionError("companion_genpair(): degree must be >= 2");
  if (!tower.base().is_zero(tower.trace(alpha)))
    throw PreconditionError("companion_genpair(): the roots must sum to zero");
  const auto roots = check_consistent(tower.shared_from_this(), tower.conjugates(alpha));
  if (!roots.consistent) throw RootsNotConsistent("companion_genpair(): the conjugates do not form a consistent set");
  const auto f = conjugate_polynomial(tower, alpha);
  return certify({companion(f), trace_row_matrix(tower, alpha)}, std::move(strategy));
}

GenPairCertificate companion_genpair(const FqPoly& f) {
  if (f.degree() < 2 || !f.is_monic()) throw PreconditionError("companion_genpair(): f must be monic of degree >= 2");
  if (!f.ring().is_zero(f.coeff(static_cast<std::size_t>(f.degree() - 1))))
    throw PreconditionError("companion_genpair(): f must have zero x^(n-1) coefficient");
  const auto tower = TowerField::create(f.ring_ptr(), f);
  return companion_genpair(*tower, tower->generator());
}

DiagonalSet<GaloisField> consistent_diagonal(const GaloisFieldPtr& field, unsigned n) {
  if (n < 2) throw PreconditionError("consistent_diagonal(): need n >= 2");
  const auto& f = *field;
  std::vector<GaloisField::value_type> v;
  auto sum = f.zero();
  if (f.degree() >= n - 1) {
    for (unsigned i = 0; i + 1 < n; ++i) {
      std::vector<std::uint32_t> digits(i + 1, 0);
      digits[i] = 1;
      v.push_back(f.from_digits(digits));
    }
  } else {
    auto two_power = f.one();
    for (unsigned i = 0; i + 1 < n; ++i) {
      v.push_back(two_power);
      two_power = f.add(two_power, two_power);
    }
  }
  for (auto a : v) sum = f.add(sum, a);
  v.push_back(f.neg(sum));
  auto d = check_consistent(field, std::move(v));
  if (!d.consistent) throw ConsistencyLost("consistent_diagonal(): set is not consistent over " + f.spec());
  return d;
}

Strategy auto_strategy(unsigned n, const GaloisFieldPtr& field) {
  const auto p = field->characteristic();
  std::int64_t bound = 0;
  for (auto a : sidon_diagonal(sidon_greedy(n - 1))) bound = std::max(bound, std::abs(a));
  if (p > 4 * static_cast<std::uint64_t>(bound)) return Strategy::sidon;
  return n % p != 0 ? Strategy::normal : Strategy::sharply_traceless;
}

GenPairCertificate construct_genpair(Strategy strategy, unsigned n, const GaloisFieldPtr& field, std::uint64_t seed,
                                     const std::optional<FqPoly>& top_modulus) {
  const auto p = field->characteristic();
  if (n < 2) throw PreconditionError("genpair: n must be >= 2");
  if (p == 2)
    throw EvenCharacteristic("no consistent sets exist in characteristic 2; use the random search (search-f2)");
  if (n == 3 && p == 3)
    throw ExceptionalCase("sl_3 in characteristic 3 is not 2-generated; see the psl3 identity (identity --case psl3)");
  if (strategy == Strategy::automatic) strategy = auto_strategy(n, field);

  auto make_tower = [&] {
    return top_modulus ? TowerField::create(field, *top_modulus) : TowerField::create(field, n);
  };
  auto check_tower = [&](const TowerFieldPtr& t) {
    if (t->degree() != n) throw PreconditionError("genpair: top modulus must have degree n");
  };

  switch (strategy) {
    case Strategy::consistent: return genpair_from_consistent(consistent_diagonal(field, n), "consistent");
    case Strategy::sidon:
      return genpair_from_consistent(consistent_from_sidon(sidon_greedy(n - 1), field), "sidon");
    case Strategy::normal: {
      if (n % p == 0) throw PreconditionError("normal strategy needs p not dividing n");
      const auto tower = make_tower();
      check_tower(tower);
      const auto report = find_normal_element(*tower, seed);
      auto cert = companion_genpair(*tower, *report.beta, "normal");
      cert.seed = seed;
      cert.trial = report.trial;
      return cert;
    }
    case Strategy::sharply_traceless: {
      const auto tower = make_tower();
      check_tower(tower);
      auto cert = companion_genpair(*tower, find_st_element(tower, seed), "sharply-traceless");
      cert.seed = seed;
      return cert;
    }
    case Strategy::automatic: break;
  }
  throw InternalError("unreachable strategy");
}

}  // namespace slgen
