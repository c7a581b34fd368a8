#include "slgen/lie/certificate.hpp"

#include "slgen/lie/closure.hpp"

namespace slgen {

std::string to_string(Target t) { return t == Target::sl ? "sl" : "psl"; }

Target parse_target(const std::string& s) {
  if (s == "sl") return Target::sl;
  if (s == "psl") return Target::psl;
  throw ParseError("unknown target '" + s + "' (expected sl or psl)");
}

bool center_in_sl(unsigned n, std::uint64_t p) { return n % p == 0; }

std::size_t expected_dimension(unsigned n, std::uint64_t p, Target target) {
  const std::size_t full = std::size_t{n} * n - 1;
  return target == Target::psl && center_in_sl(n, p) ? full - 1 : full;
}

GenPairCertificate is_generating(const std::vector<Matrix<GaloisField>>& gens, Target target, std::string strategy,
                                 std::optional<std::uint64_t> seed) {
  validate_generators(gens);
  const auto& field = gens.front().ring();
  const auto n = static_cast<unsigned>(gens.front().size());
  const bool quotient = target == Target::psl && center_in_sl(n, field.characteristic());
  const std::size_t full = std::size_t{n} * n - 1;

  GenPairCertificate cert;
  cert.field_spec = field.spec();
  cert.n = n;
  cert.generators = gens;
  cert.target = target;
  cert.expected_dim = expected_dimension(n, field.characteristic(), target);
  cert.strategy = std::move(strategy);
  cert.seed = seed;
  const std::size_t dim = closure_dimension(gens, full, quotient);
  cert.closure_dim = quotient ? dim - 1 : dim;
  cert.verdict = cert.closure_dim == cert.expected_dim;
  return cert;
}

}  // namespace slgen
