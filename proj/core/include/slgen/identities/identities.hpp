#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slgen/ff/galois_field.hpp"
#include "slgen/mat/matrix.hpp"

namespace slgen {

using FqMatrix = Matrix<GaloisField>;

enum class IdentityCase { psl3_char3, psl4_char2 };

/// "psl3_char3" / "psl4_char2".
std::string to_string(IdentityCase c);
/// Accepts the names above and the short forms "psl3", "psl4".
IdentityCase parse_identity_case(const std::string& s);

/// x^3 + tr(x^2) x == det(x) I for traceless 3x3 x in characteristic 3.
bool check_char_poly_33(const FqMatrix& x);

/// [x,y,y] + tr(y^2) x - tr(xy) y is scalar.
bool check_trace_formula_33(const FqMatrix& x, const FqMatrix& y);

/// [x,y,y,y] - (a x + b y + c [x,y] + d y^2) is scalar, with (a,b,c,d)
/// from forms_sl4.
bool check_42_formula(const FqMatrix& x, const FqMatrix& y);

/// Dimension of the subalgebra of sl_n generated by x, y and, when they
/// are traceless, the scalars: the preimage of the subalgebra of psl_n
/// generated by the images of x and y.
std::size_t pair_dimension(const FqMatrix& x, const FqMatrix& y);

/// Spanning set that bounds the pair closure: {x, y, [x,y]} for psl3;
/// {x, y, [x,y], [x,y^2], [y,x^2], x^2, y^2, [x^2,y^2]} for psl4. The
/// identity is added when traceless.
std::vector<FqMatrix> predicted_span(IdentityCase c, const FqMatrix& x, const FqMatrix& y);

/// The closure of {x, y} (with scalars) lies in predicted_span.
bool closure_in_predicted_span(IdentityCase c, const FqMatrix& x, const FqMatrix& y);

struct IdentityFailure {
  std::uint64_t trial = 0;
  FqMatrix x, y;
  std::string reason;
};

struct IdentityReport {
  IdentityCase id_case = IdentityCase::psl3_char3;
  std::string field_spec;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityFailure> failures;
  /// Largest pair_dimension seen; 0 when closures were not computed.
  std::size_t max_pair_dim = 0;
  /// First trial attaining max_pair_dim.
  std::optional<std::uint64_t> max_trial;
};

/// Checks the pair identity of the case on `trials` random traceless pairs
/// (trial i drawn from trial_rng(seed, i)). With `closures` also computes
/// pair_dimension and the spanning-set containment per pair. Results do
/// not depend on `threads`.
IdentityReport identity_sweep(IdentityCase c, const GaloisFieldPtr& field, std::uint64_t trials, std::uint64_t seed,
                              bool closures, unsigned threads = 1);

inline IdentityReport pair_dim_bound(IdentityCase c, const GaloisFieldPtr& field, std::uint64_t trials,
                                     std::uint64_t seed, unsigned threads = 1) {
  return identity_sweep(c, field, trials, seed, true, threads);
}

/// A = diag(1,-1,0), B = E13 + E23, B^T over F_3.
std::vector<FqMatrix> fixed_sl3_triple();
/// A = E11 + E22, B = E13 + E14 + E21 + E41 + E42, B^T over F_2.
std::vector<FqMatrix> fixed_sl4_triple();

/// Both fixed triples generate (dims 8 and 15).
bool verify_fixed_triples();

}  // namespace slgen
