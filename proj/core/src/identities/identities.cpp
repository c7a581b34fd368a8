#include "slgen/identities/identities.hpp"

#include <algorithm>
#include <thread>

#include "slgen/lie/closure.hpp"
#include "slgen/lie/search.hpp"
#include "slgen/mat/charpoly.hpp"
#include "slgen/mat/forms.hpp"
#include "slgen/mat/text.hpp"

namespace slgen {

std::string to_string(IdentityCase c) { return c == IdentityCase::psl3_char3 ? "psl3_char3" : "psl4_char2"; }

IdentityCase parse_identity_case(const std::string& s) {
  if (s == "psl3" || s == "psl3_char3") return IdentityCase::psl3_char3;
  if (s == "psl4" || s == "psl4_char2") return IdentityCase::psl4_char2;
  throw ParseError("unknown identity case '" + s + "' (expected psl3 or psl4)");
}

namespace {

unsigned case_size(IdentityCase c) { return c == IdentityCase::psl3_char3 ? 3 : 4; }
std::uint64_t case_characteristic(IdentityCase c) { return c == IdentityCase::psl3_char3 ? 3 : 2; }

void require_case(IdentityCase c, const FqMatrix& x) {
  const unsigned n = case_size(c);
  if (x.rows() != n || x.cols() != n)
    throw PreconditionError(to_string(c) + ": matrices must be " + std::to_string(n) + "x" + std::to_string(n));
  if (x.ring().characteristic() != case_characteristic(c))
    throw PreconditionError(to_string(c) + ": wrong characteristic");
  if (!x.ring().is_zero(x.trace())) throw PreconditionError(to_string(c) + ": matrices must be traceless");
}

}  // namespace

bool check_char_poly_33(const FqMatrix& x) {
  require_case(IdentityCase::psl3_char3, x);
  const auto& f = x.ring();
  const auto x2 = x * x;
  const auto lhs = x2 * x + x.scaled(x2.trace());
  const auto det = f.neg(char_poly(x).coeff(0));
  return lhs == FqMatrix::scalar(x.ring_ptr(), 3, det);
}

bool check_trace_formula_33(const FqMatrix& x, const FqMatrix& y) {
  require_case(IdentityCase::psl3_char3, x);
  require_case(IdentityCase::psl3_char3, y);
  require_same_owner(x.ring_ptr().get(), y.ring_ptr().get(), "check_trace_formula_33");
  const auto r = bracket(x, y, y) + x.scaled((y * y).trace()) - y.scaled((x * y).trace());
  return r.is_scalar();
}

bool check_42_formula(const FqMatrix& x, const FqMatrix& y) {
  require_case(IdentityCase::psl4_char2, x);
  require_case(IdentityCase::psl4_char2, y);
  require_same_owner(x.ring_ptr().get(), y.ring_ptr().get(), "check_42_formula");
  const auto forms = forms_sl4(x, y);
  const auto rhs = x.scaled(forms.a) + y.scaled(forms.b) + bracket(x, y).scaled(forms.c) + (y * y).scaled(forms.d);
  return (bracket(x, y, y, y) - rhs).is_scalar();
}

std::size_t pair_dimension(const FqMatrix& x, const FqMatrix& y) {
  const bool scalars = center_in_sl(static_cast<unsigned>(x.size()), x.ring().characteristic());
  return closure_dimension({x, y}, kNoStop, scalars);
}

std::vector<FqMatrix> predicted_span(IdentityCase c, const FqMatrix& x, const FqMatrix& y) {
  require_case(c, x);
  require_case(c, y);
  std::vector<FqMatrix> span{x, y, bracket(x, y), FqMatrix::identity(x.ring_ptr(), x.size())};
  if (c == IdentityCase::psl4_char2) {
    const auto x2 = x * x, y2 = y * y;
    for (auto m : {bracket(x, y2), bracket(y, x2), x2, y2, bracket(x2, y2)}) span.push_back(std::move(m));
  }
  return span;
}

bool closure_in_predicted_span(IdentityCase c, const FqMatrix& x, const FqMatrix& y) {
  const auto span = predicted_span(c, x, y);
  Subspace<GaloisField> target(x.ring_ptr(), x.size() * x.size());
  for (const auto& m : span) target.insert(m.data());
  const auto closure = close<GaloisField>({x, y}, kNoStop, true);
  for (const auto& row : closure.space.rows())
    if (!target.contains(row)) return false;
  return true;
}

IdentityReport identity_sweep(IdentityCase c, const GaloisFieldPtr& field, std::uint64_t trials, std::uint64_t seed,
                              bool closures, unsigned threads) {
  if (field->characteristic() != case_characteristic(c))
    throw PreconditionError(to_string(c) + " needs characteristic " + std::to_string(case_characteristic(c)));
  const unsigned n = case_size(c);
  threads = std::max(1U, threads);

  struct Outcome {
    std::size_t dim = 0;
    std::string reason;
  };
  std::vector<Outcome> out(trials);
  auto run = [&](unsigned t) {
    for (std::uint64_t i = t; i < trials; i += threads) {
      auto rng = trial_rng(seed, i);
      const auto x = random_traceless(field, n, rng);
      const auto y = random_traceless(field, n, rng);
      const bool ok = c == IdentityCase::psl3_char3 ? check_trace_formula_33(x, y) : check_42_formula(x, y);
      if (!ok) out[i].reason = "identity";
      if (!closures) continue;
      out[i].dim = pair_dimension(x, y);
      if (!closure_in_predicted_span(c, x, y)) out[i].reason += out[i].reason.empty() ? "span" : "+span";
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(run, t);
    run(0);
  }

  IdentityReport report;
  report.id_case = c;
  report.field_spec = field->spec();
  report.samples = trials;
  report.seed = seed;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (out[i].dim > report.max_pair_dim) {
      report.max_pair_dim = out[i].dim;
      report.max_trial = i;
    }
    if (out[i].reason.empty()) continue;
    auto rng = trial_rng(seed, i);
    auto x = random_traceless(field, n, rng);
    auto y = random_traceless(field, n, rng);
    report.failures.push_back({i, std::move(x), std::move(y), out[i].reason});
  }
  return report;
}

std::vector<FqMatrix> fixed_sl3_triple() {
  const auto f3 = GaloisField::prime(3);
  const auto b = parse_matrix(f3, "0,0,1;0,0,1;0,0,0");
  return {parse_matrix(f3, "1,0,0;0,-1,0;0,0,0"), b, b.transpose()};
}

std::vector<FqMatrix> fixed_sl4_triple() {
  const auto f2 = GaloisField::prime(2);
  const auto b = parse_matrix(f2, "0,0,1,1;1,0,0,0;0,0,0,0;1,1,0,0");
  return {parse_matrix(f2, "1,0,0,0;0,1,0,0;0,0,0,0;0,0,0,0"), b, b.transpose()};
}

bool verify_fixed_triples() {
  return is_generating(fixed_sl3_triple()).verdict && is_generating(fixed_sl4_triple()).verdict;
}

}  // namespace slgen
