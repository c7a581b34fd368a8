#include "slgen/constructions/frobenius.hpp"

#include "slgen/mat/charpoly.hpp"
#include "slgen/mat/linalg.hpp"

namespace slgen {

namespace {

using Vec = std::vector<GaloisField::value_type>;

Matrix<GaloisField> rows_matrix(const GaloisFieldPtr& field, const std::vector<Vec>& rows, std::size_t width) {
  std::vector<GaloisField::value_type> data;
  data.reserve(rows.size() * width);
  for (const auto& r : rows) data.insert(data.end(), r.begin(), r.end());
  return Matrix<GaloisField>(field, rows.size(), width, std::move(data));
}

Subspace<GaloisField> kernel_space(const TowerField& tower, const FqPoly& g) {
  Subspace<GaloisField> s(tower.base_ptr(), tower.degree());
  for (const auto& v : kernel(eval_at_matrix(g, tower.frobenius_matrix()))) s.insert(v);
  return s;
}

/// Vectors of `big` outside `small`, as a subspace meeting `small` trivially.
Subspace<GaloisField> complement(const Subspace<GaloisField>& small, const Subspace<GaloisField>& big,
                                 const GaloisFieldPtr& field) {
  Subspace<GaloisField> acc = small;
  Subspace<GaloisField> out(field, big.ambient_dim());
  for (const auto& v : big.rows())
    if (acc.insert(v)) out.insert(v);
  return out;
}

FqPoly poly_pow(const FqPoly& g, unsigned e) {
  auto r = FqPoly::constant(g.ring_ptr(), g.ring().one());
  for (unsigned i = 0; i < e; ++i) r = r * g;
  return r;
}

}  // namespace

bool is_normal(const TowerField& tower, const TowerField::value_type& a) {
  return rank(rows_matrix(tower.base_ptr(), tower.conjugates(a), tower.degree())) == tower.degree();
}

FqPoly conjugate_polynomial(const TowerField& tower, const TowerField::value_type& a) {
  // Coefficients low to high, in the top field.
  std::vector<TowerField::value_type> c{tower.one()};
  for (const auto& r : tower.conjugates(a)) {
    std::vector<TowerField::value_type> next(c.size() + 1, tower.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = tower.add(next[i + 1], c[i]);
      next[i] = tower.sub(next[i], tower.mul(r, c[i]));
    }
    c = std::move(next);
  }
  std::vector<GaloisField::value_type> out;
  out.reserve(c.size());
  for (const auto& v : c) out.push_back(tower.extract_base(v));
  return FqPoly(tower.base_ptr(), std::move(out));
}

NormalElementReport normal_element_report(const TowerField& tower, const TowerField::value_type& alpha) {
  NormalElementReport r;
  r.alpha = alpha;
  r.is_normal = is_normal(tower, alpha);
  const auto& base = tower.base();
  const unsigned n = tower.degree();
  if (n % base.characteristic() != 0) {
    const auto shift = base.div(tower.trace(alpha), base.from_int(n));
    r.beta = tower.sub(alpha, tower.embed(shift));
    r.min_poly_beta = conjugate_polynomial(tower, *r.beta);
  }
  return r;
}

NormalElementReport find_normal_element(const TowerField& tower, std::uint64_t seed, std::uint64_t budget) {
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto rng = trial_rng(seed, i);
    auto a = tower.random(rng);
    if (!is_normal(tower, a)) continue;
    auto r = normal_element_report(tower, a);
    r.trial = i;
    return r;
  }
  throw RetryBudgetExhausted("find_normal_element(): retry budget exhausted");
}

bool is_sharply_traceless_element(const TowerField& tower, const TowerField::value_type& a,
                                  const PhiFactorization& phi) {
  if (!tower.is_zero(tower.poly_in_frobenius(phi.phi, a))) return false;
  for (const auto& f : phi.factors)
    if (tower.is_zero(tower.poly_in_frobenius(f.cofactor, a))) return false;
  return true;
}

bool is_sharply_traceless_element(const TowerField& tower, const TowerField::value_type& a) {
  return is_sharply_traceless_element(tower, a, phi_factorization(tower));
}

std::size_t frobenius_kernel_dim(const TowerField& tower, const FqPoly& g) { return kernel_space(tower, g).dim(); }

FrobeniusDecomposition build_decomposition(const TowerFieldPtr& tower) {
  const auto& field = tower->base_ptr();
  const unsigned n = tower->degree();
  const auto phi = phi_factorization(*tower);
  const auto x_minus_1 = FqPoly::from_ints(field, {-1, 1});

  FrobeniusDecomposition dec{tower, {}, Subspace<GaloisField>(field, n)};
  std::size_t total = 0;
  const Subspace<GaloisField>* v_x_minus_1 = nullptr;
  for (const auto& f : phi.factors) {
    FrobeniusPart part{f.pi, f.mult, kernel_space(*tower, poly_pow(f.pi, f.mult)),
                       kernel_space(*tower, poly_pow(f.pi, f.mult - 1)), Subspace<GaloisField>(field, n)};
    part.x = complement(part.w, part.v, field);
    const auto d = static_cast<std::size_t>(f.pi.degree());
    if (part.x.dim() != d || part.w.dim() != (f.mult - 1) * d)
      throw InternalError("root subspace dimensions disagree with the factorization of Phi");
    total += part.v.dim();
    dec.parts.push_back(std::move(part));
  }
  for (const auto& part : dec.parts)
    if (part.pi == x_minus_1) v_x_minus_1 = &part.v;

  unsigned e = 1;
  while (n % (e * tower->characteristic()) == 0) e *= static_cast<unsigned>(tower->characteristic());
  const auto top = kernel_space(*tower, poly_pow(x_minus_1, e));
  dec.u = complement(v_x_minus_1 ? *v_x_minus_1 : Subspace<GaloisField>(field, n), top, field);
  if (dec.u.dim() != 1 || total + 1 != n) throw InternalError("Frobenius decomposition does not fill F_{q^n}");
  return dec;
}

TowerField::value_type construct_st_element(const FrobeniusDecomposition& dec) {
  const auto& tower = *dec.tower;
  auto acc = tower.zero();
  for (const auto& part : dec.parts) acc = tower.add(acc, part.x.rows().front());
  return acc;
}

std::uint64_t count_st_elements(const GaloisFieldPtr& field, unsigned n) {
  if (n == 0) throw PreconditionError("count_st_elements(): n must be >= 1");
  const auto phi = phi_factorization(field, n);
  const std::uint64_t q = field->order();
  auto checked_mul = [](std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b) throw RepresentationError("count_st_elements(): count exceeds 64 bits");
    return a * b;
  };
  auto qpow = [&](unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r = checked_mul(r, q);
    return r;
  };
  unsigned exponent = n - 1;
  std::uint64_t count = 1;
  for (const auto& f : phi.factors) {
    const auto d = static_cast<unsigned>(f.pi.degree());
    exponent -= d;
    count = checked_mul(count, qpow(d) - 1);
  }
  return checked_mul(count, qpow(exponent));
}

std::optional<std::uint64_t> count_st_brute(const TowerField& tower, std::uint64_t cap) {
  const auto total = tower.order_or_zero();
  if (total == 0 || total > cap) return std::nullopt;
  const auto phi = phi_factorization(tower);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < total; ++i)
    if (is_sharply_traceless_element(tower, tower.from_index(i), phi)) ++count;
  return count;
}

TowerField::value_type find_st_element(const TowerFieldPtr& tower, std::uint64_t seed, std::uint64_t budget) {
  const auto phi = phi_factorization(*tower);
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto rng = trial_rng(seed, i);
    const auto a = tower->random(rng);
    auto gamma = tower->sub(tower->frobenius(a), a);
    if (is_sharply_traceless_element(*tower, gamma, phi)) return gamma;
  }
  auto gamma = construct_st_element(build_decomposition(tower));
  if (!is_sharply_traceless_element(*tower, gamma, phi))
    throw InternalError("decomposition builder returned a non sharply traceless element");
  return gamma;
}

}  // namespace slgen
