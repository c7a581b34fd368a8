#include "slgen/ff/tower.hpp"

#include "slgen/poly/algorithms.hpp"

namespace slgen {

Polynomial<GaloisField> TowerField::default_modulus(const GaloisFieldPtr& base, unsigned n) {
  if (n == 0) throw PreconditionError("tower degree must be >= 1");
  const auto q = static_cast<GaloisField::value_type>(base->order());
  std::vector<GaloisField::value_type> digits(n, 0);
  for (;;) {
    auto coeffs = digits;
    coeffs.push_back(1);
    Polynomial<GaloisField> h(base, coeffs);
    if (is_irreducible(h)) return h;
    std::size_t i = 0;
    while (i < n && ++digits[i] == q) digits[i++] = 0;
    if (i == n) throw InternalError("no irreducible polynomial found");
  }
}

std::shared_ptr<const TowerField> TowerField::create(GaloisFieldPtr base, unsigned n) {
  auto h = default_modulus(base, n);
  return std::shared_ptr<const TowerField>(new TowerField(std::move(base), std::move(h)));
}

std::shared_ptr<const TowerField> TowerField::create(GaloisFieldPtr base, const Polynomial<GaloisField>& modulus) {
  require_same_owner(base.get(), modulus.ring_ptr().get(), "tower modulus");
  if (modulus.degree() < 1 || !modulus.is_monic()) throw PreconditionError("tower modulus must be monic of degree >= 1");
  if (!is_irreducible(modulus)) throw NotIrreducible("tower modulus is not irreducible over the base field");
  return std::shared_ptr<const TowerField>(new TowerField(std::move(base), modulus));
}

TowerField::TowerField(GaloisFieldPtr base, Polynomial<GaloisField> modulus)
    : base_(std::move(base)),
      n_(static_cast<unsigned>(modulus.degree())),
      modulus_(std::move(modulus)),
      frobenius_matrix_(base_, n_, n_) {
  // Column j = coordinates of (z^q)^j; Frobenius is F_q-linear.
  const auto zq = pow(generator(), base_->order());
  std::vector<base_value> data(n_ * n_, 0);
  value_type col = one();
  for (unsigned j = 0; j < n_; ++j) {
    for (unsigned i = 0; i < n_; ++i) data[i * n_ + j] = col[i];
    col = mul(col, zq);
  }
  frobenius_matrix_ = Matrix<GaloisField>(base_, n_, n_, std::move(data));
}

void TowerField::check_value(const value_type& a) const {
  if (a.size() != n_) throw MismatchError("value does not belong to this tower (wrong coordinate count)");
}

TowerField::value_type TowerField::add(const value_type& a, const value_type& b) const {
  value_type r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = base_->add(a[i], b[i]);
  return r;
}

TowerField::value_type TowerField::sub(const value_type& a, const value_type& b) const {
  value_type r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = base_->sub(a[i], b[i]);
  return r;
}

TowerField::value_type TowerField::neg(const value_type& a) const {
  value_type r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = base_->neg(a[i]);
  return r;
}

TowerField::value_type TowerField::scale(base_value c, const value_type& a) const {
  value_type r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = base_->mul(c, a[i]);
  return r;
}

TowerField::value_type TowerField::mul(const value_type& a, const value_type& b) const {
  const auto& f = *base_;
  std::vector<base_value> prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
  }
  const auto& h = modulus_.coeffs();
  for (std::size_t k = prod.size(); k-- > n_;) {
    const base_value c = prod[k];
    if (c == 0) continue;
    for (unsigned t = 0; t < n_; ++t) prod[k - n_ + t] = f.sub(prod[k - n_ + t], f.mul(c, h[t]));
    prod[k] = 0;
  }
  prod.resize(n_);
  return prod;
}

TowerField::value_type TowerField::inv(const value_type& a) const {
  if (is_zero(a)) throw PreconditionError("inverse of zero");
  auto [g, s, t] = xgcd(Polynomial<GaloisField>(base_, a), modulus_);
  if (g.degree() != 0) throw InternalError("tower modulus is not irreducible");
  value_type r(n_, 0);
  for (std::size_t i = 0; i < s.coeffs().size() && i < n_; ++i) r[i] = s.coeffs()[i];
  return r;
}

TowerField::value_type TowerField::pow(value_type a, std::uint64_t e) const {
  value_type acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return acc;
}

bool TowerField::is_zero(const value_type& a) const {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

bool TowerField::less(const value_type& a, const value_type& b) const {
  for (std::size_t i = n_; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::size_t TowerField::hash(const value_type& a) const {
  std::uint64_t h = 0;
  for (auto c : a) h = mix64(h ^ c);
  return static_cast<std::size_t>(h);
}

TowerField::value_type TowerField::random(Rng& rng) const {
  value_type r(n_);
  for (auto& c : r) c = base_->random(rng);
  return r;
}

TowerField::value_type TowerField::pth_root(const value_type& a) const {
  // The p-th power map has order m*n; its inverse is its (m*n - 1)-th iterate.
  value_type r = a;
  for (unsigned i = 0; i + 1 < degree_over_prime(); ++i) r = pow(r, base_->characteristic());
  return r;
}

std::string TowerField::format(const value_type& a) const {
  std::string s = "[";
  for (unsigned i = 0; i < n_; ++i) {
    if (i) s += ' ';
    s += base_->format(a[i]);
  }
  return s + "]";
}

TowerField::value_type TowerField::generator() const {
  if (n_ == 1) {
    // z is the root of the linear modulus z + h_0.
    return embed(base_->neg(modulus_.coeff(0)));
  }
  value_type z(n_, 0);
  z[1] = 1;
  return z;
}

TowerField::value_type TowerField::embed(base_value c) const {
  value_type r(n_, 0);
  r[0] = c;
  return r;
}

bool TowerField::is_base(const value_type& a) const {
  for (unsigned i = 1; i < n_; ++i)
    if (a[i] != 0) return false;
  return true;
}

TowerField::base_value TowerField::extract_base(const value_type& a) const {
  check_value(a);
  if (!is_base(a)) throw RepresentationError("element does not lie in the base field");
  return a[0];
}

TowerField::value_type TowerField::frobenius(const value_type& a) const {
  check_value(a);
  return frobenius_matrix_.apply(a);
}

TowerField::value_type TowerField::frobenius_power(value_type a, unsigned k) const {
  for (unsigned i = 0; i < k % n_; ++i) a = frobenius(a);
  return a;
}

std::vector<TowerField::value_type> TowerField::conjugates(const value_type& a) const {
  std::vector<value_type> out{a};
  for (unsigned i = 1; i < n_; ++i) out.push_back(frobenius(out.back()));
  return out;
}

TowerField::base_value TowerField::trace(const value_type& a) const {
  value_type acc = zero();
  for (const auto& c : conjugates(a)) acc = add(acc, c);
  if (!is_base(acc)) throw RepresentationError("trace left the base field (inconsistent tower)");
  return acc[0];
}

TowerField::value_type TowerField::poly_in_frobenius(const Polynomial<GaloisField>& g, const value_type& a) const {
  require_same_owner(base_.get(), g.ring_ptr().get(), "poly_in_frobenius");
  check_value(a);
  value_type acc = zero();
  for (int i = g.degree(); i >= 0; --i) acc = add(frobenius(acc), scale(g.coeff(static_cast<std::size_t>(i)), a));
  return acc;
}

std::uint64_t TowerField::order_or_zero() const {
  std::uint64_t r = 1;
  const std::uint64_t q = base_->order();
  for (unsigned i = 0; i < n_; ++i) {
    if (r > UINT64_MAX / q) return 0;
    r *= q;
  }
  return r;
}

TowerField::value_type TowerField::from_index(std::uint64_t index) const {
  const std::uint64_t q = base_->order();
  value_type r(n_);
  for (unsigned i = 0; i < n_; ++i) {
    r[i] = static_cast<base_value>(index % q);
    index /= q;
  }
  return r;
}

namespace {

void check_tower(const TowerField& tower, const TowerElement& a) {
  require_same_owner(&tower, a.ring_ptr().get(), "tower operation");
}

}  // namespace

TowerElement frobenius(const TowerField& tower, const TowerElement& a) {
  check_tower(tower, a);
  return {a.ring_ptr(), tower.frobenius(a.value())};
}

BaseElement rel_trace(const TowerField& tower, const TowerElement& a) {
  check_tower(tower, a);
  return {tower.base_ptr(), tower.trace(a.value())};
}

TowerElement poly_in_frobenius(const TowerField& tower, const Polynomial<GaloisField>& g, const TowerElement& a) {
  check_tower(tower, a);
  return {a.ring_ptr(), tower.poly_in_frobenius(g, a.value())};
}

TowerElement embed(const TowerField& tower, const BaseElement& a) {
  require_same_owner(tower.base_ptr().get(), a.ring_ptr().get(), "embed");
  return {tower.shared_from_this(), tower.embed(a.value())};
}

BaseElement extract_base(const TowerField& tower, const TowerElement& a) {
  check_tower(tower, a);
  return {tower.base_ptr(), tower.extract_base(a.value())};
}

}  // namespace slgen
