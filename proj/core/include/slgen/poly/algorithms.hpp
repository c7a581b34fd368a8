#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "slgen/error.hpp"
#include "slgen/poly/polynomial.hpp"
#include "slgen/random.hpp"

namespace slgen {

template <Field F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

/// (g, s, t) with g = s*a + t*b and g monic (or zero when a = b = 0).
template <Field F>
std::tuple<Polynomial<F>, Polynomial<F>, Polynomial<F>> xgcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  const auto& ring = a.ring_ptr();
  Polynomial<F> r0 = a, r1 = b;
  Polynomial<F> s0 = Polynomial<F>::constant(ring, ring->one()), s1(ring);
  Polynomial<F> t0(ring), t1 = Polynomial<F>::constant(ring, ring->one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto u = ring->inv(r0.leading());
  return {r0.scaled(u), s0.scaled(u), t0.scaled(u)};
}

template <Field F>
Polynomial<F> mulmod(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& mod) {
  return (a * b) % mod;
}

template <Field F>
Polynomial<F> powmod(Polynomial<F> base, std::uint64_t e, const Polynomial<F>& mod) {
  Polynomial<F> acc = Polynomial<F>::constant(base.ring_ptr(), base.ring().one()) % mod;
  base = base % mod;
  while (e) {
    if (e & 1) acc = mulmod(acc, base, mod);
    e >>= 1;
    if (e) base = mulmod(base, base, mod);
  }
  return acc;
}

/// g^|F| mod `mod`, computed as degree_over_prime() successive p-th powers so
/// the field order never has to fit in a machine word.
template <FiniteField F>
Polynomial<F> field_order_power(const Polynomial<F>& g, const Polynomial<F>& mod) {
  const auto& ring = g.ring();
  Polynomial<F> r = g % mod;
  for (unsigned i = 0; i < ring.degree_over_prime(); ++i) r = powmod(r, ring.characteristic(), mod);
  return r;
}

inline std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Rabin's test: f of degree d is irreducible iff x^(Q^d) = x mod f and
/// gcd(x^(Q^(d/r)) - x, f) = 1 for every prime r | d.
template <FiniteField F>
bool is_irreducible(const Polynomial<F>& f) {
  if (f.is_zero()) throw PreconditionError("is_irreducible(): zero polynomial");
  const int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  const auto g = f.monic();
  const auto x = Polynomial<F>::x(g.ring_ptr());
  std::vector<Polynomial<F>> powers;  // powers[k] = x^(Q^k) mod g
  powers.push_back(x % g);
  for (int k = 1; k <= d; ++k) powers.push_back(field_order_power(powers.back(), g));
  if (!(powers[static_cast<std::size_t>(d)] == powers[0])) return false;
  for (unsigned r : prime_divisors(static_cast<unsigned>(d))) {
    const auto h = powers[static_cast<std::size_t>(d) / r] - x;
    if (gcd(h, g).degree() != 0) return false;
  }
  return true;
}

template <FiniteField F>
Polynomial<F> random_polynomial(const std::shared_ptr<const F>& field, unsigned degree_bound, Rng& rng) {
  std::vector<typename F::value_type> c;
  c.reserve(degree_bound);
  for (unsigned i = 0; i < degree_bound; ++i) c.push_back(field->random(rng));
  return Polynomial<F>(field, std::move(c));
}

/// Uniformly random monic irreducible of the given degree. Deterministic for
/// a fixed seed; throws RetryBudgetExhausted after `max_tries` candidates.
template <FiniteField F>
Polynomial<F> random_irreducible(const std::shared_ptr<const F>& field, unsigned degree, std::uint64_t seed,
                                 unsigned max_tries = 100000) {
  if (degree == 0) throw PreconditionError("random_irreducible(): degree must be >= 1");
  Rng rng(seed);
  for (unsigned t = 0; t < max_tries; ++t) {
    auto f = random_polynomial(field, degree, rng) + Polynomial<F>::monomial(field, field->one(), degree);
    if (is_irreducible(f)) return f;
  }
  throw RetryBudgetExhausted("random_irreducible(): retry budget exhausted");
}

template <FiniteField F>
struct PolyFactor {
  Polynomial<F> poly;
  unsigned multiplicity;
};

template <FiniteField F>
bool poly_less(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ai = a.coeff(static_cast<std::size_t>(i));
    const auto bi = b.coeff(static_cast<std::size_t>(i));
    if (a.ring().less(ai, bi)) return true;
    if (a.ring().less(bi, ai)) return false;
  }
  return false;
}

namespace detail {

/// p-th root of a polynomial whose derivative vanishes.
template <FiniteField F>
Polynomial<F> pth_root(const Polynomial<F>& f) {
  const auto& ring = f.ring();
  const std::size_t p = ring.characteristic();
  std::vector<typename F::value_type> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(ring.pth_root(f.coeffs()[i]));
  return Polynomial<F>(f.ring_ptr(), std::move(v));
}

// Monic f -> pairwise coprime square-free parts with multiplicities.
template <FiniteField F>
void squarefree(const Polynomial<F>& f, unsigned scale, std::vector<PolyFactor<F>>& out) {
  auto c = gcd(f, f.derivative());
  auto w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    auto y = gcd(w, c);
    auto fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c).monic(), scale * static_cast<unsigned>(f.ring().characteristic()), out);
}

// Square-free monic f -> products of all irreducible factors of each degree.
template <FiniteField F>
std::vector<std::pair<Polynomial<F>, unsigned>> distinct_degree(Polynomial<F> f) {
  std::vector<std::pair<Polynomial<F>, unsigned>> out;
  const auto x = Polynomial<F>::x(f.ring_ptr());
  auto h = x % f;
  unsigned d = 0;
  while (f.degree() >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = field_order_power(h, f);
    auto g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

// Candidate splitter for equal-degree factorization.
template <FiniteField F>
Polynomial<F> split_candidate(const Polynomial<F>& f, unsigned d, Rng& rng) {
  const auto& ring = f.ring();
  const auto a = random_polynomial(f.ring_ptr(), static_cast<unsigned>(f.degree()), rng);
  const std::uint64_t p = ring.characteristic();
  const unsigned steps = ring.degree_over_prime() * d;
  if (p == 2) {
    // Trace map a + a^2 + ... + a^(2^(kd-1)).
    auto t = a, acc = a;
    for (unsigned i = 1; i < steps; ++i) {
      t = mulmod(t, t, f);
      acc = acc + t;
    }
    return acc;
  }
  // a^((Q^d - 1)/2) = (a^(1 + p + ... + p^(kd-1)))^((p-1)/2).
  auto t = a, acc = a;
  for (unsigned i = 1; i < steps; ++i) {
    t = powmod(t, p, f);
    acc = mulmod(acc, t, f);
  }
  return powmod(acc, (p - 1) / 2, f) - Polynomial<F>::constant(f.ring_ptr(), ring.one());
}

template <FiniteField F>
void equal_degree(const Polynomial<F>& f, unsigned d, Rng& rng, std::vector<Polynomial<F>>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  for (;;) {
    auto g = gcd(split_candidate(f, d, rng), f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Square-free decomposition f = u * prod g_i^(m_i); factors monic, coprime.
template <FiniteField F>
std::vector<PolyFactor<F>> squarefree_factorization(const Polynomial<F>& f) {
  if (f.is_zero()) throw PreconditionError("squarefree_factorization(): zero polynomial");
  std::vector<PolyFactor<F>> out;
  if (f.degree() > 0) detail::squarefree(f.monic(), 1, out);
  return out;
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). The leading unit is dropped.
template <FiniteField F>
std::vector<PolyFactor<F>> factor(const Polynomial<F>& f, std::uint64_t seed = 0x5eed) {
  if (f.is_zero()) throw PreconditionError("factor(): zero polynomial");
  Rng rng(seed);
  std::vector<PolyFactor<F>> out;
  for (const auto& sf : squarefree_factorization(f)) {
    for (const auto& [block, d] : detail::distinct_degree(sf.poly)) {
      std::vector<Polynomial<F>> irr;
      detail::equal_degree(block, d, rng, irr);
      for (auto& g : irr) out.push_back({std::move(g), sf.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.poly, b.poly); });
  // Square-free parts are coprime, but merge defensively against equal entries.
  std::vector<PolyFactor<F>> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().poly == fac.poly)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(std::move(fac));
  }
  return merged;
}

/// Distinct roots of f in its coefficient field, sorted by field order.
template <FiniteField F>
std::vector<typename F::value_type> roots(const Polynomial<F>& f, std::uint64_t seed = 0x5eed) {
  if (f.is_zero()) throw PreconditionError("roots(): zero polynomial");
  std::vector<typename F::value_type> out;
  if (f.degree() < 1) return out;
  auto g = f.monic();
  const auto x = Polynomial<F>::x(g.ring_ptr());
  auto lin = gcd(field_order_power(x, g) - x, g);  // product of distinct linear factors
  if (lin.degree() < 1) return out;
  Rng rng(seed);
  std::vector<Polynomial<F>> factors;
  detail::equal_degree(lin, 1, rng, factors);
  const auto& ring = g.ring();
  for (const auto& l : factors) out.push_back(ring.neg(l.coeff(0)));
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return ring.less(a, b); });
  return out;
}

template <FiniteField F>
Polynomial<F> expand(const std::vector<PolyFactor<F>>& factors, const std::shared_ptr<const F>& field) {
  auto acc = Polynomial<F>::constant(field, field->one());
  for (const auto& fac : factors)
    for (unsigned i = 0; i < fac.multiplicity; ++i) acc = acc * fac.poly;
  return acc;
}

}  // namespace slgen
