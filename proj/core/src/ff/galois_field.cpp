#include "slgen/ff/galois_field.hpp"

#include <charconv>
#include <limits>
#include <sstream>

#include "slgen/poly/algorithms.hpp"

namespace slgen {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint32_t reduce_int(std::int64_t k, std::uint32_t p) {
  std::int64_t r = k % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

void check_prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::int32_t>::max()) throw PreconditionError("characteristic too large (need p < 2^31)");
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), m_(modulus.empty() ? 1 : static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < m_; ++i) {
    if (q_ > std::numeric_limits<std::uint32_t>::max() / p_) throw PreconditionError("field order must be below 2^32");
    q_ *= p_;
  }
  if (q_ <= kTableLimit) {
    const std::size_t q = q_;
    add_.resize(q * q);
    mul_.resize(q * q);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        const auto x = static_cast<value_type>(a), y = static_cast<value_type>(b);
        if (m_ == 1) {
          add_[a * q + b] = static_cast<value_type>((a + b) % p_);
          mul_[a * q + b] = static_cast<value_type>((a * b) % p_);
        } else {
          add_[a * q + b] = add_slow(x, y);
          mul_[a * q + b] = mul_slow(x, y);
        }
      }
    }
    inv_.assign(q, 0);
    for (std::size_t a = 1; a < q; ++a)
      for (std::size_t b = 1; b < q; ++b)
        if (mul_[a * q + b] == 1) {
          inv_[a] = static_cast<value_type>(b);
          break;
        }
  }
}

std::shared_ptr<const GaloisField> GaloisField::prime(std::uint32_t p) {
  check_prime(p);
  return std::shared_ptr<const GaloisField>(new GaloisField(p, {}));
}

std::vector<std::uint32_t> GaloisField::default_modulus(std::uint32_t p, unsigned m) {
  check_prime(p);
  if (m == 0) throw PreconditionError("extension degree must be >= 1");
  const auto fp = prime(p);
  std::vector<std::uint32_t> digits(m, 0);
  for (;;) {
    std::vector<std::uint32_t> coeffs = digits;
    coeffs.push_back(1);
    if (is_irreducible(Polynomial<GaloisField>(fp, coeffs))) return coeffs;
    std::size_t i = 0;
    while (i < m && ++digits[i] == p) digits[i++] = 0;
    if (i == m) throw InternalError("no irreducible polynomial found");
  }
}

std::shared_ptr<const GaloisField> GaloisField::create(std::uint32_t p, unsigned m) {
  if (m == 1) return prime(p);
  return std::shared_ptr<const GaloisField>(new GaloisField(p, default_modulus(p, m)));
}

std::shared_ptr<const GaloisField> GaloisField::create(std::uint32_t p, const std::vector<std::int64_t>& modulus) {
  check_prime(p);
  std::vector<std::uint32_t> coeffs;
  for (auto c : modulus) coeffs.push_back(reduce_int(c, p));
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() < 2) throw PreconditionError("field modulus must have degree >= 1");
  if (coeffs.back() != 1) throw PreconditionError("field modulus must be monic");
  if (coeffs.size() == 2) return prime(p);
  const auto fp = prime(p);
  if (!is_irreducible(Polynomial<GaloisField>(fp, coeffs)))
    throw NotIrreducible("field modulus is not irreducible over F_" + std::to_string(p));
  return std::shared_ptr<const GaloisField>(new GaloisField(p, std::move(coeffs)));
}

std::vector<std::uint32_t> GaloisField::digits(value_type a) const {
  std::vector<std::uint32_t> d(m_);
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

GaloisField::value_type GaloisField::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > m_) throw RepresentationError("too many coefficients for F_q element");
  std::uint64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p_ + digits[i] % p_;
  return static_cast<value_type>(code);
}

GaloisField::value_type GaloisField::add_slow(value_type a, value_type b) const {
  std::uint64_t code = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    code += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return static_cast<value_type>(code);
}

GaloisField::value_type GaloisField::neg_slow(value_type a) const {
  std::uint64_t code = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint64_t d = a % p_;
    code += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return static_cast<value_type>(code);
}

GaloisField::value_type GaloisField::mul_slow(value_type a, value_type b) const {
  const auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i)
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  for (std::size_t k = prod.size(); k-- > m_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (unsigned t = 0; t <= m_; ++t) prod[k - m_ + t] = (prod[k - m_ + t] + (p_ - c) * modulus_[t]) % p_;
  }
  std::vector<std::uint32_t> out(m_);
  for (unsigned i = 0; i < m_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(out);
}

GaloisField::value_type GaloisField::inv(value_type a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  if (!inv_.empty()) return inv_[a];
  return pow(a, q_ - 2);
}

GaloisField::value_type GaloisField::pow(value_type a, std::uint64_t e) const {
  value_type acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return acc;
}

GaloisField::value_type GaloisField::from_int(std::int64_t k) const { return reduce_int(k, p_); }

GaloisField::value_type GaloisField::generator() const {
  if (m_ == 1) throw PreconditionError("prime field has no polynomial generator");
  return p_;
}

std::string GaloisField::format(value_type a) const {
  if (m_ == 1) return std::to_string(a);
  std::string s = "(";
  const auto d = digits(a);
  for (unsigned i = 0; i < m_; ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  return s + ")";
}

std::string GaloisField::spec() const {
  if (m_ == 1) return std::to_string(p_);
  std::string s = std::to_string(p_) + "^" + std::to_string(m_) + ":";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s;
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad integer '" + std::string(s) + "' in '" + whole + "'");
  return v;
}

}  // namespace

GaloisFieldPtr parse_field_spec(const std::string& text) {
  std::string head = text, tail;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    head = text.substr(0, colon);
    tail = text.substr(colon + 1);
  }
  std::int64_t p = 0, m = 1;
  if (auto caret = head.find('^'); caret != std::string::npos) {
    p = parse_int(std::string_view(head).substr(0, caret), text);
    m = parse_int(std::string_view(head).substr(caret + 1), text);
  } else {
    // A bare prime power q = p^m is accepted as shorthand.
    p = parse_int(head, text);
    for (std::int64_t d = 2; d * d <= p; ++d) {
      if (p % d) continue;
      std::int64_t r = p;
      m = 0;
      while (r % d == 0) r /= d, ++m;
      if (r == 1) p = d;
      else m = 1;
      break;
    }
  }
  if (p < 2 || m < 1 || m > 64) throw ParseError("invalid field spec '" + text + "'");
  if (!is_prime(static_cast<std::uint64_t>(p))) throw ParseError("field characteristic in '" + text + "' is not prime");
  if (tail.empty()) {
    if (text.find(':') != std::string::npos) throw ParseError("empty modulus in '" + text + "'");
    return GaloisField::create(static_cast<std::uint32_t>(p), static_cast<unsigned>(m));
  }
  std::vector<std::int64_t> coeffs;
  std::size_t start = 0;
  for (;;) {
    auto comma = tail.find(',', start);
    coeffs.push_back(parse_int(std::string_view(tail).substr(start, comma - start), text));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<std::int64_t>(coeffs.size()) != m + 1)
    throw ParseError("modulus in '" + text + "' must have m + 1 = " + std::to_string(m + 1) + " coefficients");
  if (coeffs.back() % p != 1 && coeffs.back() % p != 1 - p) throw ParseError("modulus in '" + text + "' is not monic");
  return GaloisField::create(static_cast<std::uint32_t>(p), coeffs);
}

}  // namespace slgen
