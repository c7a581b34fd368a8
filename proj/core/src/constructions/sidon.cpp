#include "slgen/constructions/sidon.hpp"

#include <unordered_set>

namespace slgen {

namespace {

bool sums_distinct(const SidonSet& s, bool with_doubles) {
  const auto& a = s.elems;
  if (a.empty() || a.front() != 0) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] <= a[i - 1]) return false;
  std::unordered_set<std::int64_t> sums;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = with_doubles ? i : i + 1; j < a.size(); ++j)
      if (!sums.insert(a[i] + a[j]).second) return false;
  return true;
}

}  // namespace

bool is_distinct_sum_set(const SidonSet& s) { return sums_distinct(s, false); }
bool is_sidon(const SidonSet& s) { return sums_distinct(s, true); }

SidonSet sidon_greedy(unsigned n) {
  if (n < 1) throw PreconditionError("sidon_greedy(): n must be >= 1");
  SidonSet s{{0}};
  std::unordered_set<std::int64_t> sums{0};
  for (std::int64_t c = 1; s.elems.size() < n + 1; ++c) {
    bool ok = !sums.contains(2 * c);
    for (std::size_t i = 0; ok && i < s.elems.size(); ++i) ok = !sums.contains(s.elems[i] + c);
    if (!ok) continue;
    for (auto a : s.elems) sums.insert(a + c);
    sums.insert(2 * c);
    s.elems.push_back(c);
  }
  return s;
}

SidonSet sidon_erdos_turan(unsigned n) {
  if (n < 1) throw PreconditionError("sidon_erdos_turan(): n must be >= 1");
  std::int64_t p = n + 1;
  while (!is_prime(static_cast<std::uint64_t>(p))) ++p;
  SidonSet s;
  for (std::int64_t k = 0; k <= n; ++k) s.elems.push_back(2 * p * k + (k * k) % p);
  return s;
}

std::vector<std::int64_t> sidon_diagonal(const SidonSet& s) {
  if (s.elems.size() < 2) throw PreconditionError("sidon_diagonal(): need at least one nonzero element");
  std::vector<std::int64_t> out(s.elems.begin() + 1, s.elems.end());
  std::int64_t sum = 0;
  for (auto a : out) sum += a;
  out.push_back(-sum);
  return out;
}

DiagonalSet<GaloisField> consistent_from_sidon(const SidonSet& s, const GaloisFieldPtr& field) {
  if (field->characteristic() == 2) throw PreconditionError("consistent_from_sidon(): characteristic must be odd");
  std::vector<GaloisField::value_type> values;
  for (auto a : sidon_diagonal(s)) values.push_back(field->from_int(a));
  auto d = check_consistent(field, std::move(values));
  if (!d.consistent) throw ConsistencyLost("diagonal set is no longer consistent over " + field->spec());
  return d;
}

}  // namespace slgen
