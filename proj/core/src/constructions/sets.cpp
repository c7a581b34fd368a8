#include "slgen/constructions/sets.hpp"

#include "slgen/mat/linalg.hpp"

namespace slgen {

std::vector<GaloisField::value_type> prime_coordinates(const GaloisField& field, GaloisField::value_type a) {
  const auto p = static_cast<GaloisField::value_type>(field.characteristic());
  std::vector<GaloisField::value_type> out(field.degree());
  for (auto& c : out) {
    c = a % p;
    a /= p;
  }
  return out;
}

std::vector<GaloisField::value_type> prime_coordinates(const TowerField& tower, const TowerField::value_type& a) {
  std::vector<GaloisField::value_type> out;
  out.reserve(tower.degree_over_prime());
  for (auto c : a) {
    auto part = prime_coordinates(tower.base(), c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

template <class F, class Coords>
STSet st_common(const std::shared_ptr<const F>& field, const std::vector<typename F::value_type>& values,
                const GaloisFieldPtr& scalars, std::size_t width, Coords&& coords) {
  STSet s;
  s.size = values.size();
  std::vector<GaloisField::value_type> data;
  data.reserve(values.size() * width);
  for (const auto& v : values) {
    auto c = coords(v);
    data.insert(data.end(), c.begin(), c.end());
  }
  s.rank = values.empty() ? 0 : rank(Matrix<GaloisField>(scalars, values.size(), width, std::move(data)));
  const auto d = check_consistent(field, values);
  s.sum_zero = d.sum_zero;
  s.consistent = d.consistent;
  s.sharply_traceless = s.sum_zero && s.size >= 1 && s.rank == s.size - 1;
  return s;
}

}  // namespace

STSet check_sharply_traceless_set(const GaloisFieldPtr& field, const std::vector<GaloisField::value_type>& values) {
  const auto fp = GaloisField::prime(static_cast<std::uint32_t>(field->characteristic()));
  return st_common(field, values, fp, field->degree(),
                   [&](GaloisField::value_type v) { return prime_coordinates(*field, v); });
}

STSet check_sharply_traceless_set(const TowerFieldPtr& tower, const std::vector<TowerField::value_type>& values,
                                  Scalars scalars) {
  for (const auto& v : values)
    if (v.size() != tower->degree()) throw MismatchError("value does not belong to this tower");
  if (scalars == Scalars::base)
    return st_common(tower, values, tower->base_ptr(), tower->degree(), [](const TowerField::value_type& v) { return v; });
  const auto fp = GaloisField::prime(static_cast<std::uint32_t>(tower->characteristic()));
  return st_common(tower, values, fp, tower->degree_over_prime(),
                   [&](const TowerField::value_type& v) { return prime_coordinates(*tower, v); });
}

}  // namespace slgen
