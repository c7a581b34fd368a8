#include "json_io.hpp"

#include <sstream>

#include "slgen/mat/text.hpp"

namespace slgen::cli {

namespace {

Json optional_u64(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json matrices(const std::vector<Matrix<GaloisField>>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(format_matrix(m));
  return a;
}

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto nested = [](const Json& v) { return (v.is_object() || v.is_array()) && !v.empty(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (nested(v)) {
        os << pad << k << ":\n";
        render(v, indent + 1, os);
      } else {
        os << pad << k << ": " << scalar(v) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (nested(v)) {
        os << pad << "-\n";
        render(v, indent + 1, os);
      } else {
        os << pad << "- " << scalar(v) << '\n';
      }
    }
  } else {
    os << pad << scalar(j) << '\n';
  }
}

}  // namespace

Json to_json(const GenPairCertificate& c) {
  return Json{{"field_spec", c.field_spec},
              {"n", c.n},
              {"generators", matrices(c.generators)},
              {"target", to_string(c.target)},
              {"closure_dim", c.closure_dim},
              {"expected_dim", c.expected_dim},
              {"verdict", c.verdict},
              {"strategy", c.strategy},
              {"seed", optional_u64(c.seed)},
              {"trial", optional_u64(c.trial)}};
}

Json to_json(const IdentityReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"trial", f.trial}, {"x", format_matrix(f.x)}, {"y", format_matrix(f.y)}, {"reason", f.reason}});
  return Json{{"case", to_string(r.id_case)},
              {"field_spec", r.field_spec},
              {"samples", r.samples},
              {"seed", r.seed},
              {"failures", failures},
              {"failure_count", r.failures.size()},
              {"max_pair_dim", r.max_pair_dim},
              {"max_trial", optional_u64(r.max_trial)}};
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace slgen::cli
