#pragma once

#include <string>

#include "json.hpp"
#include "slgen/identities/identities.hpp"
#include "slgen/lie/certificate.hpp"

namespace slgen::cli {

using Json = nlohmann::json;

Json to_json(const GenPairCertificate& c);
Json to_json(const IdentityReport& r);

/// Indented "key: value" rendering of a JSON document for --output text.
std::string render_text(const Json& j);

}  // namespace slgen::cli
