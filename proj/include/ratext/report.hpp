#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ratext/dbt.hpp"
#include "ratext/oracle.hpp"

namespace ratext {

using Json = nlohmann::json;

std::string ratext_version();

/// Exact limit-sign encoding: "+", "-", "0+", "0-" (zero limit with sign), or
/// "0" for a vanished limit coefficient.
std::string end_sign_str(const EndSign& s);
EndSign end_sign_from_str(std::string_view s);

/// Parameters appear as exact "p/q" strings under the family's own keys
/// (a/b, or alpha/beta for HDPT).
Json params_to_json(FamilyId f, const ParameterSet& p);
ParameterSet params_from_json(FamilyId f, const Json& j);

Json spec_to_json(const ExtensionSpec& spec);
ExtensionSpec spec_from_json(const Json& j);

Json certificate_to_json(const RegularityCertificate& cert);
RegularityCertificate certificate_from_json(const Json& j);

/// Ascending exact coefficient lists under "numerator"/"denominator".
Json rational_function_to_json(const RationalFunction& rf);
RationalFunction rational_function_from_json(const Json& j, char var);

/// Writes content to path via a temp file in the same directory plus rename.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace ratext
