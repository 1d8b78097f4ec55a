#pragma once

#include <string>

#include <json.hpp>

#include "commprob/theorems.hpp"

namespace commprob::cli {

using Json = nlohmann::ordered_json;

/// Keys appear in a fixed order; rationals are "numerator/denominator" strings.
Json to_json(const GroupReport& report);
Json to_json(const VerificationSummary& summary);

std::string to_table(const GroupReport& report);
std::string to_table(const VerificationSummary& summary);

}  // namespace commprob::cli
