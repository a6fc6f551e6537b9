#pragma once

#include <json.hpp>

#include "whsg/testfn.hpp"

namespace whsg {

/// Extended-precision number as JSON: a plain number inside the double
/// range, a decimal string otherwise.
nlohmann::json real_to_json(Real value);
/// Accepts numbers and decimal strings.
Real real_from_json(const nlohmann::json& value);

nlohmann::json descriptor_to_json(const TestFunction& tf);
/// Throws ConfigError on unknown tags or missing fields.
TestFunction descriptor_from_json(const nlohmann::json& j);

}  // namespace whsg
