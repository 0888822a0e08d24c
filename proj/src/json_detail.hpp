// shared JSON (de)serialization helpers; internal to the library sources
#pragma once

#include "json.hpp"
#include "turancert/certificate_io.hpp"
#include "turancert/stability.hpp"

namespace turancert::detail {

nlohmann::json params_to_json(const Params& p);

// rebuilds Params through derived_params and checks every echoed derived
// field against the recomputation; throws std::invalid_argument on mismatch
Params params_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert, const Params& params, bool verified);
LoadedCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace turancert::detail
