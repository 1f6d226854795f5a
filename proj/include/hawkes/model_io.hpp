#pragma once

#include <string>

#include "hawkes/model.hpp"

namespace hawkes {

// Model config schema:
// {"lambda0": [..d reals..],
//  "kernel": {"type": "exponential", "alpha": [[dxd]], "beta": [[dxd]]}}
// Row convention: alpha[i][j], beta[i][j] parameterize the effect of a
// direction-i event on direction-j intensity.
ModelParams model_from_json(const std::string& json_text);
ModelParams load_model(const std::string& path);
std::string model_to_json(const ModelParams& params);

} // namespace hawkes
