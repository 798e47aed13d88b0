#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cplxinfo/distributions.hpp"

namespace cplxinfo {

// Parses a distribution spec given as inline JSON ('{"kind":"normal",...}'),
// shorthand ('bern(0.5)', 'normal(0,1)', 'uniform(0,1)', 'laplace(0,1)'),
// or a path to a JSON file.
Distribution parse_distribution(const std::string& text);

Distribution parse_distribution_json(const nlohmann::json& j);

// Canonical JSON echo of a validated distribution.
nlohmann::json distribution_to_json(const Distribution& d);

} // namespace cplxinfo
