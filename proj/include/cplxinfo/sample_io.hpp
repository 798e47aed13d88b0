#pragma once

#include <string>

#include "cplxinfo/distributions.hpp"

namespace cplxinfo {

// Reads observations from `path`: either one decimal value per line, or a CSV
// whose header names a `value` column (other columns are ignored).
SampleSet load_samples(const std::string& path, const std::string& label);

// Same parsing applied to in-memory text (exposed for tests).
SampleSet parse_samples(const std::string& text, const std::string& label);

} // namespace cplxinfo
