#pragma once

// Worked examples recomputed from their inputs and compared with the JSON
// stored under tests/data.

#include "kostka/io.hpp"

#include <string>
#include <vector>

namespace fixtures {

std::vector<std::string> names();

// Recomputes the named example from its hard-coded input.
kostka::Json compute(const std::string& name);

// Canonical text written to and compared against tests/data/<name>.json.
std::string render(const kostka::Json& j);

std::string path(const std::string& dir, const std::string& name);

std::string read_file(const std::string& path);

}  // namespace fixtures
