#pragma once

#include <string>

namespace hermnn {

// Full round-trip precision.
std::string format_full(double v);

// Write through a temp file in the same directory, then rename into place.
void write_file_atomic(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace hermnn
