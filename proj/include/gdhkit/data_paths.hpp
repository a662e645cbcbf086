#pragma once

#include <string>

namespace gdhkit {

// Bundled data directory; the GDHKIT_DATA environment variable overrides
// the compiled-in default.
std::string data_dir();

std::string data_file(const std::string& relative);

// True when the file exists and is readable.
bool data_file_exists(const std::string& relative);

}  // namespace gdhkit
