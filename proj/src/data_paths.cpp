#include "gdhkit/data_paths.hpp"

#include <cstdlib>
#include <fstream>

namespace gdhkit {

std::string data_dir() {
  if (const char* env = std::getenv("GDHKIT_DATA"); env && *env) return env;
#ifdef GDHKIT_BUNDLED_DATA_DIR
  return GDHKIT_BUNDLED_DATA_DIR;
#else
  return "data";
#endif
}

std::string data_file(const std::string& relative) { return data_dir() + "/" + relative; }

bool data_file_exists(const std::string& relative) {
  std::ifstream in(data_file(relative));
  return in.good();
}

}  // namespace gdhkit
