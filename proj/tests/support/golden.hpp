#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "support/golden_values.hpp"

namespace xkg::testing {

inline std::string golden_path(const std::string& name) { return std::string(XKG_GOLDEN_DIR) + "/" + name; }

inline std::string read_golden(const std::string& name) {
  std::ifstream in(golden_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing golden file " + golden_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace xkg::testing
