#pragma once

#include <fstream>
#include <sstream>
#include <string>

inline std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(CALLAN_GOLDEN_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  std::string s = os.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}
