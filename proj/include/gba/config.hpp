#pragma once

// gba.conf: plain key = value lines, '#' comments. Command-line flags win.

#include <fstream>
#include <optional>
#include <string>

#include "gba/error.hpp"

namespace gba {

struct Config {
  std::optional<std::uint64_t> cap_group;
  std::optional<std::size_t> cap_omega;
  std::optional<std::size_t> cap_sweep;
  std::optional<std::string> out_dir;
  std::optional<std::string> format;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline Config parse_config(std::istream& in) {
  Config c;
  std::string line;
  int n = 0;
  auto number = [&](const std::string& v) -> std::uint64_t {
    try {
      std::size_t used = 0;
      auto x = std::stoull(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return x;
    } catch (const std::exception&) {
      throw error(errc::parse_error, "gba.conf line " + std::to_string(n) + ": not a number: " + v);
    }
  };
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw error(errc::parse_error, "gba.conf line " + std::to_string(n) + ": expected key = value");
    const auto key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "cap_group") c.cap_group = number(val);
    else if (key == "cap_omega") c.cap_omega = number(val);
    else if (key == "cap_sweep") c.cap_sweep = number(val);
    else if (key == "out_dir") c.out_dir = val;
    else if (key == "format") c.format = val;
    else throw error(errc::parse_error, "gba.conf line " + std::to_string(n) + ": unknown key " + key);
  }
  return c;
}

inline Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  return parse_config(in);
}

}  // namespace gba
