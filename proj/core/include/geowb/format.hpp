#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <system_error>

namespace geowb {

// Shortest round-trip decimal form of a double, locale-independent.
// All file output (CSV, JSON, SVG) goes through this so that runs are
// byte-identical across platforms for identical inputs.
inline std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

inline std::string format_int(std::int64_t value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

// Exact inverse of format_double; returns false on malformed input or
// trailing garbage.
inline bool parse_double(const std::string& text, double& out) {
  const char* first = text.data();
  const char* last = first + text.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

}  // namespace geowb
