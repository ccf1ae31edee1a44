#pragma once

#include <charconv>
#include <string>

namespace ctscore {

/// Shortest round-trip decimal form, independent of the C locale.
inline std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

}  // namespace ctscore
