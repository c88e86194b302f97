#pragma once

#include "disbessel/errors.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace disbessel::io {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 17 significant digits, enough to round-trip a double. -0 prints as 0.
std::string format_number(double value);

/// Writes through a sibling temporary file and renames it into place.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

/// Headerless single-column CSV; blank lines are skipped. Values are returned
/// as the original text so callers can parse at their own precision.
std::vector<std::string> read_column(const std::filesystem::path& path);

}  // namespace disbessel::io
