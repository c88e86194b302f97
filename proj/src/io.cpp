#include "disbessel/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace disbessel::io {

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into " + path.string());
  }
}

std::vector<std::string> read_column(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r,");
    const std::string cell = line.substr(first, last - first + 1);
    if (cell.find(',') != std::string::npos)
      throw UsageError("signal file must have a single column: '" + line + "'");
    out.push_back(cell);
  }
  return out;
}

}  // namespace disbessel::io
