#include "hermnn/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "hermnn/errors.hpp"

namespace hermnn {

std::string format_full(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec) {
      throw ConfigError("cannot create directory '" +
                        target.parent_path().string() + "': " + ec.message());
    }
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ConfigError("cannot open '" + tmp.string() + "' for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
      throw ConfigError("write failed for '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    throw ConfigError("cannot rename '" + tmp.string() + "' to '" + path +
                      "': " + ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace hermnn
