#include "concise/resources.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "concise/error.h"

#ifndef CONCISE_DEFAULT_DATA_DIR
#define CONCISE_DEFAULT_DATA_DIR "data"
#endif

namespace concise {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("CONCISE_DATA_DIR"); env && *env) {
    return env;
  }
  return CONCISE_DEFAULT_DATA_DIR;
}

std::filesystem::path data_path(std::string_view name) {
  return data_dir() / std::string(name);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace concise
