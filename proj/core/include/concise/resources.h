#ifndef CONCISE_RESOURCES_H_
#define CONCISE_RESOURCES_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace concise {

// Directory holding the bundled data files (stopwords, frequency list,
// lexicons). $CONCISE_DATA_DIR overrides the compiled-in location.
std::filesystem::path data_dir();
std::filesystem::path data_path(std::string_view name);

std::string read_file(const std::filesystem::path& path);

// Non-empty, non-comment ('#') lines with surrounding whitespace trimmed.
std::vector<std::string> read_lines(const std::filesystem::path& path);

}  // namespace concise

#endif  // CONCISE_RESOURCES_H_
