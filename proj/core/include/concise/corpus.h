#ifndef CONCISE_CORPUS_H_
#define CONCISE_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "concise/categorize.h"

namespace concise {

enum class Split { kBenchmark, kValidation };

struct SentencePair {
  std::string id;
  std::string wordy;
  std::vector<std::string> concise;  // at least one
  std::optional<RevisionCategory> category;  // required for benchmark rows
  std::string source_url;
  Split split = Split::kBenchmark;
};

// JSON-lines corpus, one object per line:
//   {"id", "wordy", "concise": string or [string, ...], "category": "I".."VII",
//    "source_url"?, "split"?: "benchmark" | "validation"}
// Blank lines are skipped. Throws InputError naming the line on schema
// violations and duplicate ids.
std::vector<SentencePair> parse_corpus(std::string_view text);
std::vector<SentencePair> load_corpus(const std::filesystem::path& path);

// Prediction file: JSON lines {"id", "prediction"}. Duplicate ids rejected.
std::map<std::string, std::string> parse_predictions(std::string_view text);
std::map<std::string, std::string> load_predictions(const std::filesystem::path& path);

struct CategoryStats {
  std::size_t count = 0;
  double mean_wordy_words = 0.0;
  double mean_concise_words = 0.0;  // first reference
  double mean_ter_edits = 0.0;      // wordy vs first reference
};

struct CorpusStats {
  std::map<RevisionCategory, CategoryStats> by_category;  // gold labels
  CategoryStats all;                                      // every row
};

// Word counts exclude punctuation tokens.
CorpusStats corpus_stats(const std::vector<SentencePair>& corpus);

}  // namespace concise

#endif  // CONCISE_CORPUS_H_
