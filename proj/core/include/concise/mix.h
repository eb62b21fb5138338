#ifndef CONCISE_MIX_H_
#define CONCISE_MIX_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "concise/bridge.h"

namespace concise {

enum class SourceRole { kParaphrase, kCompression, kSimplification, kKeepAll };

std::optional<SourceRole> source_role_from_name(std::string_view name);
std::string_view source_role_name(SourceRole role);

struct MixSource {
  std::string name;
  std::filesystem::path path;  // source<TAB>target per line
  SourceRole role = SourceRole::kKeepAll;
  std::size_t min_words = 10;     // paraphrase: on the longer side
  double min_similarity = 0.9;    // compression/simplification
};

struct MixSpec {
  std::vector<MixSource> sources;
  std::uint64_t shuffle_seed = 0;
};

// {"shuffle_seed": 0, "sources": [{"name", "path", "role", "min_words"?,
// "min_similarity"?}]}; relative paths resolve against `base_dir`.
MixSpec parse_mix_spec(std::string_view json_text, const std::filesystem::path& base_dir);

struct ParallelPair {
  std::string source;
  std::string target;
  std::string origin;  // MixSource::name
};

struct SourceCount {
  std::string name;
  std::size_t kept = 0;
  std::size_t dropped = 0;
};

struct MixResult {
  std::vector<ParallelPair> pairs;  // shuffled
  std::vector<SourceCount> counts;  // spec order
};

// Filters every source by its role and shuffles the union with
// XorShift64(shuffle_seed). Throws InputError for unreadable sources,
// malformed lines and similarity roles without a scorer.
MixResult mix_datasets(const MixSpec& spec, SimilarityScorer* scorer);

}  // namespace concise

#endif  // CONCISE_MIX_H_
