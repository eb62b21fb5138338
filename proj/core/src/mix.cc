#include "concise/mix.h"

#include <fstream>

#include <json.hpp>

#include "concise/error.h"
#include "concise/selection.h"
#include "concise/text.h"

namespace concise {

std::optional<SourceRole> source_role_from_name(std::string_view name) {
  if (name == "paraphrase") return SourceRole::kParaphrase;
  if (name == "compression") return SourceRole::kCompression;
  if (name == "simplification") return SourceRole::kSimplification;
  if (name == "keep_all") return SourceRole::kKeepAll;
  return std::nullopt;
}

std::string_view source_role_name(SourceRole role) {
  switch (role) {
    case SourceRole::kParaphrase: return "paraphrase";
    case SourceRole::kCompression: return "compression";
    case SourceRole::kSimplification: return "simplification";
    case SourceRole::kKeepAll: return "keep_all";
  }
  return "?";
}

MixSpec parse_mix_spec(std::string_view json_text, const std::filesystem::path& base_dir) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("mix spec: ") + e.what());
  }
  MixSpec spec;
  try {
    spec.shuffle_seed = doc.value("shuffle_seed", std::uint64_t{0});
    for (const auto& s : doc.value("sources", nlohmann::json::array())) {
      MixSource src;
      src.name = s.at("name").get<std::string>();
      src.path = s.at("path").get<std::string>();
      if (src.path.is_relative()) src.path = base_dir / src.path;
      const auto role = source_role_from_name(s.at("role").get<std::string>());
      if (!role) throw InputError("mix spec: unknown role for source " + src.name);
      src.role = *role;
      src.min_words = s.value("min_words", src.min_words);
      src.min_similarity = s.value("min_similarity", src.min_similarity);
      spec.sources.push_back(std::move(src));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("mix spec: ") + e.what());
  }
  return spec;
}

MixResult mix_datasets(const MixSpec& spec, SimilarityScorer* scorer) {
  MixResult result;
  for (const MixSource& src : spec.sources) {
    const bool needs_scorer =
        src.role == SourceRole::kCompression || src.role == SourceRole::kSimplification;
    if (needs_scorer && scorer == nullptr) {
      throw InputError("source " + src.name + ": similarity filter requires scorer");
    }
    std::ifstream in(src.path);
    if (!in) throw InputError("source " + src.name + ": cannot read " + src.path.string());
    SourceCount count{src.name, 0, 0};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos) {
        throw InputError("source " + src.name + ": line " + std::to_string(line_no) +
                         " has no tab");
      }
      ParallelPair p{line.substr(0, tab), line.substr(tab + 1), src.name};
      bool keep = true;
      if (src.role == SourceRole::kParaphrase) {
        const std::size_t longer =
            std::max(tokenize(p.source).words().size(), tokenize(p.target).words().size());
        keep = longer >= src.min_words;
      } else if (needs_scorer) {
        keep = scorer->similarity(p.source, p.target) >= src.min_similarity;
      }
      if (keep) {
        ++count.kept;
        result.pairs.push_back(std::move(p));
      } else {
        ++count.dropped;
      }
    }
    result.counts.push_back(count);
  }
  XorShift64 gen(spec.shuffle_seed);
  shuffle_with(result.pairs, gen);
  return result;
}

}  // namespace concise
