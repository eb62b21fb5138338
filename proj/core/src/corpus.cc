#include "concise/corpus.h"

#include <set>
#include <sstream>

#include <json.hpp>

#include "concise/error.h"
#include "concise/resources.h"

namespace concise {
namespace {

using nlohmann::json;

template <typename Fn>
void ForEachJsonLine(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error&) {
      throw InputError("line " + std::to_string(line_no) + ": invalid JSON");
    }
    if (!obj.is_object()) {
      throw InputError("line " + std::to_string(line_no) + ": expected a JSON object");
    }
    fn(obj, line_no);
  }
}

std::string RequireString(const json& obj, const char* key, std::size_t line_no) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw InputError("line " + std::to_string(line_no) + ": missing string field '" + key + "'");
  }
  return it->get<std::string>();
}

}  // namespace

std::vector<SentencePair> parse_corpus(std::string_view text) {
  std::vector<SentencePair> rows;
  std::set<std::string> ids;
  ForEachJsonLine(text, [&](const json& obj, std::size_t line_no) {
    const std::string where = "line " + std::to_string(line_no);
    SentencePair p;
    p.id = RequireString(obj, "id", line_no);
    if (p.id.empty()) throw InputError(where + ": empty id");
    p.wordy = RequireString(obj, "wordy", line_no);
    const auto concise = obj.find("concise");
    if (concise == obj.end()) throw InputError(where + ": missing field 'concise'");
    if (concise->is_string()) {
      p.concise.push_back(concise->get<std::string>());
    } else if (concise->is_array()) {
      for (const auto& c : *concise) {
        if (!c.is_string()) throw InputError(where + ": 'concise' entries must be strings");
        p.concise.push_back(c.get<std::string>());
      }
    } else {
      throw InputError(where + ": 'concise' must be a string or list of strings");
    }
    if (p.concise.empty()) throw InputError(where + ": 'concise' is empty");
    if (const auto split = obj.find("split"); split != obj.end()) {
      if (*split == "benchmark") p.split = Split::kBenchmark;
      else if (*split == "validation") p.split = Split::kValidation;
      else throw InputError(where + ": unknown split");
    }
    if (const auto cat = obj.find("category"); cat != obj.end() && !cat->is_null()) {
      if (!cat->is_string()) throw InputError(where + ": 'category' must be a string");
      const auto c = category_from_name(cat->get<std::string>());
      if (!c || *c == RevisionCategory::kIdentity) {
        throw InputError(where + ": category must be one of I..VII");
      }
      p.category = c;
    } else if (p.split == Split::kBenchmark) {
      throw InputError(where + ": benchmark rows need a category");
    }
    if (const auto url = obj.find("source_url"); url != obj.end()) {
      if (!url->is_string()) throw InputError(where + ": 'source_url' must be a string");
      p.source_url = url->get<std::string>();
    }
    if (!ids.insert(p.id).second) throw InputError(where + ": duplicate id " + p.id);
    rows.push_back(std::move(p));
  });
  return rows;
}

std::vector<SentencePair> load_corpus(const std::filesystem::path& path) {
  try {
    return parse_corpus(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::map<std::string, std::string> parse_predictions(std::string_view text) {
  std::map<std::string, std::string> out;
  ForEachJsonLine(text, [&](const json& obj, std::size_t line_no) {
    const std::string id = RequireString(obj, "id", line_no);
    if (!out.emplace(id, RequireString(obj, "prediction", line_no)).second) {
      throw InputError("line " + std::to_string(line_no) + ": duplicate id " + id);
    }
  });
  return out;
}

std::map<std::string, std::string> load_predictions(const std::filesystem::path& path) {
  try {
    return parse_predictions(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

CorpusStats corpus_stats(const std::vector<SentencePair>& corpus) {
  CorpusStats stats;
  auto add = [](CategoryStats& s, double w, double c, double t) {
    ++s.count;
    s.mean_wordy_words += w;
    s.mean_concise_words += c;
    s.mean_ter_edits += t;
  };
  for (const auto& p : corpus) {
    const auto w = tokenize(p.wordy).words();
    const auto c = tokenize(p.concise.front()).words();
    const double edits =
        c.empty() ? static_cast<double>(w.size())
                  : static_cast<double>(translation_edit_rate(w, c).edits);
    add(stats.all, static_cast<double>(w.size()), static_cast<double>(c.size()), edits);
    if (p.category) {
      add(stats.by_category[*p.category], static_cast<double>(w.size()),
          static_cast<double>(c.size()), edits);
    }
  }
  auto finish = [](CategoryStats& s) {
    if (s.count == 0) return;
    const double n = static_cast<double>(s.count);
    s.mean_wordy_words /= n;
    s.mean_concise_words /= n;
    s.mean_ter_edits /= n;
  };
  finish(stats.all);
  for (auto& [cat, s] : stats.by_category) finish(s);
  return stats;
}

}  // namespace concise
