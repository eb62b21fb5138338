#include "concise/wordiness.h"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include <json.hpp>

#include "concise/error.h"
#include "concise/inflect.h"
#include "concise/resources.h"

namespace concise {
namespace {

struct ClassName {
  WordinessClass cls;
  std::string_view name;
};

constexpr std::array<ClassName, 13> kClassNames = {{
    {WordinessClass::kRunningStart, "running_start"},
    {WordinessClass::kStockPhrase, "stock_phrase"},
    {WordinessClass::kRedundantPair, "redundant_pair"},
    {WordinessClass::kExpletiveConstruction, "expletive_construction"},
    {WordinessClass::kPhrasalVerb, "phrasal_verb"},
    {WordinessClass::kNominalizationPattern, "nominalization_pattern"},
    {WordinessClass::kQualifier, "qualifier"},
    {WordinessClass::kLongSentence, "long_sentence"},
    {WordinessClass::kLongOpening, "long_opening"},
    {WordinessClass::kNegativeConstruction, "negative_construction"},
    {WordinessClass::kVagueSwamp, "vague_swamp"},
    {WordinessClass::kFancyWords, "fancy_words"},
    {WordinessClass::kImpliedInformation, "implied_information"},
}};

bool IsInflectionOf(std::string_view word, const std::string& lemma) {
  if (word == lemma) return true;
  const Inflector& inf = Inflector::Default();
  if (const auto base = inf.irregular_base(word); base && *base == lemma) return true;
  for (Inflection f : {Inflection::kThirdSingular, Inflection::kPast,
                       Inflection::kPastParticiple, Inflection::kGerund,
                       Inflection::kPlural}) {
    if (inf.inflect(lemma, f) == word) return true;
  }
  return false;
}

bool IsBeForm(std::string_view w) { return IsInflectionOf(w, "be"); }

}  // namespace

std::string_view wordiness_class_name(WordinessClass c) {
  for (const auto& cn : kClassNames) {
    if (cn.cls == c) return cn.name;
  }
  return "?";
}

std::optional<WordinessClass> wordiness_class_from_name(std::string_view name) {
  for (const auto& cn : kClassNames) {
    if (cn.name == name) return cn.cls;
  }
  return std::nullopt;
}

std::string_view action_hint_name(ActionHint a) {
  switch (a) {
    case ActionHint::kDelete: return "delete";
    case ActionHint::kReplace: return "replace";
    case ActionHint::kRewrite: return "rewrite";
  }
  return "?";
}

WordinessLexicon WordinessLexicon::Parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("lexicon: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw InputError("lexicon: expected an object with an \"entries\" array");
  }
  WordinessLexicon lex;
  std::set<std::string> ids;
  std::size_t k = 0;
  for (const auto& e : doc["entries"]) {
    const std::string where = "lexicon entry " + std::to_string(k++);
    try {
      LexiconEntry entry;
      entry.id = e.at("id").get<std::string>();
      const auto cls = wordiness_class_from_name(e.at("class").get<std::string>());
      if (!cls) throw InputError(where + ": unknown class");
      entry.cls = *cls;
      entry.match = e.at("match").get<std::vector<std::string>>();
      if (entry.match.empty()) throw InputError(where + ": empty pattern");
      const std::string action = e.at("action").get<std::string>();
      if (action == "delete") entry.action = ActionHint::kDelete;
      else if (action == "replace") entry.action = ActionHint::kReplace;
      else if (action == "rewrite") entry.action = ActionHint::kRewrite;
      else throw InputError(where + ": unknown action " + action);
      entry.suggestion = e.value("suggestion", "");
      entry.anchor_start = e.value("anchor", "") == "start";
      if (!ids.insert(entry.id).second) throw InputError(where + ": duplicate id " + entry.id);
      lex.entries_.push_back(std::move(entry));
    } catch (const nlohmann::json::exception& ex) {
      throw InputError(where + ": " + ex.what());
    }
  }
  return lex;
}

WordinessLexicon WordinessLexicon::Load(const std::filesystem::path& path) {
  return Parse(read_file(path));
}

const WordinessLexicon& WordinessLexicon::Default() {
  static const WordinessLexicon lex = Load(data_path("wordiness_lexicon.json"));
  return lex;
}

const LexiconEntry* WordinessLexicon::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

bool pattern_element_matches(std::string_view pat, const Token& token,
                             std::string_view upos) {
  if (token.norm.empty()) return false;
  if (pat == "*") return true;
  if (pat.size() > 2 && pat.front() == '{' && pat.back() == '}') {
    return !upos.empty() && pat.substr(1, pat.size() - 2) == upos;
  }
  if (pat.size() > 2 && pat.front() == '<' && pat.back() == '>') {
    return IsInflectionOf(token.norm, std::string(pat.substr(1, pat.size() - 2)));
  }
  return token.norm == normalize_token(pat);
}

std::vector<WordinessSpan> detect(const TokenSeq& sentence, const DepTree* tree,
                                  const WordinessLexicon& lexicon,
                                  const DetectOptions& options) {
  if (tree != nullptr && tree->size() != sentence.size()) {
    throw InputError("token mismatch between sentence and tree");
  }
  std::vector<std::size_t> words;  // token index of each word
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    if (!sentence[i].norm.empty()) words.push_back(i);
  }
  auto upos_of = [&](std::size_t tok) -> std::string_view {
    return tree != nullptr ? std::string_view(tree->node(static_cast<int>(tok) + 1).upos)
                           : std::string_view();
  };

  std::vector<WordinessSpan> found;
  for (const auto& entry : lexicon.entries()) {
    const std::size_t n = entry.match.size();
    for (std::size_t s = 0; s + n <= words.size(); ++s) {
      if (entry.anchor_start && s != 0) break;
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        const std::size_t tok = words[s + k];
        ok = pattern_element_matches(entry.match[k], sentence[tok], upos_of(tok));
      }
      if (ok) found.push_back({words[s], words[s + n - 1] + 1, entry.cls, entry.id});
    }
  }

  if (words.size() > options.long_sentence_words) {
    found.push_back({0, sentence.size(), WordinessClass::kLongSentence, "long-sentence"});
  }

  if (tree != nullptr && !words.empty()) {
    for (const DepNode& n : tree->nodes()) {
      if (n.deprel != "expl") continue;
      const std::size_t tok = static_cast<std::size_t>(n.id - 1);
      // The be-verb right after the expletive (copula or the head itself).
      std::size_t next = tok + 1;
      while (next < sentence.size() && sentence[next].norm.empty()) ++next;
      if (next >= sentence.size() || !IsBeForm(sentence[next].norm)) continue;
      const bool initial = tok == words.front();
      found.push_back({tok, next + 1,
                       initial ? WordinessClass::kRunningStart
                               : WordinessClass::kExpletiveConstruction,
                       initial ? "tree-running-start" : "tree-expletive"});
    }
    // First clause boundary: the first comma before the root, or where the
    // root's subject starts, whichever comes first.
    const int root = tree->root_id();
    std::size_t boundary = static_cast<std::size_t>(root - 1);
    for (int child : tree->children(root)) {
      const std::string& rel = tree->node(child).deprel;
      if (rel.rfind("nsubj", 0) == 0 || rel.rfind("csubj", 0) == 0 || rel == "expl") {
        boundary = std::min(boundary, static_cast<std::size_t>(tree->subtree(child).front() - 1));
      }
    }
    for (std::size_t i = 0; i < boundary; ++i) {
      if (sentence[i].surface == ",") {
        boundary = i;
        break;
      }
    }
    if (boundary > options.long_opening_tokens) {
      found.push_back({0, boundary, WordinessClass::kLongOpening, "tree-long-opening"});
    }
  }

  // Drop matches nested inside a longer match of the same class.
  std::vector<WordinessSpan> out;
  for (const auto& a : found) {
    bool nested = false;
    for (const auto& b : found) {
      if (&a == &b || a.cls != b.cls) continue;
      const bool inside = b.start <= a.start && a.end <= b.end;
      const bool longer = (b.end - b.start) > (a.end - a.start);
      if (inside && longer) {
        nested = true;
        break;
      }
    }
    if (!nested) out.push_back(a);
  }
  auto key = [](const WordinessSpan& s) {
    return std::make_tuple(s.start, s.end, static_cast<int>(s.cls), s.pattern_id);
  };
  std::sort(out.begin(), out.end(),
            [&](const WordinessSpan& x, const WordinessSpan& y) { return key(x) < key(y); });
  // Same span and class from different entries: keep the first id.
  out.erase(std::unique(out.begin(), out.end(),
                        [](const WordinessSpan& x, const WordinessSpan& y) {
                          return x.start == y.start && x.end == y.end && x.cls == y.cls;
                        }),
            out.end());
  return out;
}

double omega(const TokenSeq& sentence, const std::vector<WordinessSpan>& spans) {
  std::size_t words = 0;
  for (const auto& t : sentence.tokens()) words += t.norm.empty() ? 0 : 1;
  if (words == 0) return 0.0;
  std::set<std::size_t> covered;
  for (const auto& s : spans) {
    if (s.start >= s.end || s.end > sentence.size()) {
      throw InputError("span out of bounds");
    }
    for (std::size_t i = s.start; i < s.end; ++i) {
      if (!sentence[i].norm.empty()) covered.insert(i);
    }
  }
  return static_cast<double>(covered.size()) / static_cast<double>(words);
}

}  // namespace concise
