#include "concise/inflect.h"

#include <algorithm>
#include <array>
#include <sstream>

#include "concise/error.h"
#include "concise/resources.h"

namespace concise {
namespace {

bool IsVowel(const std::string& w, std::size_t i) {
  const char c = w[i];
  if (c == 'u' && i > 0 && w[i - 1] == 'q') return false;
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Stress-final verbs of more than one syllable that double their consonant.
constexpr std::array<std::string_view, 22> kDoublingVerbs = {
    "acquit", "admit", "begin", "commit", "compel", "control", "equip", "expel",
    "forget", "occur", "omit", "patrol", "permit", "prefer", "propel", "recur",
    "refer", "regret", "submit", "transfer", "upset", "excel"};

// True when a final consonant is doubled before -ing/-ed: a consonant-vowel-
// consonant ending on a one-syllable word ("run", "stop"), or a listed verb.
bool DoublesFinal(const std::string& w) {
  if (std::find(kDoublingVerbs.begin(), kDoublingVerbs.end(), w) != kDoublingVerbs.end()) {
    return true;
  }
  const std::size_t n = w.size();
  if (n < 3) return false;
  const char last = w[n - 1];
  if (last == 'w' || last == 'x' || last == 'y' || IsVowel(w, n - 1)) return false;
  if (!IsVowel(w, n - 2) || IsVowel(w, n - 3)) return false;
  int groups = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (IsVowel(w, i) && (i == 0 || !IsVowel(w, i - 1))) ++groups;
  }
  return groups == 1;
}

bool ConsonantY(const std::string& w) {
  return w.size() >= 2 && w.back() == 'y' && !IsVowel(w, w.size() - 2);
}

std::string AddS(const std::string& w) {
  if (ConsonantY(w)) return w.substr(0, w.size() - 1) + "ies";
  for (std::string_view s : {"s", "x", "z", "ch", "sh"}) {
    if (EndsWith(w, s)) return w + "es";
  }
  if (w.size() >= 2 && w.back() == 'o' && !IsVowel(w, w.size() - 2)) return w + "es";
  return w + "s";
}

std::string AddEd(const std::string& w) {
  if (w.empty()) return w;
  if (w.back() == 'e') return w + "d";
  if (ConsonantY(w)) return w.substr(0, w.size() - 1) + "ied";
  if (DoublesFinal(w)) return w + w.back() + "ed";
  return w + "ed";
}

std::string AddIng(const std::string& w) {
  if (EndsWith(w, "ie")) return w.substr(0, w.size() - 2) + "ying";
  if (EndsWith(w, "ee") || EndsWith(w, "ye") || EndsWith(w, "oe")) return w + "ing";
  if (w.size() > 2 && w.back() == 'e') return w.substr(0, w.size() - 1) + "ing";
  if (DoublesFinal(w)) return w + w.back() + "ing";
  return w + "ing";
}

std::string Singularize(const std::string& w) {
  if (EndsWith(w, "ies") && w.size() > 3) return w.substr(0, w.size() - 3) + "y";
  for (std::string_view s : {"ses", "xes", "zes", "ches", "shes"}) {
    if (EndsWith(w, s)) return w.substr(0, w.size() - 2);
  }
  if (EndsWith(w, "s") && !EndsWith(w, "ss") && w.size() > 1) {
    return w.substr(0, w.size() - 1);
  }
  return w;
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, '\t')) out.push_back(cell);
  return out;
}

}  // namespace

std::optional<Inflection> inflection_from_name(std::string_view name) {
  if (name == "base") return Inflection::kBase;
  if (name == "gerund") return Inflection::kGerund;
  if (name == "third_singular") return Inflection::kThirdSingular;
  if (name == "past") return Inflection::kPast;
  if (name == "past_participle") return Inflection::kPastParticiple;
  if (name == "plural") return Inflection::kPlural;
  if (name == "singular") return Inflection::kSingular;
  return std::nullopt;
}

Inflector Inflector::Load(const std::filesystem::path& verbs,
                          const std::filesystem::path& nouns) {
  Inflector inf;
  for (const auto& line : read_lines(verbs)) {
    const auto cols = SplitTabs(line);
    if (cols.size() != 5) throw InputError(verbs.string() + ": expected 5 columns: " + line);
    VerbForms f{cols[1], cols[2], cols[3] == "-" ? "" : cols[3],
                cols[4] == "-" ? "" : cols[4]};
    for (const std::string& form : {f.past, f.participle, f.third, f.gerund}) {
      if (!form.empty() && form != cols[0]) inf.base_of_.emplace(form, cols[0]);
    }
    inf.verbs_.emplace(cols[0], std::move(f));
  }
  for (const auto& line : read_lines(nouns)) {
    const auto cols = SplitTabs(line);
    if (cols.size() != 2) throw InputError(nouns.string() + ": expected 2 columns: " + line);
    inf.plural_of_.emplace(cols[0], cols[1]);
    if (cols[0] != cols[1]) inf.base_of_.emplace(cols[1], cols[0]);
  }
  // "be" has more forms than the table layout holds.
  for (std::string_view form : {"am", "are", "were"}) inf.base_of_.emplace(form, "be");
  return inf;
}

const Inflector& Inflector::Default() {
  static const Inflector inf =
      Load(data_path("irregular_verbs.tsv"), data_path("irregular_nouns.tsv"));
  return inf;
}

std::string Inflector::inflect(std::string_view lemma_in, Inflection form) const {
  const std::string lemma(lemma_in);
  if (lemma.empty()) return lemma;
  const auto verb = verbs_.find(lemma);
  switch (form) {
    case Inflection::kBase:
      return lemma;
    case Inflection::kGerund:
      if (verb != verbs_.end() && !verb->second.gerund.empty()) return verb->second.gerund;
      return AddIng(lemma);
    case Inflection::kThirdSingular:
      if (verb != verbs_.end() && !verb->second.third.empty()) return verb->second.third;
      return AddS(lemma);
    case Inflection::kPast:
      if (verb != verbs_.end()) return verb->second.past;
      return AddEd(lemma);
    case Inflection::kPastParticiple:
      if (verb != verbs_.end()) return verb->second.participle;
      return AddEd(lemma);
    case Inflection::kPlural: {
      const auto it = plural_of_.find(lemma);
      return it != plural_of_.end() ? it->second : AddS(lemma);
    }
    case Inflection::kSingular: {
      if (plural_of_.count(lemma)) return lemma;
      const auto it = base_of_.find(lemma);
      if (it != base_of_.end() && plural_of_.count(it->second)) return it->second;
      return Singularize(lemma);
    }
  }
  return lemma;
}

std::optional<std::string> Inflector::irregular_base(std::string_view word) const {
  const auto it = base_of_.find(std::string(word));
  if (it == base_of_.end()) return std::nullopt;
  return it->second;
}

std::string inflect(std::string_view lemma, Inflection form) {
  return Inflector::Default().inflect(lemma, form);
}

}  // namespace concise
