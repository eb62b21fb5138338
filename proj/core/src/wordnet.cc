#include "concise/wordnet.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

#include "concise/error.h"
#include "concise/resources.h"

namespace concise {
namespace {

constexpr std::array<const char*, 4> kFileNames = {"noun", "verb", "adj", "adv"};

std::string Canonical(std::string_view lemma) {
  std::string s(lemma);
  for (char& c : s) {
    c = c == ' ' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

std::vector<std::string_view> SplitSpaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ParseNumber(std::string_view s, int base, std::size_t* out) {
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), *out, base);
  return ec == std::errc() && p == s.data() + s.size();
}

char PosChar(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return 'n';
    case Pos::kVerb: return 'v';
    case Pos::kAdj: return 'a';
    case Pos::kAdjSat: return 's';
    case Pos::kAdv: return 'r';
  }
  return '?';
}

struct Detachment {
  std::string_view suffix;
  std::string_view ending;
};

constexpr Detachment kNounRules[] = {{"s", ""},     {"ses", "s"},  {"xes", "x"},
                                     {"zes", "z"},  {"ches", "ch"}, {"shes", "sh"},
                                     {"men", "man"}, {"ies", "y"}};
constexpr Detachment kVerbRules[] = {{"s", ""},   {"ies", "y"}, {"es", "e"},
                                     {"es", ""},  {"ed", "e"},  {"ed", ""},
                                     {"ing", "e"}, {"ing", ""}};
constexpr Detachment kAdjRules[] = {{"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"}};

}  // namespace

std::string_view pos_name(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return "NOUN";
    case Pos::kVerb: return "VERB";
    case Pos::kAdj: return "ADJ";
    case Pos::kAdjSat: return "ADJ-S";
    case Pos::kAdv: return "ADV";
  }
  return "?";
}

std::optional<Pos> pos_from_upos(std::string_view upos) {
  if (upos == "NOUN") return Pos::kNoun;
  if (upos == "VERB") return Pos::kVerb;
  if (upos == "ADJ") return Pos::kAdj;
  if (upos == "ADJ-S") return Pos::kAdjSat;
  if (upos == "ADV") return Pos::kAdv;
  return std::nullopt;
}

std::string Synset::key() const { return offset + "-" + PosChar(pos); }

StopwordList::StopwordList(std::vector<std::string> words) {
  for (auto& w : words) words_.insert(normalize_token(w));
}

StopwordList StopwordList::Load(const std::filesystem::path& path) {
  return StopwordList(read_lines(path));
}

const StopwordList& StopwordList::Default() {
  static const StopwordList list = Load(data_path("stopwords_en.txt"));
  return list;
}

bool StopwordList::contains(std::string_view word) const {
  return words_.count(std::string(word)) > 0;
}

int WordNetDb::FileSlot(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return 0;
    case Pos::kVerb: return 1;
    case Pos::kAdj:
    case Pos::kAdjSat: return 2;
    case Pos::kAdv: return 3;
  }
  return 0;
}

std::vector<const Synset*> WordNetDb::lookup(std::string_view lemma, Pos pos) const {
  std::vector<const Synset*> out;
  const auto& idx = index_[FileSlot(pos)];
  const auto it = idx.find(Canonical(lemma));
  if (it == idx.end()) return out;
  for (std::size_t k : it->second) out.push_back(&synsets_[k]);
  return out;
}

const Synset* WordNetDb::find(std::string_view key) const {
  const auto it = by_key_.find(std::string(key));
  return it == by_key_.end() ? nullptr : &synsets_[it->second];
}

bool WordNetDb::has_lemma(std::string_view lemma) const {
  const std::string key = Canonical(lemma);
  for (const auto& idx : index_) {
    if (idx.count(key)) return true;
  }
  return false;
}

bool WordNetDb::has_lemma(std::string_view lemma, Pos pos) const {
  return index_[FileSlot(pos)].count(Canonical(lemma)) > 0;
}

std::size_t WordNetDb::index_size() const {
  std::size_t n = 0;
  for (const auto& idx : index_) n += idx.size();
  return n;
}

std::vector<std::string> WordNetDb::base_forms(std::string_view word, Pos pos) const {
  const std::string w = Canonical(word);
  std::vector<std::string> out;
  auto add = [&](std::string candidate) {
    if (has_lemma(candidate, pos) &&
        std::find(out.begin(), out.end(), candidate) == out.end()) {
      out.push_back(std::move(candidate));
    }
  };
  add(w);
  auto apply = [&](const auto& rules) {
    for (const Detachment& r : rules) {
      if (w.size() > r.suffix.size() &&
          std::string_view(w).substr(w.size() - r.suffix.size()) == r.suffix) {
        add(w.substr(0, w.size() - r.suffix.size()) + std::string(r.ending));
      }
    }
  };
  switch (pos) {
    case Pos::kNoun: apply(kNounRules); break;
    case Pos::kVerb: apply(kVerbRules); break;
    case Pos::kAdj:
    case Pos::kAdjSat: apply(kAdjRules); break;
    case Pos::kAdv: break;
  }
  return out;
}

std::vector<std::string> WordNetDb::synsets_of_word(std::string_view word) const {
  std::vector<std::string> keys;
  for (Pos pos : {Pos::kNoun, Pos::kVerb, Pos::kAdj, Pos::kAdv}) {
    for (const auto& base : base_forms(word, pos)) {
      for (const Synset* s : lookup(base, pos)) keys.push_back(s->key());
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

std::string extract_definition(std::string_view gloss) {
  std::size_t cut = gloss.size();
  for (std::size_t i = 0; i < gloss.size(); ++i) {
    if (gloss[i] != ';') continue;
    std::size_t j = i + 1;
    while (j < gloss.size() && gloss[j] == ' ') ++j;
    if (j < gloss.size() && gloss[j] == '"') {
      cut = i;
      break;
    }
  }
  std::string_view def = gloss.substr(0, cut);
  const auto b = def.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = def.find_last_not_of(" \t\r\n");
  return std::string(def.substr(b, e - b + 1));
}

namespace {

struct DataFile {
  std::string name;
  std::string content;
};

DataFile ReadWordNetFile(const std::filesystem::path& dir, const std::string& name) {
  const auto path = dir / name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("missing WordNet file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return {name, buf.str()};
}

[[noreturn]] void Malformed(const DataFile& f, std::size_t byte, const std::string& why) {
  throw InputError(f.name + ": malformed line at byte " + std::to_string(byte) +
                   " (" + why + ")");
}

template <typename Fn>
void ForEachLine(const DataFile& f, Fn&& fn) {
  std::size_t pos = 0;
  while (pos < f.content.size()) {
    std::size_t eol = f.content.find('\n', pos);
    if (eol == std::string::npos) eol = f.content.size();
    std::string_view line(f.content.data() + pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != ' ') fn(line, pos);
    pos = eol + 1;
  }
}

}  // namespace

WordNetDb load_wordnet(const std::filesystem::path& dir) {
  WordNetDb db;
  // Data files first so index entries can be resolved.
  for (int slot = 0; slot < 4; ++slot) {
    const DataFile f = ReadWordNetFile(dir, std::string("data.") + kFileNames[slot]);
    ForEachLine(f, [&](std::string_view line, std::size_t byte) {
      const std::size_t bar = line.find('|');
      if (bar == std::string_view::npos) Malformed(f, byte, "no gloss separator");
      const auto head = SplitSpaces(line.substr(0, bar));
      if (head.size() < 6) Malformed(f, byte, "short header");
      Synset s;
      s.offset = std::string(head[0]);
      if (s.offset.size() != 8 ||
          !std::all_of(s.offset.begin(), s.offset.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        Malformed(f, byte, "bad offset");
      }
      const std::string_view ss_type = head[2];
      if (ss_type == "n") s.pos = Pos::kNoun;
      else if (ss_type == "v") s.pos = Pos::kVerb;
      else if (ss_type == "a") s.pos = Pos::kAdj;
      else if (ss_type == "s") s.pos = Pos::kAdjSat;
      else if (ss_type == "r") s.pos = Pos::kAdv;
      else Malformed(f, byte, "bad ss_type");
      if (WordNetDb::FileSlot(s.pos) != slot) Malformed(f, byte, "pos/file mismatch");
      std::size_t w_cnt = 0;
      if (!ParseNumber(head[3], 16, &w_cnt) || w_cnt == 0 ||
          head.size() < 4 + 2 * w_cnt + 1) {
        Malformed(f, byte, "bad word count");
      }
      for (std::size_t k = 0; k < w_cnt; ++k) {
        std::string word(head[4 + 2 * k]);
        // Adjective position markers: "united(a)".
        if (const auto paren = word.find('('); paren != std::string::npos &&
                                               word.back() == ')') {
          word.resize(paren);
        }
        s.lemmas.push_back(std::move(word));
      }
      std::size_t p_cnt = 0;
      if (!ParseNumber(head[4 + 2 * w_cnt], 10, &p_cnt) ||
          head.size() < 5 + 2 * w_cnt + 4 * p_cnt) {
        Malformed(f, byte, "bad pointer count");
      }
      s.gloss = extract_definition(line.substr(bar + 1));
      if (s.gloss.empty()) Malformed(f, byte, "empty gloss");
      const std::string key = s.key();
      if (db.by_key_.count(key)) Malformed(f, byte, "duplicate offset");
      db.by_key_.emplace(key, db.synsets_.size());
      db.synsets_.push_back(std::move(s));
    });
  }
  for (int slot = 0; slot < 4; ++slot) {
    const DataFile f = ReadWordNetFile(dir, std::string("index.") + kFileNames[slot]);
    ForEachLine(f, [&](std::string_view line, std::size_t byte) {
      const auto cols = SplitSpaces(line);
      std::size_t synset_cnt = 0;
      std::size_t p_cnt = 0;
      if (cols.size() < 6 || !ParseNumber(cols[2], 10, &synset_cnt) ||
          !ParseNumber(cols[3], 10, &p_cnt) ||
          cols.size() != 4 + p_cnt + 2 + synset_cnt) {
        Malformed(f, byte, "bad index entry");
      }
      std::vector<std::size_t> senses;
      for (std::size_t k = 0; k < synset_cnt; ++k) {
        const std::string_view off = cols[4 + p_cnt + 2 + k];
        std::size_t found = db.synsets_.size();
        for (char c : slot == 2 ? std::string("as") : std::string(1, "nvar"[slot])) {
          const auto it = db.by_key_.find(std::string(off) + "-" + c);
          if (it != db.by_key_.end()) {
            found = it->second;
            break;
          }
        }
        if (found == db.synsets_.size()) {
          Malformed(f, byte, "unresolved offset " + std::string(off));
        }
        senses.push_back(found);
      }
      db.index_[slot][Canonical(cols[0])] = std::move(senses);
    });
  }
  return db;
}

std::size_t overlap_count(const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  std::unordered_map<std::string, long> counts;
  for (const auto& w : a) ++counts[w];
  std::size_t n = 0;
  for (const auto& w : b) {
    auto it = counts.find(w);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++n;
    }
  }
  return n;
}

LeskChoice lesk_disambiguate(std::string_view lemma, Pos pos, const TokenSeq& context,
                             const WordNetDb& db, const StopwordList& stopwords,
                             std::optional<std::size_t> exclude) {
  const auto senses = db.lookup(lemma, pos);
  if (senses.empty()) throw InputError("unknown lemma");

  std::vector<std::string> ctx_all;
  std::vector<std::string> ctx_content;
  for (std::size_t i = 0; i < context.size(); ++i) {
    if (exclude && *exclude == i) continue;
    const std::string& w = context[i].norm;
    if (w.empty()) continue;
    ctx_all.push_back(w);
    if (!stopwords.contains(w)) ctx_content.push_back(w);
  }

  LeskChoice choice;
  std::size_t best_secondary = 0;
  for (const Synset* s : senses) {
    const auto gloss_all = tokenize(s->gloss).words();
    std::vector<std::string> gloss_content;
    for (const auto& w : gloss_all) {
      if (!stopwords.contains(w)) gloss_content.push_back(w);
    }
    const std::size_t primary = overlap_count(gloss_content, ctx_content);
    const std::size_t secondary = overlap_count(gloss_all, ctx_all);
    choice.overlaps.push_back(primary);
    if (choice.synset == nullptr ||
        std::tie(primary, secondary) > std::tie(choice.overlap, best_secondary)) {
      choice.synset = s;
      choice.overlap = primary;
      best_secondary = secondary;
    }
  }
  return choice;
}

bool is_graftable_pattern(Pos word_pos, std::string_view root) {
  switch (word_pos) {
    case Pos::kNoun: return root == "NOUN" || root == "VERB";
    case Pos::kVerb: return root == "VERB";
    case Pos::kAdj: return root == "VERB" || root == "ADP";
    case Pos::kAdjSat: return root == "VERB" || root == "ADJ";
    case Pos::kAdv: return root == "ADP";
  }
  return false;
}

std::size_t PatternCensus::count(Pos pos, std::string_view root_upos) const {
  const auto it = counts.find({pos, std::string(root_upos)});
  return it == counts.end() ? 0 : it->second;
}

std::size_t PatternCensus::total() const {
  std::size_t n = 0;
  for (const auto& [k, v] : counts) n += v;
  return n;
}

PatternCensus gloss_root_pattern_census(
    const WordNetDb& db, const std::unordered_map<std::string, DepTree>& parses) {
  PatternCensus census;
  for (const Synset& s : db.synsets()) {
    const auto it = parses.find(s.key());
    if (it == parses.end() || it->second.size() == 0) {
      ++census.unparsed;
      continue;
    }
    const DepTree& tree = it->second;
    ++census.counts[{s.pos, tree.node(tree.root_id()).upos}];
  }
  return census;
}

}  // namespace concise
