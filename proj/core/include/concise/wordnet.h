#ifndef CONCISE_WORDNET_H_
#define CONCISE_WORDNET_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "concise/conllu.h"
#include "concise/text.h"

namespace concise {

enum class Pos { kNoun, kVerb, kAdj, kAdjSat, kAdv };

std::string_view pos_name(Pos pos);  // NOUN, VERB, ADJ, ADJ-S, ADV
std::optional<Pos> pos_from_upos(std::string_view upos);

struct Synset {
  std::string offset;  // 8 digits, unique within its data file
  Pos pos = Pos::kNoun;
  std::vector<std::string> lemmas;  // as in the data file, '_' for spaces
  std::string gloss;                // definition only, usage examples cut

  // "01744611-v"; satellites use 's'.
  std::string key() const;
};

class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(std::vector<std::string> words);
  static StopwordList Load(const std::filesystem::path& path);
  // The bundled 127-word English list.
  static const StopwordList& Default();

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Immutable in-memory WordNet 3.0 database.
class WordNetDb {
 public:
  // Synsets of (lemma, pos) in index-file (sense frequency) order. Adjective
  // lookups return both head adjectives and satellites. Lemma is matched
  // case-insensitively, spaces and underscores are equivalent.
  std::vector<const Synset*> lookup(std::string_view lemma, Pos pos) const;

  const Synset* find(std::string_view key) const;
  bool has_lemma(std::string_view lemma) const;  // any part of speech
  bool has_lemma(std::string_view lemma, Pos pos) const;

  // Candidate base forms of an inflected word that exist in the index, found
  // with WordNet's suffix detachment rules (no exception lists). The word
  // itself comes first when it is indexed.
  std::vector<std::string> base_forms(std::string_view word, Pos pos) const;

  // Keys of every synset containing `word` or one of its base forms, any pos.
  std::vector<std::string> synsets_of_word(std::string_view word) const;

  const std::vector<Synset>& synsets() const { return synsets_; }
  std::size_t index_size() const;

 private:
  friend WordNetDb load_wordnet(const std::filesystem::path& dir);

  static int FileSlot(Pos pos);

  std::vector<Synset> synsets_;
  std::unordered_map<std::string, std::size_t> by_key_;
  // Per data file (noun, verb, adj, adv): lemma -> synset indices.
  std::unordered_map<std::string, std::vector<std::size_t>> index_[4];
};

// Reads index.{noun,verb,adj,adv} and data.{noun,verb,adj,adv} from `dir`.
// Throws InputError naming the file (and byte offset) on failure.
WordNetDb load_wordnet(const std::filesystem::path& dir);

// Definition part of a data-line gloss: text up to the first ';' that is
// followed by a quoted example, trimmed.
std::string extract_definition(std::string_view gloss_field);

struct LeskChoice {
  const Synset* synset = nullptr;
  std::size_t overlap = 0;           // content-word overlap of the winner
  std::vector<std::size_t> overlaps;  // per candidate, index-file order
};

// Simplified Lesk: pick the sense whose gloss shares the most
// stopword-filtered normalized tokens (multiset intersection) with the
// context. Ties go to the sense with the larger unfiltered overlap, then to
// the more frequent sense. `exclude` removes the target token from the
// context. Throws InputError("unknown lemma") when there are no senses.
LeskChoice lesk_disambiguate(std::string_view lemma, Pos pos,
                             const TokenSeq& context, const WordNetDb& db,
                             const StopwordList& stopwords,
                             std::optional<std::size_t> exclude = std::nullopt);

// Multiset intersection size of two word lists.
std::size_t overlap_count(const std::vector<std::string>& a,
                          const std::vector<std::string>& b);

// The eight word -> gloss-root POS patterns the grafting rules support.
bool is_graftable_pattern(Pos word_pos, std::string_view root_upos);

struct PatternCensus {
  // (word pos, gloss root UPOS) -> synset count.
  std::map<std::pair<Pos, std::string>, std::size_t> counts;
  std::size_t unparsed = 0;

  std::size_t count(Pos pos, std::string_view root_upos) const;
  std::size_t total() const;
};

// Tallies the POS of each synset against the UPOS of its gloss parse root.
// `parses` is keyed by Synset::key(); synsets without a parse are counted in
// `unparsed`.
PatternCensus gloss_root_pattern_census(
    const WordNetDb& db, const std::unordered_map<std::string, DepTree>& parses);

}  // namespace concise

#endif  // CONCISE_WORDNET_H_
