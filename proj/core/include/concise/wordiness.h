#ifndef CONCISE_WORDINESS_H_
#define CONCISE_WORDINESS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "concise/conllu.h"
#include "concise/text.h"

namespace concise {

enum class WordinessClass {
  kRunningStart,
  kStockPhrase,
  kRedundantPair,
  kExpletiveConstruction,
  kPhrasalVerb,
  kNominalizationPattern,
  kQualifier,
  kLongSentence,
  kLongOpening,
  kNegativeConstruction,
  // Named in the schema but without an operational definition; the bundled
  // lexicon has no entries for these.
  kVagueSwamp,
  kFancyWords,
  kImpliedInformation,
};

std::string_view wordiness_class_name(WordinessClass c);
std::optional<WordinessClass> wordiness_class_from_name(std::string_view name);

enum class ActionHint { kDelete, kReplace, kRewrite };

std::string_view action_hint_name(ActionHint a);

// One pattern element:
//   word     literal normalized token
//   <lemma>  any inflection of lemma ("<be>" matches is, was, been, ...)
//   {UPOS}   any token with that UPOS; only matches when a tree is supplied
//   *        any single word
struct LexiconEntry {
  std::string id;
  WordinessClass cls = WordinessClass::kStockPhrase;
  std::vector<std::string> match;
  ActionHint action = ActionHint::kDelete;
  std::string suggestion;     // replacement text, may be empty
  bool anchor_start = false;  // only at the first word of the sentence
};

class WordinessLexicon {
 public:
  // JSON: {"entries": [{"id", "class", "match": [...], "action",
  //                     "suggestion"?, "anchor"?: "start"}]}
  static WordinessLexicon Parse(std::string_view json_text);
  static WordinessLexicon Load(const std::filesystem::path& path);
  // The bundled lexicon, loaded once.
  static const WordinessLexicon& Default();

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  const LexiconEntry* find(std::string_view id) const;

 private:
  std::vector<LexiconEntry> entries_;
};

struct WordinessSpan {
  std::size_t start = 0;  // token indices, half-open
  std::size_t end = 0;
  WordinessClass cls = WordinessClass::kStockPhrase;
  std::string pattern_id;

  bool operator==(const WordinessSpan&) const = default;
};

struct DetectOptions {
  std::size_t long_sentence_words = 25;
  std::size_t long_opening_tokens = 8;
};

// Does pattern element `pat` accept the token? `upos` is empty without a tree.
bool pattern_element_matches(std::string_view pat, const Token& token,
                             std::string_view upos);

// Lexicon matches over the words of the sentence (punctuation is skipped but
// spans are token indices), dropping matches nested inside a longer match of
// the same class. Structural rules: long_sentence on word count; with a tree
// also running_start / expletive_construction from expl arcs and
// long_opening from the first clause boundary. The tree must have one node
// per token. Output is sorted by (start, end, class).
std::vector<WordinessSpan> detect(const TokenSeq& sentence, const DepTree* tree,
                                  const WordinessLexicon& lexicon,
                                  const DetectOptions& options = {});

// Fraction of words covered by the union of spans.
double omega(const TokenSeq& sentence, const std::vector<WordinessSpan>& spans);

}  // namespace concise

#endif  // CONCISE_WORDINESS_H_
