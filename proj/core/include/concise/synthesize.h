#ifndef CONCISE_SYNTHESIZE_H_
#define CONCISE_SYNTHESIZE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "concise/bridge.h"
#include "concise/conllu.h"
#include "concise/inflect.h"
#include "concise/wordnet.h"

namespace concise {

// Word list in descending frequency; rank 1 is the most frequent word.
class FrequencyList {
 public:
  FrequencyList() = default;
  explicit FrequencyList(std::vector<std::string> words);
  static FrequencyList Load(const std::filesystem::path& path);
  static const FrequencyList& Default();

  std::optional<std::size_t> rank(std::string_view word) const;
  // rank <= k. Words outside the list are never common.
  bool is_common(std::string_view word, std::size_t k) const;
  std::size_t size() const { return ranks_.size(); }

 private:
  std::unordered_map<std::string, std::size_t> ranks_;
};

struct Transitivity {
  bool transitive = true;
  std::string preposition;  // for intransitive verbs taking a prepositional object
};

// verb<TAB>transitive|intransitive<TAB>preposition-or-"-"
class TransitivityTable {
 public:
  static TransitivityTable Load(const std::filesystem::path& path);
  static const TransitivityTable& Default();

  std::optional<Transitivity> lookup(std::string_view verb) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, Transitivity> table_;
};

struct TargetOptions {
  std::size_t common_rank = 3000;  // K: lemmas ranked <= K are skipped
};

// Lowercased lemma of a node, falling back to its form.
std::string node_lemma(const DepNode& n);

// Candidate nodes for gloss substitution: NOUN/VERB/ADJ/ADV with a WordNet
// sense, not among the K most frequent words, and not part of a WordNet
// multiword entry together with a neighbouring token.
std::vector<int> eligible_targets(const DepTree& tree, const WordNetDb& db,
                                  const FrequencyList& freq, const TargetOptions& opt = {});

// Seeded uniform choice among eligible_targets().
std::optional<int> select_target(const DepTree& tree, const WordNetDb& db,
                                 const FrequencyList& freq, std::uint64_t seed,
                                 const TargetOptions& opt = {});

struct GraftJob {
  DepTree sentence_tree;  // T_s
  int target_index = 0;   // node id of u
  const Synset* sense = nullptr;
  DepTree gloss_tree;     // T_g, root r_g
  std::uint64_t seed = 0;
};

struct GraftResult {
  DepTree tree;
  std::size_t removed = 0;  // nodes dropped by the repairs
  std::size_t added = 0;    // nodes inserted by the repairs
  std::vector<std::string> notes;
};

struct GraftResources {
  const Inflector* inflector = nullptr;           // default tables when null
  const TransitivityTable* transitivity = nullptr;  // default table when null
};

// Removes bracketed material from a gloss parse; dependents outside the
// brackets are re-attached to their nearest surviving ancestor.
DepTree prune_parentheticals(const DepTree& gloss);

// Gloss grafting. The result has |T_s| - 1 + |T_g'| - removed + added nodes,
// T_g' being the gloss tree after prune_parentheticals. Throws
// InputError("unsupported pattern") for u -> r_g patterns outside the eight
// supported ones.
GraftResult graft(const GraftJob& job, const GraftResources& res = {});

// Inflection of a token inferred from FEATS, XPOS, or its surface form.
Inflection node_inflection(const DepTree& tree, int id, const Inflector& inflector);

enum class Verdict { kKept, kDropped };
enum class DropReason { kReparseMismatch, kReparseAccuracy, kLowSimilarity, kNoCandidate };

std::string_view drop_reason_name(DropReason r);

struct SynthesisRecord {
  std::string original;
  std::string inflated;
  Verdict verdict = Verdict::kKept;
  std::optional<DropReason> reason;
  std::optional<double> similarity;
  bool unfiltered = false;  // no similarity scorer was configured
  std::string target;       // u
  std::string sense;        // synset key
  std::vector<std::string> notes;
};

// One JSON object, single line.
std::string to_json_line(const SynthesisRecord& rec);

struct FilterOptions {
  std::size_t max_mismatches = 3;
  double min_accuracy = 0.9;
  double max_dropped_similarity = 0.82;  // similarity <= this is dropped
  bool labeled = true;
};

// Drops on > max_mismatches, then accuracy < min_accuracy, then similarity <=
// bound. Without a similarity the record is flagged unfiltered. Throws
// InputError("token mismatch") when the trees cover different tokens.
SynthesisRecord filter_synthesis(SynthesisRecord rec, const DepTree& constructed,
                                 const DepTree& reparsed, std::optional<double> similarity,
                                 const FilterOptions& opt = {});

struct SynthesisContext {
  const WordNetDb* db = nullptr;
  const FrequencyList* freq = nullptr;
  const StopwordList* stopwords = nullptr;
  GraftResources graft;
  // Gloss parses keyed by Synset::key(); consulted before `parser`.
  const std::unordered_map<std::string, DepTree>* gloss_trees = nullptr;
  SentenceParser* parser = nullptr;    // gloss parsing and re-parsing
  SimilarityScorer* scorer = nullptr;  // optional
  TargetOptions target;
  FilterOptions filter;
  std::size_t rounds = 1;
};

// Select, disambiguate, graft (`rounds` times) and filter one sentence.
SynthesisRecord synthesize_sentence(const DepTree& sentence, std::uint64_t seed,
                                    const SynthesisContext& ctx);

}  // namespace concise

#endif  // CONCISE_SYNTHESIZE_H_
