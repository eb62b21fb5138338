#ifndef CONCISE_CATEGORIZE_H_
#define CONCISE_CATEGORIZE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "concise/conllu.h"
#include "concise/text.h"
#include "concise/wordiness.h"
#include "concise/wordnet.h"

namespace concise {

// I = delete, II = replace, III = rewrite, IV = delete + replace,
// V = replace + rewrite, VI = delete + rewrite, VII = all three.
enum class RevisionCategory { kI, kII, kIII, kIV, kV, kVI, kVII, kIdentity };

std::string_view category_name(RevisionCategory c);  // "I".."VII", "Identity"
std::optional<RevisionCategory> category_from_name(std::string_view name);

struct ActionSet {
  bool del = false;
  bool replace = false;
  bool rewrite = false;

  bool operator==(const ActionSet&) const = default;
};

ActionSet actions_of(RevisionCategory c);
// Identity for the empty set.
RevisionCategory category_of(const ActionSet& a);

// Half-open range of word indices.
struct WordSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool contains(std::size_t i) const { return begin <= i && i < end; }
  bool operator==(const WordSpan&) const = default;
};

struct Replacement {
  WordSpan w;
  WordSpan c;
};

enum class EvidenceKind { kCrossingAlignment, kSubjectPredicate };

struct RewriteEvidence {
  EvidenceKind kind = EvidenceKind::kCrossingAlignment;
  std::string detail;
};

// The w -> w' -> w* chain. Indices refer to the word lists (punctuation
// dropped), not to token positions.
struct AlignmentDecomposition {
  std::vector<std::string> w;
  std::vector<std::string> c;
  std::vector<std::pair<std::size_t, std::size_t>> anchors;  // (w, c), monotone
  std::vector<std::size_t> deletions;                         // ascending
  std::vector<Replacement> replacements;                      // ascending
  // Regions handed to the rewrite action (moved words, or spans that change
  // a subject together with its predicate).
  std::vector<Replacement> rewrite_regions;
  std::vector<RewriteEvidence> rewrite_evidence;
  std::vector<std::string> w_prime;  // w minus deletions
  std::vector<std::string> w_star;   // w' with the replacements applied
};

struct DecomposeOptions {
  // Parse of w with one node per token of w.
  const DepTree* w_tree = nullptr;
  // Stock phrases with suggested replacements, used to split a replacement
  // into the phrase and a deletion. Defaults to the bundled lexicon.
  const WordinessLexicon* lexicon = nullptr;
  // Function words excluded from unique-anchor matching. Defaults to the
  // bundled list.
  const StopwordList* stopwords = nullptr;
};

// Lemma key used for anchor matching: a Porter stem of a rough base form
// (irregular tables, plural/-ly/possessive stripping).
std::string lemma_key(std::string_view word);

// Is `c` a (not necessarily contiguous) subsequence of `w`?
bool is_subsequence(const std::vector<std::string>& c, const std::vector<std::string>& w);

AlignmentDecomposition decompose(const TokenSeq& w, const TokenSeq& c,
                                 const DecomposeOptions& options = {});

ActionSet actions_of(const AlignmentDecomposition& d);
RevisionCategory classify(const AlignmentDecomposition& d);

struct Categorization {
  RevisionCategory category = RevisionCategory::kIdentity;
  ActionSet actions;
  std::vector<AlignmentDecomposition> per_reference;
};

// With several references the action sets are united: each reference shows
// one way the wordy sentence was revised.
Categorization categorize(const TokenSeq& w, const std::vector<TokenSeq>& refs,
                          const DecomposeOptions& options = {});

}  // namespace concise

#endif  // CONCISE_CATEGORIZE_H_
