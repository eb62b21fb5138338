#ifndef CONCISE_TEXT_H_
#define CONCISE_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace concise {

struct Token {
  std::string surface;
  // Casefolded with leading/trailing punctuation stripped. Empty for tokens
  // that are pure punctuation.
  std::string norm;
};

// A word-level sequence. Punctuation tokens are kept (so linearized trees
// round-trip) but carry an empty normalized form; `words()` drops them.
class TokenSeq {
 public:
  TokenSeq() = default;
  explicit TokenSeq(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  // Builds a sequence from surface strings, normalizing each one.
  static TokenSeq FromSurface(const std::vector<std::string>& surfaces);

  const std::vector<Token>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }

  // Normalized forms of the non-punctuation tokens, in order.
  std::vector<std::string> words() const;
  // Surface forms joined by single spaces.
  std::string text() const;

 private:
  std::vector<Token> tokens_;
};

// Lowercases ASCII letters and strips leading/trailing punctuation.
std::string normalize_token(std::string_view surface);

// Whitespace split; leading and trailing punctuation characters are split off
// as separate tokens ("down." -> "down", ".").
TokenSeq tokenize(std::string_view text);

// Porter (1980) stemmer. Input that is not lowercase ASCII alphabetic is
// returned unchanged.
std::string porter_stem(std::string_view word);

enum class EditKind { kMatch, kSubstitute, kInsert, kDelete, kShift };

// Indices refer to the source (a/hyp) and target (b/ref) sequences; -1 when
// the op does not touch that side. For kShift, `source` is the block start in
// the hypothesis at the time of the shift, `length` the block size and
// `target` the position the block was moved to.
struct EditOp {
  EditKind kind;
  int source = -1;
  int target = -1;
  int length = 1;
};

struct EditScript {
  std::vector<EditOp> ops;
  std::size_t cost = 0;
};

// Longest-common-subsequence alignment over normalized words. Only match,
// insert (token of b) and delete (token of a) ops are produced; cost is
// |a| + |b| - 2 * LCS.
EditScript lcs_align(const TokenSeq& a, const TokenSeq& b);
EditScript lcs_align(const std::vector<std::string>& a,
                     const std::vector<std::string>& b);

// Unit-cost Levenshtein distance between word sequences.
std::size_t levenshtein(const std::vector<std::string>& a,
                        const std::vector<std::string>& b);

// Minimal unit-cost edit script turning a into b.
EditScript levenshtein_align(const std::vector<std::string>& a,
                             const std::vector<std::string>& b);

// Levenshtein(hyp, ref) / |ref|. Throws InputError("empty reference").
double word_error_rate(const TokenSeq& hyp, const TokenSeq& ref);

struct TerResult {
  double rate = 0.0;
  std::size_t edits = 0;
  std::size_t shifts = 0;
};

// Greedy block-shift TER. Each accepted shift costs one edit and must
// strictly reduce the remaining Levenshtein distance, so edits never exceed
// the plain Levenshtein distance. Throws InputError("empty reference").
TerResult translation_edit_rate(const TokenSeq& hyp, const TokenSeq& ref);
TerResult translation_edit_rate(const std::vector<std::string>& hyp,
                                const std::vector<std::string>& ref);

}  // namespace concise

#endif  // CONCISE_TEXT_H_
