#ifndef CONCISE_CONLLU_H_
#define CONCISE_CONLLU_H_

#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "concise/text.h"

namespace concise {

// One CoNLL-U token line. FEATS/XPOS/DEPS/MISC are carried opaquely.
struct DepNode {
  int id = 0;
  std::string form;
  std::string lemma = "_";
  std::string upos = "_";
  std::string xpos = "_";
  std::string feats = "_";
  int head = 0;
  std::string deprel = "_";
  std::string deps = "_";
  std::string misc = "_";

  bool operator==(const DepNode&) const = default;
};

// A dependency tree over nodes with ids 1..n in word order. Comment lines,
// multiword-token ranges and empty nodes are kept for serialization only.
class DepTree {
 public:
  DepTree() = default;

  // Validates: ids are 1..n in order, heads resolve, no self-loops, exactly
  // one root, acyclic. Throws InputError on violation.
  static DepTree FromNodes(std::vector<DepNode> nodes,
                           std::vector<std::string> comments = {});

  const std::vector<DepNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  int root_id() const { return root_id_; }
  const DepNode& node(int id) const { return nodes_.at(id - 1); }

  // Ids of direct dependents of `id` (0 = the artificial root), ascending.
  std::vector<int> children(int id) const;
  // `id` and all its descendants, ascending.
  std::vector<int> subtree(int id) const;

  const std::vector<std::string>& comments() const { return comments_; }
  // Raw multiword/empty-node lines, each tagged with the id of the token it
  // precedes (n + 1 for "after the last token").
  const std::vector<std::pair<int, std::string>>& extra_lines() const {
    return extra_lines_;
  }
  // Value of a "# key = value" comment, or empty.
  std::string comment_value(std::string_view key) const;

  bool operator==(const DepTree&) const = default;

 private:
  friend std::vector<DepTree> parse_conllu(std::string_view text);

  std::vector<DepNode> nodes_;
  int root_id_ = 0;
  std::vector<std::string> comments_;
  std::vector<std::pair<int, std::string>> extra_lines_;
};

// Parses every sentence block. Errors name the offending line number.
std::vector<DepTree> parse_conllu(std::string_view text);

// Serializes trees, one block each, every block terminated by a blank line.
std::string serialize_conllu(const std::vector<DepTree>& trees);

// Token forms in id order.
TokenSeq linearize(const DepTree& tree);

using RelationTriple = std::tuple<std::string, std::string, std::string>;

// (head_lemma, deprel, dependent_lemma) per node, sorted; the root node gives
// ("ROOT", "root", lemma). Lemmas are lowercased; "_" falls back to the form.
std::vector<RelationTriple> relation_triples(const DepTree& tree);

struct TreeAgreement {
  std::size_t mismatches = 0;
  double accuracy = 1.0;
};

// Attachment agreement between two parses of the same tokens. Labeled
// comparison checks (head, deprel); unlabeled checks head only. Throws
// InputError("token mismatch") when the forms differ.
TreeAgreement tree_mismatches(const DepTree& a, const DepTree& b,
                              bool labeled = true);

}  // namespace concise

#endif  // CONCISE_CONLLU_H_
