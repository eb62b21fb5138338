#include "concise/conllu.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "concise/error.h"

namespace concise {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool ParseInt(std::string_view s, int* out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string At(std::size_t line) { return " at line " + std::to_string(line); }

// Checks tree invariants; `lines[k]` is the source line of node k+1 (or 0).
int Validate(const std::vector<DepNode>& nodes,
             const std::vector<std::size_t>& lines) {
  auto line_of = [&](std::size_t k) {
    return k < lines.size() ? lines[k] : k + 1;
  };
  const int n = static_cast<int>(nodes.size());
  int root = 0;
  for (int k = 0; k < n; ++k) {
    const DepNode& node = nodes[k];
    if (node.id != k + 1) {
      throw InputError("non-sequential token id " + std::to_string(node.id) +
                       At(line_of(k)));
    }
    if (node.head == node.id) throw InputError("self-loop" + At(line_of(k)));
    if (node.head < 0 || node.head > n) {
      throw InputError("head " + std::to_string(node.head) + " out of range" +
                       At(line_of(k)));
    }
    if (node.head == 0) {
      if (root != 0) throw InputError("multiple roots" + At(line_of(k)));
      root = node.id;
    }
  }
  if (n > 0 && root == 0) throw InputError("no root" + At(line_of(0)));
  // Every node must reach the root within n steps.
  for (int k = 0; k < n; ++k) {
    int cur = nodes[k].id;
    for (int step = 0; step <= n && cur != 0; ++step) cur = nodes[cur - 1].head;
    if (cur != 0) throw InputError("cycle" + At(line_of(k)));
  }
  return root;
}

}  // namespace

DepTree DepTree::FromNodes(std::vector<DepNode> nodes,
                           std::vector<std::string> comments) {
  DepTree tree;
  tree.root_id_ = Validate(nodes, {});
  tree.nodes_ = std::move(nodes);
  tree.comments_ = std::move(comments);
  return tree;
}

std::vector<int> DepTree::children(int id) const {
  std::vector<int> out;
  for (const auto& n : nodes_) {
    if (n.head == id) out.push_back(n.id);
  }
  return out;
}

std::vector<int> DepTree::subtree(int id) const {
  std::vector<int> out{id};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int c : children(out[k])) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string DepTree::comment_value(std::string_view key) const {
  for (const auto& c : comments_) {
    std::string_view s(c);
    if (s.substr(0, 1) != "#") continue;
    s.remove_prefix(1);
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    if (s.substr(0, key.size()) != key) continue;
    s.remove_prefix(key.size());
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    if (s.substr(0, 1) != "=") continue;
    s.remove_prefix(1);
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    return std::string(s);
  }
  return {};
}

std::vector<DepTree> parse_conllu(std::string_view text) {
  std::vector<DepTree> trees;
  DepTree cur;
  std::vector<std::size_t> lines;
  bool open = false;

  auto flush = [&]() {
    if (!open) return;
    if (cur.nodes_.empty()) {
      throw InputError("sentence without tokens" + At(lines.empty() ? 0 : lines[0]));
    }
    cur.root_id_ = Validate(cur.nodes_, lines);
    trees.push_back(std::move(cur));
    cur = DepTree();
    lines.clear();
    open = false;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      flush();
      continue;
    }
    open = true;
    if (line.front() == '#') {
      cur.comments_.emplace_back(line);
      continue;
    }
    const auto cols = SplitTabs(line);
    if (cols.size() != 10) {
      throw InputError("expected 10 columns, found " +
                       std::to_string(cols.size()) + At(line_no));
    }
    const std::string_view id = cols[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos) {
      cur.extra_lines_.emplace_back(static_cast<int>(cur.nodes_.size()) + 1,
                                    std::string(line));
      continue;
    }
    DepNode node;
    if (!ParseInt(id, &node.id)) {
      throw InputError("non-integer id '" + std::string(id) + "'" + At(line_no));
    }
    if (!ParseInt(cols[6], &node.head)) {
      throw InputError("non-integer head '" + std::string(cols[6]) + "'" +
                       At(line_no));
    }
    node.form = cols[1];
    node.lemma = cols[2];
    node.upos = cols[3];
    node.xpos = cols[4];
    node.feats = cols[5];
    node.deprel = cols[7];
    node.deps = cols[8];
    node.misc = cols[9];
    cur.nodes_.push_back(std::move(node));
    lines.push_back(line_no);
  }
  flush();
  return trees;
}

std::string serialize_conllu(const std::vector<DepTree>& trees) {
  std::ostringstream out;
  for (const DepTree& tree : trees) {
    // Re-validate: a default-constructed or hand-assembled tree may be bad.
    DepTree::FromNodes(tree.nodes());
    for (const auto& c : tree.comments()) out << c << '\n';
    std::size_t extra = 0;
    const auto& extras = tree.extra_lines();
    for (const DepNode& n : tree.nodes()) {
      while (extra < extras.size() && extras[extra].first <= n.id) {
        out << extras[extra++].second << '\n';
      }
      out << n.id << '\t' << n.form << '\t' << n.lemma << '\t' << n.upos
          << '\t' << n.xpos << '\t' << n.feats << '\t' << n.head << '\t'
          << n.deprel << '\t' << n.deps << '\t' << n.misc << '\n';
    }
    while (extra < extras.size()) out << extras[extra++].second << '\n';
    out << '\n';
  }
  return out.str();
}

TokenSeq linearize(const DepTree& tree) {
  std::vector<const DepNode*> order;
  for (const auto& n : tree.nodes()) order.push_back(&n);
  std::stable_sort(order.begin(), order.end(),
                   [](const DepNode* a, const DepNode* b) { return a->id < b->id; });
  std::vector<std::string> forms;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && order[k]->id == order[k - 1]->id) {
      throw InputError("duplicate token id " + std::to_string(order[k]->id));
    }
    forms.push_back(order[k]->form);
  }
  return TokenSeq::FromSurface(forms);
}

namespace {

std::string LemmaKey(const DepNode& n) {
  std::string s = (n.lemma == "_" || n.lemma.empty()) ? n.form : n.lemma;
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::vector<RelationTriple> relation_triples(const DepTree& tree) {
  std::vector<RelationTriple> out;
  out.reserve(tree.size());
  for (const auto& n : tree.nodes()) {
    if (n.head == 0) {
      out.emplace_back("ROOT", "root", LemmaKey(n));
    } else {
      out.emplace_back(LemmaKey(tree.node(n.head)), n.deprel, LemmaKey(n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TreeAgreement tree_mismatches(const DepTree& a, const DepTree& b, bool labeled) {
  if (a.size() != b.size()) throw InputError("token mismatch");
  TreeAgreement result;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const DepNode& x = a.nodes()[k];
    const DepNode& y = b.nodes()[k];
    if (x.form != y.form) throw InputError("token mismatch");
    if (x.head != y.head || (labeled && x.deprel != y.deprel)) ++result.mismatches;
  }
  result.accuracy =
      a.size() == 0 ? 1.0
                    : static_cast<double>(a.size() - result.mismatches) /
                          static_cast<double>(a.size());
  return result;
}

}  // namespace concise
