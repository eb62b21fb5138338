#include "concise/categorize.h"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

#include "concise/error.h"
#include "concise/inflect.h"

namespace concise {
namespace {

using Words = std::vector<std::string>;

constexpr std::array<std::string_view, 8> kNames = {"I",  "II", "III", "IV",
                                                    "V",  "VI", "VII", "Identity"};

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Rough base form; only needs to map inflections of one word to one string.
std::string BaseGuess(std::string w) {
  if (EndsWith(w, "'s") || EndsWith(w, "’s")) {
    w.resize(w.size() - (EndsWith(w, "'s") ? 2 : 4));
  }
  if (const auto base = Inflector::Default().irregular_base(w)) return *base;
  if (EndsWith(w, "ly") && w.size() >= 7) return w.substr(0, w.size() - 2);
  if (EndsWith(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  for (std::string_view s : {"sses", "shes", "ches", "xes", "zes", "ses"}) {
    if (EndsWith(w, s)) return w.substr(0, w.size() - 2);
  }
  if (EndsWith(w, "s") && !EndsWith(w, "ss") && !EndsWith(w, "us") &&
      !EndsWith(w, "is") && w.size() > 3) {
    return w.substr(0, w.size() - 1);
  }
  return w;
}

struct Pair {
  std::size_t w;
  std::size_t c;
};

// Longest chain of pairs increasing in both coordinates; input sorted by w.
std::vector<Pair> LongestIncreasing(const std::vector<Pair>& pairs) {
  const std::size_t n = pairs.size();
  if (n == 0) return {};
  std::vector<std::size_t> len(n, 1);
  std::vector<std::ptrdiff_t> prev(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (pairs[j].c < pairs[i].c && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        prev[i] = static_cast<std::ptrdiff_t>(j);
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (len[i] > len[best]) best = i;
  }
  std::vector<Pair> out;
  for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(best); k >= 0; k = prev[k]) {
    out.push_back(pairs[k]);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// LCS over lemma keys between two index lists, preferring exact word matches
// among equally long alignments.
std::vector<Pair> GapLcs(const std::vector<std::size_t>& gw, const std::vector<std::size_t>& gc,
                         const Words& w, const Words& c, const Words& wk, const Words& ck) {
  const std::size_t n = gw.size(), m = gc.size();
  using Score = std::pair<std::size_t, std::size_t>;  // (matches, exact matches)
  std::vector<std::vector<Score>> dp(n + 1, std::vector<Score>(m + 1, {0, 0}));
  auto plus = [](Score s, bool exact) {
    return Score{s.first + 1, s.second + (exact ? 1 : 0)};
  };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      Score best = std::max(dp[i + 1][j], dp[i][j + 1]);
      if (wk[gw[i]] == ck[gc[j]]) {
        best = std::max(best, plus(dp[i + 1][j + 1], w[gw[i]] == c[gc[j]]));
      }
      dp[i][j] = best;
    }
  }
  std::vector<Pair> out;
  std::size_t i = 0, j = 0;
  while (i < n && j < m) {
    if (wk[gw[i]] == ck[gc[j]] &&
        dp[i][j] == plus(dp[i + 1][j + 1], w[gw[i]] == c[gc[j]])) {
      out.push_back({gw[i], gc[j]});
      ++i;
      ++j;
    } else if (dp[i + 1][j] == dp[i][j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

enum class UnitKind { kKeep, kDelete, kEdit, kRewrite };

struct Unit {
  UnitKind kind;
  WordSpan w;
  WordSpan c;
};

std::string Adverb(const std::string& adj) {
  if (adj.size() > 2 && EndsWith(adj, "le")) return adj.substr(0, adj.size() - 1) + "y";
  if (adj.size() > 1 && adj.back() == 'y') return adj.substr(0, adj.size() - 1) + "ily";
  return adj + "ly";
}

// Words of an entry's suggestion, with "*" / "*ly" filled from the first
// wildcard match.
Words RealizeSuggestion(const LexiconEntry& e, const Words& matched) {
  std::string wildcard;
  for (std::size_t k = 0; k < e.match.size(); ++k) {
    if (e.match[k] == "*") {
      wildcard = matched[k];
      break;
    }
  }
  Words out;
  const TokenSeq suggestion = tokenize(e.suggestion);
  for (const auto& t : suggestion.tokens()) {
    if (t.surface == "*") out.push_back(wildcard);
    else if (t.surface == "*ly") out.push_back(Adverb(wildcard));
    else if (!t.norm.empty()) out.push_back(t.norm);
  }
  return out;
}

class Decomposer {
 public:
  Decomposer(const TokenSeq& w, const TokenSeq& c, const DecomposeOptions& opt)
      : opt_(opt),
        lexicon_(opt.lexicon != nullptr ? *opt.lexicon : WordinessLexicon::Default()),
        stopwords_(opt.stopwords != nullptr ? *opt.stopwords : StopwordList::Default()) {
    if (opt.w_tree != nullptr && opt.w_tree->size() != w.size()) {
      throw InputError("token mismatch between wordy sentence and its tree");
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].norm.empty()) continue;
      d_.w.push_back(w[i].norm);
      w_token_.push_back(i);
    }
    d_.c = c.words();
    for (const auto& x : d_.w) wk_.push_back(lemma_key(x));
    for (const auto& x : d_.c) ck_.push_back(lemma_key(x));
  }

  AlignmentDecomposition Run() {
    if (is_subsequence(d_.c, d_.w)) {
      const EditScript s = lcs_align(d_.w, d_.c);
      for (const auto& op : s.ops) {
        if (op.kind == EditKind::kMatch) d_.anchors.emplace_back(op.source, op.target);
        if (op.kind == EditKind::kDelete) d_.deletions.push_back(op.source);
      }
      Finish();
      return d_;
    }
    Align();
    BuildUnits();
    Finish();
    return d_;
  }

 private:
  void Align() {
    std::unordered_map<std::string, std::vector<std::size_t>> w_content, c_content;
    for (std::size_t i = 0; i < d_.w.size(); ++i) {
      if (!stopwords_.contains(d_.w[i])) w_content[wk_[i]].push_back(i);
    }
    for (std::size_t j = 0; j < d_.c.size(); ++j) {
      if (!stopwords_.contains(d_.c[j])) c_content[ck_[j]].push_back(j);
    }
    std::vector<Pair> unique;
    for (const auto& [key, ws] : w_content) {
      const auto it = c_content.find(key);
      if (ws.size() == 1 && it != c_content.end() && it->second.size() == 1) {
        unique.push_back({ws[0], it->second[0]});
      }
    }
    std::sort(unique.begin(), unique.end(), [](Pair a, Pair b) { return a.w < b.w; });
    std::vector<Pair> backbone = LongestIncreasing(unique);

    moved_w_.assign(d_.w.size(), false);
    moved_c_.assign(d_.c.size(), false);
    for (const Pair& p : unique) {
      const bool kept = std::any_of(backbone.begin(), backbone.end(),
                                    [&](Pair b) { return b.w == p.w; });
      if (kept) continue;
      moved_w_[p.w] = true;
      moved_c_[p.c] = true;
      d_.rewrite_evidence.push_back(
          {EvidenceKind::kCrossingAlignment,
           "'" + d_.w[p.w] + "' (w " + std::to_string(p.w) + ") crosses '" + d_.c[p.c] +
               "' (c " + std::to_string(p.c) + ")"});
    }

    // Fill the gaps between backbone anchors.
    std::vector<Pair> full;
    std::size_t pw = 0, pc = 0;
    auto fill = [&](std::size_t ew, std::size_t ec) {
      std::vector<std::size_t> gw, gc;
      for (std::size_t i = pw; i < ew; ++i) {
        if (!moved_w_[i]) gw.push_back(i);
      }
      for (std::size_t j = pc; j < ec; ++j) {
        if (!moved_c_[j]) gc.push_back(j);
      }
      for (const Pair& p : GapLcs(gw, gc, d_.w, d_.c, wk_, ck_)) full.push_back(p);
    };
    for (const Pair& a : backbone) {
      fill(a.w, a.c);
      full.push_back(a);
      pw = a.w + 1;
      pc = a.c + 1;
    }
    fill(d_.w.size(), d_.c.size());
    for (const Pair& p : full) d_.anchors.emplace_back(p.w, p.c);
  }

  bool AnyMoved(const std::vector<bool>& moved, WordSpan s) const {
    for (std::size_t i = s.begin; i < s.end; ++i) {
      if (moved[i]) return true;
    }
    return false;
  }

  void BuildUnits() {
    std::vector<Unit> units;
    std::size_t pw = 0, pc = 0;
    auto gap = [&](std::size_t ew, std::size_t ec) {
      const WordSpan sw{pw, ew}, sc{pc, ec};
      if (sw.empty() && sc.empty()) return;
      UnitKind k = UnitKind::kEdit;
      if (AnyMoved(moved_w_, sw) || AnyMoved(moved_c_, sc)) k = UnitKind::kRewrite;
      else if (sc.empty()) k = UnitKind::kDelete;
      units.push_back({k, sw, sc});
    };
    for (const auto& [aw, ac] : d_.anchors) {
      gap(aw, ac);
      const bool exact = d_.w[aw] == d_.c[ac];
      units.push_back({exact ? UnitKind::kKeep : UnitKind::kEdit, {aw, aw + 1}, {ac, ac + 1}});
      pw = aw + 1;
      pc = ac + 1;
    }
    gap(d_.w.size(), d_.c.size());

    // Runs of adjacent delete/edit units: a run with any edit is one
    // replacement, a lone deletion gap stays a deletion.
    std::vector<Replacement> merged;
    for (std::size_t i = 0; i < units.size();) {
      const UnitKind k = units[i].kind;
      if (k == UnitKind::kKeep) {
        ++i;
        continue;
      }
      if (k == UnitKind::kRewrite) {
        d_.rewrite_regions.push_back({units[i].w, units[i].c});
        ++i;
        continue;
      }
      std::size_t j = i;
      bool has_edit = false;
      while (j < units.size() &&
             (units[j].kind == UnitKind::kDelete || units[j].kind == UnitKind::kEdit)) {
        has_edit |= units[j].kind == UnitKind::kEdit;
        ++j;
      }
      const WordSpan sw{units[i].w.begin, units[j - 1].w.end};
      const WordSpan sc{units[i].c.begin, units[j - 1].c.end};
      if (has_edit) {
        merged.push_back({sw, sc});
      } else {
        for (std::size_t x = sw.begin; x < sw.end; ++x) d_.deletions.push_back(x);
      }
      i = j;
    }
    for (const Replacement& r : merged) SplitByLexicon(r);
    ApplySubjectPredicateRule();
  }

  std::string UposOf(std::size_t wi) const {
    if (opt_.w_tree == nullptr) return {};
    return opt_.w_tree->node(static_cast<int>(w_token_[wi]) + 1).upos;
  }

  bool MatchAt(const LexiconEntry& e, std::size_t start) const {
    for (std::size_t k = 0; k < e.match.size(); ++k) {
      const Token t{d_.w[start + k], d_.w[start + k]};
      if (!pattern_element_matches(e.match[k], t, UposOf(start + k))) return false;
    }
    return true;
  }

  // Splits a replacement whose w side begins or ends with a lexicon phrase
  // and whose c side begins or ends (same edge) with that phrase's
  // suggestion: the phrase maps to the suggestion and the rest of w becomes
  // a deletion (c side used up) or a further replacement.
  void SplitByLexicon(const Replacement& r) {
    struct Cut {
      std::size_t len = 0;
      std::size_t sugg = 0;
      bool left = true;
    };
    Cut best;
    for (const auto& e : lexicon_.entries()) {
      if (e.suggestion.empty()) continue;
      const std::size_t n = e.match.size();
      if (n > r.w.size() || n <= best.len) continue;
      for (bool left : {true, false}) {
        const std::size_t start = left ? r.w.begin : r.w.end - n;
        if (!MatchAt(e, start)) continue;
        const Words matched(d_.w.begin() + start, d_.w.begin() + start + n);
        const Words sugg = RealizeSuggestion(e, matched);
        if (sugg.empty() || sugg.size() > r.c.size()) continue;
        const std::size_t cs = left ? r.c.begin : r.c.end - sugg.size();
        if (!std::equal(sugg.begin(), sugg.end(), d_.c.begin() + cs)) continue;
        if (n == r.w.size() && sugg.size() == r.c.size()) continue;  // nothing to split
        best = {n, sugg.size(), left};
        break;
      }
    }
    if (best.len == 0) {
      d_.replacements.push_back(r);
      return;
    }
    Replacement phrase, rest;
    if (best.left) {
      phrase = {{r.w.begin, r.w.begin + best.len}, {r.c.begin, r.c.begin + best.sugg}};
      rest = {{phrase.w.end, r.w.end}, {phrase.c.end, r.c.end}};
    } else {
      phrase = {{r.w.end - best.len, r.w.end}, {r.c.end - best.sugg, r.c.end}};
      rest = {{r.w.begin, phrase.w.begin}, {r.c.begin, phrase.c.begin}};
    }
    d_.replacements.push_back(phrase);
    if (rest.c.empty()) {
      for (std::size_t x = rest.w.begin; x < rest.w.end; ++x) d_.deletions.push_back(x);
    } else {
      SplitByLexicon(rest);
    }
  }

  // A subject and its predicate verb must not both be replaced; when they
  // are, the replacements involved become rewrites.
  void ApplySubjectPredicateRule() {
    if (opt_.w_tree == nullptr) return;
    const DepTree& tree = *opt_.w_tree;
    std::vector<std::ptrdiff_t> word_of(tree.size() + 1, -1);
    for (std::size_t i = 0; i < w_token_.size(); ++i) {
      word_of[w_token_[i] + 1] = static_cast<std::ptrdiff_t>(i);
    }
    auto owner = [&](int node) -> std::ptrdiff_t {
      const std::ptrdiff_t wi = word_of[node];
      if (wi < 0) return -1;
      for (std::size_t r = 0; r < d_.replacements.size(); ++r) {
        if (d_.replacements[r].w.contains(static_cast<std::size_t>(wi))) {
          return static_cast<std::ptrdiff_t>(r);
        }
      }
      return -1;
    };
    std::vector<bool> flagged(d_.replacements.size(), false);
    for (const DepNode& n : tree.nodes()) {
      const bool subject = n.deprel.rfind("nsubj", 0) == 0 ||
                           n.deprel.rfind("csubj", 0) == 0 || n.deprel == "expl";
      if (!subject || n.head == 0) continue;
      const std::ptrdiff_t rs = owner(n.id);
      if (rs < 0) continue;
      std::vector<int> preds = {n.head};
      for (int ch : tree.children(n.head)) {
        if (tree.node(ch).deprel == "cop") preds.push_back(ch);
      }
      for (int p : preds) {
        const std::ptrdiff_t rp = owner(p);
        if (rp < 0) continue;
        flagged[rs] = flagged[rp] = true;
        d_.rewrite_evidence.push_back({EvidenceKind::kSubjectPredicate,
                                       "subject '" + n.form + "' and predicate '" +
                                           tree.node(p).form + "' both replaced"});
        break;
      }
    }
    std::vector<Replacement> kept;
    for (std::size_t r = 0; r < d_.replacements.size(); ++r) {
      (flagged[r] ? d_.rewrite_regions : kept).push_back(d_.replacements[r]);
    }
    d_.replacements = std::move(kept);
  }

  void Finish() {
    std::sort(d_.deletions.begin(), d_.deletions.end());
    auto by_w = [](const Replacement& a, const Replacement& b) {
      return std::tie(a.w.begin, a.w.end) < std::tie(b.w.begin, b.w.end);
    };
    std::sort(d_.replacements.begin(), d_.replacements.end(), by_w);
    std::sort(d_.rewrite_regions.begin(), d_.rewrite_regions.end(), by_w);

    std::vector<bool> deleted(d_.w.size(), false);
    for (std::size_t x : d_.deletions) deleted[x] = true;
    for (std::size_t i = 0; i < d_.w.size(); ++i) {
      if (!deleted[i]) d_.w_prime.push_back(d_.w[i]);
    }
    const auto& reps = d_.replacements;
    auto emit = [&](const Replacement& rep) {
      for (std::size_t j = rep.c.begin; j < rep.c.end; ++j) d_.w_star.push_back(d_.c[j]);
    };
    std::size_t i = 0, r = 0;
    while (true) {
      while (r < reps.size() && reps[r].w.empty() && reps[r].w.begin == i) emit(reps[r++]);
      if (i >= d_.w.size()) break;
      if (r < reps.size() && reps[r].w.begin == i) {
        emit(reps[r]);
        i = reps[r++].w.end;
        continue;
      }
      if (!deleted[i]) d_.w_star.push_back(d_.w[i]);
      ++i;
    }
  }

  const DecomposeOptions& opt_;
  const WordinessLexicon& lexicon_;
  const StopwordList& stopwords_;
  AlignmentDecomposition d_;
  std::vector<std::size_t> w_token_;  // word index -> token index in w
  Words wk_, ck_;
  std::vector<bool> moved_w_, moved_c_;
};

}  // namespace

std::string_view category_name(RevisionCategory c) {
  return kNames[static_cast<std::size_t>(c)];
}

std::optional<RevisionCategory> category_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<RevisionCategory>(i);
  }
  return std::nullopt;
}

ActionSet actions_of(RevisionCategory c) {
  switch (c) {
    case RevisionCategory::kI: return {true, false, false};
    case RevisionCategory::kII: return {false, true, false};
    case RevisionCategory::kIII: return {false, false, true};
    case RevisionCategory::kIV: return {true, true, false};
    case RevisionCategory::kV: return {false, true, true};
    case RevisionCategory::kVI: return {true, false, true};
    case RevisionCategory::kVII: return {true, true, true};
    case RevisionCategory::kIdentity: return {};
  }
  return {};
}

RevisionCategory category_of(const ActionSet& a) {
  for (int i = 0; i < 7; ++i) {
    const auto c = static_cast<RevisionCategory>(i);
    if (actions_of(c) == a) return c;
  }
  return RevisionCategory::kIdentity;
}

std::string lemma_key(std::string_view word) {
  return porter_stem(BaseGuess(std::string(word)));
}

bool is_subsequence(const std::vector<std::string>& c, const std::vector<std::string>& w) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < w.size() && j < c.size(); ++i) {
    if (w[i] == c[j]) ++j;
  }
  return j == c.size();
}

AlignmentDecomposition decompose(const TokenSeq& w, const TokenSeq& c,
                                 const DecomposeOptions& options) {
  return Decomposer(w, c, options).Run();
}

ActionSet actions_of(const AlignmentDecomposition& d) {
  if (d.w == d.c) return {};
  ActionSet a;
  a.del = !d.deletions.empty();
  a.replace = !d.replacements.empty();
  a.rewrite = !d.rewrite_evidence.empty() || d.w_star != d.c;
  return a;
}

RevisionCategory classify(const AlignmentDecomposition& d) {
  if (d.w == d.c) return RevisionCategory::kIdentity;
  if (is_subsequence(d.c, d.w)) return RevisionCategory::kI;
  return category_of(actions_of(d));
}

Categorization categorize(const TokenSeq& w, const std::vector<TokenSeq>& refs,
                          const DecomposeOptions& options) {
  if (refs.empty()) throw InputError("no concise reference");
  Categorization out;
  for (const auto& c : refs) {
    out.per_reference.push_back(decompose(w, c, options));
    const ActionSet a = actions_of(classify(out.per_reference.back()));
    out.actions.del |= a.del;
    out.actions.replace |= a.replace;
    out.actions.rewrite |= a.rewrite;
  }
  out.category = category_of(out.actions);
  return out;
}

}  // namespace concise
