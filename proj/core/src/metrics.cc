#include "concise/metrics.h"

#include <algorithm>
#include <array>
#include <iterator>
#include <stdexcept>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include "concise/error.h"

namespace concise {
namespace {

using Words = std::vector<std::string>;
using NgramCounts = std::map<Words, std::size_t>;

NgramCounts CountNgrams(const Words& w, std::size_t n) {
  NgramCounts counts;
  if (w.size() < n) return counts;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    ++counts[Words(w.begin() + i, w.begin() + i + n)];
  }
  return counts;
}

std::set<Words> NgramSet(const Words& w, std::size_t n) {
  std::set<Words> out;
  for (const auto& [g, c] : CountNgrams(w, n)) out.insert(g);
  return out;
}

std::vector<Words> AllWords(const std::vector<TokenSeq>& seqs) {
  std::vector<Words> out;
  out.reserve(seqs.size());
  for (const auto& s : seqs) out.push_back(s.words());
  return out;
}

void RequireRefs(std::size_t n) {
  if (n == 0) throw InputError("no references");
}

double F1(double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0.0; }

// Clipped matches and totals per order, pooled into `match`/`total`.
void BleuCounts(const Words& hyp, const std::vector<Words>& refs,
                std::array<double, 4>& match, std::array<double, 4>& total) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const NgramCounts h = CountNgrams(hyp, n);
    NgramCounts max_ref;
    for (const auto& r : refs) {
      for (const auto& [g, c] : CountNgrams(r, n)) {
        max_ref[g] = std::max(max_ref[g], c);
      }
    }
    for (const auto& [g, c] : h) {
      const auto it = max_ref.find(g);
      if (it != max_ref.end()) match[n - 1] += std::min(c, it->second);
      total[n - 1] += c;
    }
  }
}

double BleuFromCounts(const std::array<double, 4>& match,
                      const std::array<double, 4>& total, double hyp_len,
                      double ref_len) {
  if (hyp_len == 0) return 0.0;
  double log_sum = 0.0;
  int orders = 0;
  for (int n = 0; n < 4; ++n) {
    if (total[n] == 0) continue;
    const double p = std::max(match[n] / total[n], kBleuEpsilon);
    log_sum += std::log(p);
    ++orders;
  }
  const double bp = hyp_len < ref_len ? std::exp(1.0 - ref_len / hyp_len) : 1.0;
  return bp * std::exp(log_sum / orders);
}

// --- METEOR alignment -----------------------------------------------------

struct Alignment {
  std::vector<std::pair<int, int>> pairs;  // (hyp index, ref index)
};

std::size_t CrossingsWith(const std::vector<std::pair<int, int>>& pairs, int i,
                          int j) {
  std::size_t n = 0;
  for (const auto& [a, b] : pairs) {
    if ((a < i && b > j) || (a > i && b < j)) ++n;
  }
  return n;
}

class StageSearch {
 public:
  StageSearch(std::vector<std::vector<int>> candidates,
              std::vector<std::pair<int, int>> fixed, std::size_t ref_len)
      : cand_(std::move(candidates)),
        current_(std::move(fixed)),
        base_(current_.size()),
        ref_used_(ref_len, false) {
    for (const auto& [i, j] : current_) ref_used_[j] = true;
    remaining_.assign(cand_.size() + 1, 0);
    for (std::size_t i = cand_.size(); i-- > 0;) {
      remaining_[i] = remaining_[i + 1] + (cand_[i].empty() ? 0 : 1);
    }
  }

  std::vector<std::pair<int, int>> Run() {
    best_ = current_;
    Dfs(0, 0);
    return best_;
  }

 private:
  static constexpr std::size_t kBudget = 200000;

  void Dfs(std::size_t i, std::size_t crossings) {
    const std::size_t added = current_.size() - base_;
    const std::size_t best_added = best_.size() - base_;
    if (added + remaining_[i] < best_added) return;
    if (added + remaining_[i] == best_added && crossings >= best_crossings_) return;
    if (i == cand_.size()) {
      if (added > best_added || crossings < best_crossings_) {
        best_ = current_;
        best_crossings_ = crossings;
      }
      return;
    }
    if (++visited_ > kBudget && best_added > 0) return;
    for (int j : cand_[i]) {
      if (ref_used_[j]) continue;
      const std::size_t c = CrossingsWith(current_, static_cast<int>(i), j);
      ref_used_[j] = true;
      current_.emplace_back(static_cast<int>(i), j);
      Dfs(i + 1, crossings + c);
      current_.pop_back();
      ref_used_[j] = false;
    }
    Dfs(i + 1, crossings);
  }

  std::vector<std::vector<int>> cand_;
  std::vector<std::pair<int, int>> current_;
  std::size_t base_;
  std::vector<bool> ref_used_;
  std::vector<std::size_t> remaining_;
  std::vector<std::pair<int, int>> best_;
  std::size_t best_crossings_ = std::numeric_limits<std::size_t>::max();
  std::size_t visited_ = 0;
};

double MeteorSingle(const Words& hyp, const Words& ref, const WordNetDb* db) {
  if (hyp.empty() || ref.empty()) return 0.0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> hyp_used(hyp.size(), false);
  std::vector<bool> ref_used(ref.size(), false);

  std::vector<std::string> hyp_stem, ref_stem;
  std::vector<std::vector<std::string>> hyp_syn, ref_syn;
  for (const auto& w : hyp) hyp_stem.push_back(porter_stem(w));
  for (const auto& w : ref) ref_stem.push_back(porter_stem(w));
  if (db != nullptr) {
    for (const auto& w : hyp) hyp_syn.push_back(db->synsets_of_word(w));
    for (const auto& w : ref) ref_syn.push_back(db->synsets_of_word(w));
  }

  auto shares_synset = [&](std::size_t i, std::size_t j) {
    const auto& a = hyp_syn[i];
    const auto& b = ref_syn[j];
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
      if (a[x] == b[y]) return true;
      a[x] < b[y] ? ++x : ++y;
    }
    return false;
  };

  for (int stage = 0; stage < (db != nullptr ? 3 : 2); ++stage) {
    std::vector<std::vector<int>> cand(hyp.size());
    bool any = false;
    for (std::size_t i = 0; i < hyp.size(); ++i) {
      if (hyp_used[i]) continue;
      for (std::size_t j = 0; j < ref.size(); ++j) {
        if (ref_used[j]) continue;
        bool ok = false;
        if (stage == 0) ok = hyp[i] == ref[j];
        else if (stage == 1) ok = hyp_stem[i] == ref_stem[j];
        else ok = shares_synset(i, j);
        if (ok) {
          cand[i].push_back(static_cast<int>(j));
          any = true;
        }
      }
    }
    if (!any) continue;
    pairs = StageSearch(std::move(cand), pairs, ref.size()).Run();
    for (const auto& [i, j] : pairs) {
      hyp_used[i] = true;
      ref_used[j] = true;
    }
  }

  const double m = static_cast<double>(pairs.size());
  if (m == 0) return 0.0;
  std::sort(pairs.begin(), pairs.end());
  std::size_t chunks = 1;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (pairs[k].first != pairs[k - 1].first + 1 ||
        pairs[k].second != pairs[k - 1].second + 1) {
      ++chunks;
    }
  }
  const double p = m / hyp.size();
  const double r = m / ref.size();
  const double fmean = 10 * p * r / (r + 9 * p);
  const double penalty = 0.5 * std::pow(static_cast<double>(chunks) / m, 3);
  return fmean * (1 - penalty);
}

double RougeSingle(const Words& hyp, const Words& ref, RougeVariant v) {
  double overlap = 0, hyp_total = 0, ref_total = 0;
  if (v == RougeVariant::kRougeL) {
    const EditScript s = lcs_align(hyp, ref);
    overlap = static_cast<double>(hyp.size() + ref.size() - s.cost) / 2;
    hyp_total = static_cast<double>(hyp.size());
    ref_total = static_cast<double>(ref.size());
  } else {
    const std::size_t n = v == RougeVariant::kRouge1 ? 1 : 2;
    const NgramCounts h = CountNgrams(hyp, n);
    const NgramCounts r = CountNgrams(ref, n);
    for (const auto& [g, c] : h) {
      hyp_total += c;
      const auto it = r.find(g);
      if (it != r.end()) overlap += std::min(c, it->second);
    }
    for (const auto& [g, c] : r) ref_total += c;
  }
  if (hyp_total == 0 || ref_total == 0) return 0.0;
  return F1(overlap / hyp_total, overlap / ref_total);
}

std::size_t SetIntersection(const std::set<Words>& a, const std::set<Words>& b) {
  std::size_t n = 0;
  for (const auto& g : a) n += b.count(g);
  return n;
}

std::set<Words> SetMinus(const std::set<Words>& a, const std::set<Words>& b) {
  std::set<Words> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

std::set<Words> SetAnd(const std::set<Words>& a, const std::set<Words>& b) {
  std::set<Words> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

double SetF1(const std::set<Words>& cand, const std::set<Words>& gold) {
  if (cand.empty() && gold.empty()) return 1.0;
  if (cand.empty() || gold.empty()) return 0.0;
  const double hit = static_cast<double>(SetIntersection(cand, gold));
  return F1(hit / cand.size(), hit / gold.size());
}

double SetPrecision(const std::set<Words>& cand, const std::set<Words>& gold) {
  if (cand.empty() && gold.empty()) return 1.0;
  if (cand.empty() || gold.empty()) return 0.0;
  return static_cast<double>(SetIntersection(cand, gold)) / cand.size();
}

double SariSingle(const Words& src, const Words& hyp, const Words& ref) {
  double total = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = NgramSet(src, n);
    const auto h = NgramSet(hyp, n);
    const auto r = NgramSet(ref, n);
    const double keep = SetF1(SetAnd(s, h), SetAnd(s, r));
    const double add = SetF1(SetMinus(h, s), SetMinus(r, s));
    const double del = SetPrecision(SetMinus(s, h), SetMinus(s, r));
    total += (keep + add + del) / 3;
  }
  return total / 4;
}

}  // namespace

double bleu(const std::vector<std::string>& hyp,
            const std::vector<std::vector<std::string>>& refs) {
  RequireRefs(refs.size());
  std::array<double, 4> match{}, total{};
  BleuCounts(hyp, refs, match, total);
  std::size_t shortest = refs.front().size();
  for (const auto& r : refs) shortest = std::min(shortest, r.size());
  return BleuFromCounts(match, total, static_cast<double>(hyp.size()),
                        static_cast<double>(shortest));
}

double bleu(const TokenSeq& hyp, const std::vector<TokenSeq>& refs) {
  return bleu(hyp.words(), AllWords(refs));
}

double corpus_bleu(const std::vector<std::vector<std::string>>& hyps,
                   const std::vector<std::vector<std::vector<std::string>>>& refs) {
  if (hyps.size() != refs.size()) throw InputError("hypothesis/reference count mismatch");
  std::array<double, 4> match{}, total{};
  double hyp_len = 0, ref_len = 0;
  for (std::size_t k = 0; k < hyps.size(); ++k) {
    RequireRefs(refs[k].size());
    BleuCounts(hyps[k], refs[k], match, total);
    hyp_len += static_cast<double>(hyps[k].size());
    std::size_t shortest = refs[k].front().size();
    for (const auto& r : refs[k]) shortest = std::min(shortest, r.size());
    ref_len += static_cast<double>(shortest);
  }
  return BleuFromCounts(match, total, hyp_len, ref_len);
}

double meteor(const std::vector<std::string>& hyp,
              const std::vector<std::vector<std::string>>& refs, const WordNetDb* db) {
  RequireRefs(refs.size());
  double best = 0.0;
  for (const auto& r : refs) best = std::max(best, MeteorSingle(hyp, r, db));
  return best;
}

double meteor(const TokenSeq& hyp, const std::vector<TokenSeq>& refs,
              const WordNetDb* db) {
  return meteor(hyp.words(), AllWords(refs), db);
}

double rouge(const std::vector<std::string>& hyp,
             const std::vector<std::vector<std::string>>& refs, RougeVariant variant) {
  RequireRefs(refs.size());
  double best = 0.0;
  for (const auto& r : refs) best = std::max(best, RougeSingle(hyp, r, variant));
  return best;
}

double rouge(const TokenSeq& hyp, const std::vector<TokenSeq>& refs,
             RougeVariant variant) {
  return rouge(hyp.words(), AllWords(refs), variant);
}

double sari(const std::vector<std::string>& src, const std::vector<std::string>& hyp,
            const std::vector<std::vector<std::string>>& refs) {
  RequireRefs(refs.size());
  double best = 0.0;
  for (const auto& r : refs) best = std::max(best, SariSingle(src, hyp, r));
  return best;
}

double sari(const TokenSeq& src, const TokenSeq& hyp, const std::vector<TokenSeq>& refs) {
  return sari(src.words(), hyp.words(), AllWords(refs));
}

double relation_f1(const DepTree& hyp, const std::vector<DepTree>& refs) {
  RequireRefs(refs.size());
  const auto h = relation_triples(hyp);
  double best = 0.0;
  for (const auto& ref : refs) {
    const auto r = relation_triples(ref);
    std::vector<RelationTriple> common;
    std::set_intersection(h.begin(), h.end(), r.begin(), r.end(),
                          std::back_inserter(common));
    if (h.empty() || r.empty()) continue;
    const double hit = static_cast<double>(common.size());
    best = std::max(best, F1(hit / h.size(), hit / r.size()));
  }
  return best;
}

double concision_score(ConcisionAssessment& a) {
  if (!(a.alpha > 1)) throw InputError("alpha must exceed 1");
  for (double v : {a.gamma, a.rho, a.omega}) {
    if (!(v >= 0 && v <= 1)) throw InputError("gamma, rho and omega must lie in [0, 1]");
  }
  a.chi = a.alpha * a.alpha * (a.gamma - 1) + a.alpha * (a.rho - 1) + (1 - a.omega);
  return a.chi;
}

double aggregate(MetricReport& report, bool allow_partial) {
  if (!report.relation_f1 && !allow_partial) {
    throw InputError("aggregate requires relation_f1");
  }
  std::vector<std::pair<std::string, double>> terms = {
      {"bleu", report.bleu},
      {"meteor", report.meteor},
      {"rouge2_f1", report.rouge2_f1},
      {"sari", report.sari}};
  if (report.relation_f1) terms.emplace_back("relation_f1", *report.relation_f1);
  if (report.external_similarity) {
    terms.emplace_back("external_similarity", *report.external_similarity);
  }
  terms.emplace_back("-ter_rate", -report.ter_rate);
  double sum = 0;
  report.aggregate_terms.clear();
  for (const auto& [name, v] : terms) {
    sum += v;
    report.aggregate_terms.push_back(name);
  }
  report.aggregate = sum / static_cast<double>(terms.size());
  return *report.aggregate;
}

MetricReport score_pair(const PairInputs& in) {
  if (in.src == nullptr || in.hyp == nullptr || in.refs == nullptr) {
    throw std::invalid_argument("score_pair: src, hyp and refs are required");
  }
  RequireRefs(in.refs->size());
  const Words src = in.src->words();
  const Words hyp = in.hyp->words();
  const std::vector<Words> refs = AllWords(*in.refs);
  for (const auto& r : refs) {
    if (r.empty()) throw InputError("empty reference");
  }
  MetricReport rep;
  rep.bleu = bleu(hyp, refs);
  rep.meteor = meteor(hyp, refs, in.db);
  rep.rouge1_f1 = rouge(hyp, refs, RougeVariant::kRouge1);
  rep.rouge2_f1 = rouge(hyp, refs, RougeVariant::kRouge2);
  rep.rougeL_f1 = rouge(hyp, refs, RougeVariant::kRougeL);
  rep.sari = sari(src, hyp, refs);
  rep.wer = std::numeric_limits<double>::infinity();
  rep.ter_rate = std::numeric_limits<double>::infinity();
  for (const auto& r : refs) {
    rep.wer = std::min(rep.wer, static_cast<double>(levenshtein(hyp, r)) / r.size());
    const TerResult t = translation_edit_rate(hyp, r);
    if (t.rate < rep.ter_rate) {
      rep.ter_rate = t.rate;
      rep.ter_edits = t.edits;
    }
  }
  if (in.hyp_tree != nullptr && in.ref_trees != nullptr && !in.ref_trees->empty()) {
    rep.relation_f1 = relation_f1(*in.hyp_tree, *in.ref_trees);
  }
  rep.external_similarity = in.external_similarity;
  aggregate(rep, /*allow_partial=*/true);
  return rep;
}

}  // namespace concise
