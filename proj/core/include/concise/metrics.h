#ifndef CONCISE_METRICS_H_
#define CONCISE_METRICS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "concise/conllu.h"
#include "concise/text.h"
#include "concise/wordnet.h"

namespace concise {

// All sequence metrics work on TokenSeq::words(): normalized forms with
// punctuation tokens dropped. Multi-reference metrics keep the best
// reference (lowest value for error rates).

inline constexpr double kBleuEpsilon = 1e-9;

// Sentence BLEU-4. Clipping uses the per-reference maximum count and the
// brevity penalty the shortest reference, so adding a reference never lowers
// the score. Zero precisions are floored at kBleuEpsilon. Orders longer than
// the hypothesis are left out of the geometric mean. Empty hyp scores 0.
double bleu(const TokenSeq& hyp, const std::vector<TokenSeq>& refs);
double bleu(const std::vector<std::string>& hyp,
            const std::vector<std::vector<std::string>>& refs);

// Corpus-level BLEU-4 over aligned hypothesis/reference lists (pooled counts).
double corpus_bleu(const std::vector<std::vector<std::string>>& hyps,
                   const std::vector<std::vector<std::vector<std::string>>>& refs);

// METEOR (2005 parameters). Stages: exact, Porter stem, WordNet synonym
// (skipped when db is null). Each stage adds the largest set of new
// one-to-one matches, ties broken by fewest crossings.
double meteor(const TokenSeq& hyp, const std::vector<TokenSeq>& refs,
              const WordNetDb* db);
double meteor(const std::vector<std::string>& hyp,
              const std::vector<std::vector<std::string>>& refs,
              const WordNetDb* db);

enum class RougeVariant { kRouge1, kRouge2, kRougeL };

double rouge(const TokenSeq& hyp, const std::vector<TokenSeq>& refs,
             RougeVariant variant);
double rouge(const std::vector<std::string>& hyp,
             const std::vector<std::vector<std::string>>& refs,
             RougeVariant variant);

// Set-based SARI, n = 1..4. A component whose candidate and gold operation
// sets are both empty scores 1; empty on one side only scores 0.
double sari(const TokenSeq& src, const TokenSeq& hyp,
            const std::vector<TokenSeq>& refs);
double sari(const std::vector<std::string>& src,
            const std::vector<std::string>& hyp,
            const std::vector<std::vector<std::string>>& refs);

// F1 over the multiset intersection of relation triples, best reference.
double relation_f1(const DepTree& hyp, const std::vector<DepTree>& refs);

struct ConcisionAssessment {
  double gamma = 1.0;  // grammaticality
  double rho = 1.0;    // information retention
  double omega = 0.0;  // wordy fraction
  double alpha = 20.0;
  double chi = 0.0;
};

// chi = alpha^2 (gamma - 1) + alpha (rho - 1) + (1 - omega). Stores the result
// in a.chi. Throws InputError when alpha <= 1 or an input leaves [0, 1].
double concision_score(ConcisionAssessment& a);

struct MetricReport {
  double bleu = 0.0;
  double meteor = 0.0;
  double rouge1_f1 = 0.0;
  double rouge2_f1 = 0.0;
  double rougeL_f1 = 0.0;
  double sari = 0.0;
  double wer = 0.0;
  double ter_rate = 0.0;
  std::size_t ter_edits = 0;
  std::optional<double> relation_f1;
  std::optional<double> external_similarity;
  std::optional<double> aggregate;
  // Names of the terms averaged into `aggregate`.
  std::vector<std::string> aggregate_terms;
};

// Mean of bleu, meteor, rouge2_f1, sari, relation_f1, external_similarity (if
// present) and -ter_rate. Throws InputError when relation_f1 is missing unless
// `allow_partial`, in which case the missing term is left out. Records the
// value and inclusion set in the report.
double aggregate(MetricReport& report, bool allow_partial = false);

struct PairInputs {
  const TokenSeq* src = nullptr;
  const TokenSeq* hyp = nullptr;
  const std::vector<TokenSeq>* refs = nullptr;
  const WordNetDb* db = nullptr;               // optional, METEOR synonyms
  const DepTree* hyp_tree = nullptr;           // optional, relation F1
  const std::vector<DepTree>* ref_trees = nullptr;
  std::optional<double> external_similarity;
};

// Every metric for one pair, plus the aggregate over the available terms.
// Throws InputError("empty reference") when a reference has no words.
MetricReport score_pair(const PairInputs& in);

}  // namespace concise

#endif  // CONCISE_METRICS_H_
