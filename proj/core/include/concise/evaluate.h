#ifndef CONCISE_EVALUATE_H_
#define CONCISE_EVALUATE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "concise/bridge.h"
#include "concise/categorize.h"
#include "concise/conllu.h"
#include "concise/corpus.h"
#include "concise/metrics.h"
#include "concise/wordnet.h"

namespace concise {

// CoNLL-U trees grouped by their "# id = ..." (or "# sent_id = ...") comment,
// in file order. Throws InputError for a tree without an id.
std::map<std::string, std::vector<DepTree>> group_trees_by_id(const std::vector<DepTree>& trees);

struct EvaluateOptions {
  const WordNetDb* db = nullptr;  // METEOR synonym stage
  // Relation F1 runs only when both are given; every row needs a parse.
  const std::map<std::string, std::vector<DepTree>>* pred_trees = nullptr;
  const std::map<std::string, std::vector<DepTree>>* ref_trees = nullptr;
  SimilarityScorer* scorer = nullptr;  // external_similarity, best reference
  bool corpus_bleu = false;
};

struct RowReport {
  std::string id;
  std::optional<RevisionCategory> category;
  MetricReport metrics;
};

struct SummaryRow {
  std::string label;  // "I".."VII" or "All"
  std::size_t count = 0;
  MetricReport mean;  // field-wise macro mean over the rows
  double mean_ter_edits = 0.0;
};

struct EvaluationReport {
  std::vector<RowReport> rows;        // corpus order
  std::vector<SummaryRow> summary;    // categories present, then All
  std::vector<std::string> aggregate_terms;
  std::optional<double> corpus_bleu;
};

// Scores every corpus row against its prediction. Throws InputError when the
// prediction set is empty or its ids differ from the corpus ids.
EvaluationReport run_evaluate(const std::map<std::string, std::string>& predictions,
                              const std::vector<SentencePair>& corpus,
                              const EvaluateOptions& options = {});

// Fixed column order: id category BL M R S P BS T W R1 RL TE AGG, where
// R = ROUGE-2 F1, P = relation F1, BS = external similarity, T = TER rate,
// W = WER, TE = TER edits, AGG = aggregate. Absent values print "-". The first
// line is a comment listing the aggregate terms; summary rows follow the
// per-pair rows with id "mean".
std::string report_tsv(const EvaluationReport& report);
std::string report_json(const EvaluationReport& report);

}  // namespace concise

#endif  // CONCISE_EVALUATE_H_
