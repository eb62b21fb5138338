#include "concise/evaluate.h"

#include <algorithm>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "concise/error.h"
#include "concise/text.h"

namespace concise {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : "-"; }

void add_opt(std::optional<double>& acc, const std::optional<double>& v) {
  if (v) acc = acc.value_or(0.0) + *v;
}

SummaryRow summarize(std::string label, const std::vector<const MetricReport*>& rows) {
  SummaryRow s;
  s.label = std::move(label);
  s.count = rows.size();
  if (rows.empty()) return s;
  MetricReport& m = s.mean;
  double te = 0.0;
  std::size_t n_rel = 0, n_ext = 0, n_agg = 0;
  for (const MetricReport* r : rows) {
    m.bleu += r->bleu;
    m.meteor += r->meteor;
    m.rouge1_f1 += r->rouge1_f1;
    m.rouge2_f1 += r->rouge2_f1;
    m.rougeL_f1 += r->rougeL_f1;
    m.sari += r->sari;
    m.wer += r->wer;
    m.ter_rate += r->ter_rate;
    te += static_cast<double>(r->ter_edits);
    add_opt(m.relation_f1, r->relation_f1);
    add_opt(m.external_similarity, r->external_similarity);
    add_opt(m.aggregate, r->aggregate);
    n_rel += r->relation_f1.has_value();
    n_ext += r->external_similarity.has_value();
    n_agg += r->aggregate.has_value();
  }
  const double n = static_cast<double>(rows.size());
  m.bleu /= n;
  m.meteor /= n;
  m.rouge1_f1 /= n;
  m.rouge2_f1 /= n;
  m.rougeL_f1 /= n;
  m.sari /= n;
  m.wer /= n;
  m.ter_rate /= n;
  m.ter_edits = static_cast<std::size_t>(te / n + 0.5);
  if (n_rel) *m.relation_f1 /= static_cast<double>(n_rel);
  if (n_ext) *m.external_similarity /= static_cast<double>(n_ext);
  if (n_agg) *m.aggregate /= static_cast<double>(n_agg);
  m.aggregate_terms = rows.front()->aggregate_terms;
  s.mean_ter_edits = te / n;
  return s;
}

}  // namespace

std::map<std::string, std::vector<DepTree>> group_trees_by_id(const std::vector<DepTree>& trees) {
  std::map<std::string, std::vector<DepTree>> out;
  std::size_t k = 0;
  for (const auto& t : trees) {
    ++k;
    std::string id = t.comment_value("id");
    if (id.empty()) id = t.comment_value("sent_id");
    if (id.empty()) throw InputError("tree " + std::to_string(k) + ": missing '# id' comment");
    out[id].push_back(t);
  }
  return out;
}

EvaluationReport run_evaluate(const std::map<std::string, std::string>& predictions,
                              const std::vector<SentencePair>& corpus,
                              const EvaluateOptions& options) {
  if (predictions.empty()) throw InputError("empty prediction file");
  std::set<std::string> corpus_ids;
  std::vector<std::string> missing;
  for (const auto& p : corpus) {
    corpus_ids.insert(p.id);
    if (!predictions.contains(p.id)) missing.push_back(p.id);
  }
  std::vector<std::string> extra;
  for (const auto& [id, text] : predictions) {
    if (!corpus_ids.contains(id)) extra.push_back(id);
  }
  if (!missing.empty() || !extra.empty()) {
    std::string msg = "prediction ids do not match corpus";
    auto list = [&](const char* what, const std::vector<std::string>& ids) {
      if (ids.empty()) return;
      msg += std::string("; ") + what + ":";
      for (const auto& id : ids) msg += " " + id;
    };
    list("missing", missing);
    list("unknown", extra);
    throw InputError(msg);
  }

  const bool with_relations = options.pred_trees && options.ref_trees;
  EvaluationReport report;
  std::vector<std::vector<std::string>> hyp_words;
  std::vector<std::vector<std::vector<std::string>>> ref_words;
  for (const auto& pair : corpus) {
    const TokenSeq src = tokenize(pair.wordy);
    const TokenSeq hyp = tokenize(predictions.at(pair.id));
    std::vector<TokenSeq> refs;
    for (const auto& c : pair.concise) refs.push_back(tokenize(c));

    PairInputs in;
    in.src = &src;
    in.hyp = &hyp;
    in.refs = &refs;
    in.db = options.db;
    if (with_relations) {
      const auto hp = options.pred_trees->find(pair.id);
      const auto rp = options.ref_trees->find(pair.id);
      if (hp == options.pred_trees->end() || hp->second.size() != 1) {
        throw InputError("prediction parse missing or ambiguous for id " + pair.id);
      }
      if (rp == options.ref_trees->end() || rp->second.empty()) {
        throw InputError("reference parse missing for id " + pair.id);
      }
      in.hyp_tree = &hp->second.front();
      in.ref_trees = &rp->second;
    }
    if (options.scorer) {
      double best = 0.0;
      for (const auto& c : pair.concise) {
        best = std::max(best, options.scorer->similarity(predictions.at(pair.id), c));
      }
      in.external_similarity = best;
    }
    RowReport row{pair.id, pair.category, score_pair(in)};
    report.rows.push_back(std::move(row));
    if (options.corpus_bleu) {
      hyp_words.push_back(hyp.words());
      std::vector<std::vector<std::string>> rw;
      for (const auto& r : refs) rw.push_back(r.words());
      ref_words.push_back(std::move(rw));
    }
  }
  if (options.corpus_bleu) report.corpus_bleu = corpus_bleu(hyp_words, ref_words);

  std::map<RevisionCategory, std::vector<const MetricReport*>> by_cat;
  std::vector<const MetricReport*> all;
  for (const auto& r : report.rows) {
    all.push_back(&r.metrics);
    if (r.category) by_cat[*r.category].push_back(&r.metrics);
  }
  for (const auto& [cat, rows] : by_cat) {
    report.summary.push_back(summarize(std::string(category_name(cat)), rows));
  }
  report.summary.push_back(summarize("All", all));
  report.aggregate_terms = report.rows.front().metrics.aggregate_terms;
  return report;
}

std::string report_tsv(const EvaluationReport& report) {
  std::string out = "# aggregate terms:";
  for (const auto& t : report.aggregate_terms) out += " " + t;
  out += "\n";
  if (report.corpus_bleu) out += "# corpus bleu: " + fmt(*report.corpus_bleu) + "\n";
  out += "id\tcategory\tBL\tM\tR\tS\tP\tBS\tT\tW\tR1\tRL\tTE\tAGG\n";
  auto line = [&](const std::string& id, const std::string& cat, const MetricReport& m,
                  const std::string& te) {
    out += id + "\t" + cat + "\t" + fmt(m.bleu) + "\t" + fmt(m.meteor) + "\t" + fmt(m.rouge2_f1) +
           "\t" + fmt(m.sari) + "\t" + fmt(m.relation_f1) + "\t" + fmt(m.external_similarity) +
           "\t" + fmt(m.ter_rate) + "\t" + fmt(m.wer) + "\t" + fmt(m.rouge1_f1) + "\t" +
           fmt(m.rougeL_f1) + "\t" + te + "\t" + fmt(m.aggregate) + "\n";
  };
  for (const auto& r : report.rows) {
    line(r.id, r.category ? std::string(category_name(*r.category)) : "-", r.metrics,
         std::to_string(r.metrics.ter_edits));
  }
  for (const auto& s : report.summary) line("mean", s.label, s.mean, fmt(s.mean_ter_edits));
  return out;
}

std::string report_json(const EvaluationReport& report) {
  using nlohmann::ordered_json;
  auto metrics = [](const MetricReport& m, std::optional<double> te_mean) {
    ordered_json j;
    j["bleu"] = m.bleu;
    j["meteor"] = m.meteor;
    j["rouge2_f1"] = m.rouge2_f1;
    j["sari"] = m.sari;
    j["relation_f1"] = m.relation_f1 ? ordered_json(*m.relation_f1) : ordered_json(nullptr);
    j["external_similarity"] =
        m.external_similarity ? ordered_json(*m.external_similarity) : ordered_json(nullptr);
    j["ter_rate"] = m.ter_rate;
    j["wer"] = m.wer;
    j["rouge1_f1"] = m.rouge1_f1;
    j["rougeL_f1"] = m.rougeL_f1;
    if (te_mean) {
      j["ter_edits"] = *te_mean;
    } else {
      j["ter_edits"] = m.ter_edits;
    }
    j["aggregate"] = m.aggregate ? ordered_json(*m.aggregate) : ordered_json(nullptr);
    return j;
  };
  ordered_json j;
  j["aggregate_terms"] = report.aggregate_terms;
  if (report.corpus_bleu) j["corpus_bleu"] = *report.corpus_bleu;
  j["rows"] = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json row;
    row["id"] = r.id;
    row["category"] = r.category ? ordered_json(std::string(category_name(*r.category)))
                                 : ordered_json(nullptr);
    row["metrics"] = metrics(r.metrics, std::nullopt);
    j["rows"].push_back(std::move(row));
  }
  j["summary"] = ordered_json::array();
  for (const auto& s : report.summary) {
    ordered_json row;
    row["label"] = s.label;
    row["count"] = s.count;
    row["metrics"] = metrics(s.mean, s.mean_ter_edits);
    j["summary"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}  // namespace concise
