#include <gtest/gtest.h>

#include "concise/corpus.h"
#include "concise/error.h"
#include "concise/evaluate.h"
#include "concise/resources.h"
#include "concise/selection.h"
#include "test_util.h"

namespace concise {
namespace {

std::filesystem::path mini_corpus() {
  return std::filesystem::path(CONCISE_SOURCE_DIR) / "data" / "mini_corpus.jsonl";
}

TEST(Corpus, LoadsMiniCorpus) {
  const auto rows = load_corpus(mini_corpus());
  ASSERT_EQ(rows.size(), 22u);
  EXPECT_EQ(rows[0].id, "ex1");
  EXPECT_EQ(rows[0].category, RevisionCategory::kI);
}

TEST(Corpus, SchemaErrors) {
  try {
    parse_corpus("{\"id\":\"a\",\"wordy\":\"x y\",\"concise\":\"x\",\"category\":\"I\"}\n"
                 "{\"id\":\"b\",\"wordy\":\"x y\",\"category\":\"I\"}\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_corpus("{\"id\":\"a\",\"wordy\":\"x\",\"concise\":[],\"category\":\"I\"}"),
               InputError);
  EXPECT_THROW(parse_corpus("{\"id\":\"a\",\"wordy\":\"x\",\"concise\":\"y\",\"category\":\"IX\"}"),
               InputError);
  EXPECT_THROW(parse_corpus("{\"id\":\"a\",\"wordy\":\"x\",\"concise\":\"y\"}"), InputError);
  EXPECT_THROW(parse_corpus("{\"id\":\"a\",\"wordy\":\"x\",\"concise\":\"y\",\"category\":\"I\"}\n"
                            "{\"id\":\"a\",\"wordy\":\"x\",\"concise\":\"y\",\"category\":\"I\"}"),
               InputError);
  const auto v = parse_corpus(
      "\n{\"id\":\"a\",\"wordy\":\"x\",\"concise\":\"y\",\"split\":\"validation\"}\n");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_FALSE(v[0].category.has_value());
}

TEST(Corpus, Stats) {
  const auto rows = parse_corpus(
      "{\"id\":\"a\",\"wordy\":\"one two three four.\",\"concise\":\"one four.\",\"category\":\"I\"}\n"
      "{\"id\":\"b\",\"wordy\":\"a b\",\"concise\":[\"c\",\"d e f\"],\"category\":\"II\"}\n");
  const CorpusStats s = corpus_stats(rows);
  EXPECT_EQ(s.all.count, 2u);
  EXPECT_DOUBLE_EQ(s.all.mean_wordy_words, 3.0);
  EXPECT_DOUBLE_EQ(s.all.mean_concise_words, 1.5);
  EXPECT_DOUBLE_EQ(s.by_category.at(RevisionCategory::kI).mean_ter_edits, 2.0);
  EXPECT_DOUBLE_EQ(s.by_category.at(RevisionCategory::kII).mean_ter_edits, 2.0);
}

TEST(Predictions, Parse) {
  const auto p = parse_predictions("{\"id\":\"a\",\"prediction\":\"x\"}\n");
  EXPECT_EQ(p.at("a"), "x");
  EXPECT_THROW(parse_predictions("{\"id\":\"a\",\"prediction\":\"x\"}\n{\"id\":\"a\",\"prediction\":\"y\"}"),
               InputError);
}

class LowerBound : public IndexGenerator {
 public:
  std::size_t next_index(std::size_t lo, std::size_t) override { return lo; }
};

std::map<RevisionCategory, std::vector<std::string>> ranked_of_sizes(const std::vector<int>& sizes) {
  std::map<RevisionCategory, std::vector<std::string>> ranked;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    auto& v = ranked[static_cast<RevisionCategory>(c)];
    for (int r = 0; r < sizes[c]; ++r) v.push_back(std::to_string(c) + "-" + std::to_string(r));
  }
  return ranked;
}

TEST(Selection, StubPicksBucketStarts) {
  LowerBound gen;
  const auto ranked = ranked_of_sizes({169, 116, 153, 42, 33, 14, 9});
  const EvalSelection sel = select_eval_samples(ranked, gen);
  EXPECT_EQ(sel.size(), 14u);
  EXPECT_TRUE(sel.warnings.empty());
  for (const auto& [cat, ids] : ranked) {
    const auto& pick = sel.picks.at(cat);
    EXPECT_EQ(*pick.upper, ids[0]);
    EXPECT_EQ(*pick.lower, ids[ids.size() / 2]);
  }
}

TEST(Selection, DrawsStayInBuckets) {
  const auto ranked = ranked_of_sizes({169, 116, 153, 42, 33, 14, 9});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    XorShift64 gen(seed);
    const EvalSelection sel = select_eval_samples(ranked, gen);
    ASSERT_EQ(sel.size(), 14u);
    for (const auto& [cat, ids] : ranked) {
      const std::size_t half = ids.size() / 2;
      const auto pos = [&](const std::string& id) {
        return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
      };
      EXPECT_LT(pos(*sel.picks.at(cat).upper), half);
      EXPECT_GE(pos(*sel.picks.at(cat).lower), half);
    }
  }
  XorShift64 a(0), b(0);
  EXPECT_EQ(select_eval_samples(ranked, a).picks.at(RevisionCategory::kI).upper,
            select_eval_samples(ranked, b).picks.at(RevisionCategory::kI).upper);
}

TEST(Selection, Degenerate) {
  LowerBound gen;
  std::map<RevisionCategory, std::vector<std::string>> ranked;
  ranked[RevisionCategory::kI] = {"only"};
  ranked[RevisionCategory::kII] = {};
  const EvalSelection sel = select_eval_samples(ranked, gen);
  EXPECT_EQ(sel.size(), 1u);
  EXPECT_FALSE(sel.picks.at(RevisionCategory::kI).upper.has_value());
  EXPECT_EQ(*sel.picks.at(RevisionCategory::kI).lower, "only");
  EXPECT_EQ(sel.warnings.size(), 2u);
}

TEST(XorShift, UniformRange) {
  XorShift64 gen(0);
  std::vector<int> hist(5);
  for (int i = 0; i < 5000; ++i) ++hist[gen.next_index(0, 5)];
  for (int h : hist) EXPECT_GT(h, 800);
}

TEST(Evaluate, IdentityPredictions) {
  const auto rows = load_corpus(mini_corpus());
  std::map<std::string, std::string> pred;
  for (const auto& r : rows) pred[r.id] = r.concise[0];
  const EvaluationReport rep = run_evaluate(pred, rows);
  ASSERT_FALSE(rep.summary.empty());
  const SummaryRow& all = rep.summary.back();
  EXPECT_EQ(all.label, "All");
  EXPECT_EQ(all.count, 22u);
  EXPECT_DOUBLE_EQ(all.mean.bleu, 1.0);
  EXPECT_DOUBLE_EQ(all.mean_ter_edits, 0.0);
  EXPECT_FALSE(all.mean.relation_f1.has_value());
  EXPECT_EQ(rep.aggregate_terms,
            (std::vector<std::string>{"bleu", "meteor", "rouge2_f1", "sari", "-ter_rate"}));
}

TEST(Evaluate, WordyPredictionsGiveCorpusEdits) {
  const auto rows = load_corpus(mini_corpus());
  std::map<std::string, std::string> pred;
  for (const auto& r : rows) pred[r.id] = r.wordy;
  const EvaluationReport rep = run_evaluate(pred, rows);
  EXPECT_NEAR(rep.summary.back().mean_ter_edits, corpus_stats(rows).all.mean_ter_edits, 1e-12);
}

TEST(Evaluate, Errors) {
  const auto rows = load_corpus(mini_corpus());
  EXPECT_THROW(run_evaluate({}, rows), InputError);
  std::map<std::string, std::string> pred;
  for (const auto& r : rows) pred[r.id] = r.wordy;
  pred.erase("ex2");
  pred["zz"] = "x";
  try {
    run_evaluate(pred, rows);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "prediction ids do not match corpus; missing: ex2; unknown: zz");
  }
}

TEST(Evaluate, TsvGolden) {
  const auto rows = parse_corpus(
      "{\"id\":\"a\",\"wordy\":\"the cat sat on the mat\",\"concise\":\"the cat sat\",\"category\":\"I\"}\n");
  const EvaluationReport rep = run_evaluate({{"a", "the cat sat"}}, rows);
  const std::string tsv = report_tsv(rep);
  EXPECT_EQ(tsv,
            "# aggregate terms: bleu meteor rouge2_f1 sari -ter_rate\n"
            "id\tcategory\tBL\tM\tR\tS\tP\tBS\tT\tW\tR1\tRL\tTE\tAGG\n"
            "a\tI\t1.0000\t0.9815\t1.0000\t1.0000\t-\t-\t0.0000\t0.0000\t1.0000\t1.0000\t0\t0.7963\n"
            "mean\tI\t1.0000\t0.9815\t1.0000\t1.0000\t-\t-\t0.0000\t0.0000\t1.0000\t1.0000\t0.0000\t0.7963\n"
            "mean\tAll\t1.0000\t0.9815\t1.0000\t1.0000\t-\t-\t0.0000\t0.0000\t1.0000\t1.0000\t0.0000\t0.7963\n");
}

TEST(Evaluate, GroupTreesById) {
  const auto trees = parse_conllu(
      "# id = a\n1\tx\tx\tX\t_\t_\t0\troot\t_\t_\n\n"
      "# sent_id = b\n1\ty\ty\tX\t_\t_\t0\troot\t_\t_\n\n");
  const auto g = group_trees_by_id(trees);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.at("b").size(), 1u);
  EXPECT_THROW(group_trees_by_id(parse_conllu("1\tx\tx\tX\t_\t_\t0\troot\t_\t_\n\n")), InputError);
}

}  // namespace
}  // namespace concise
