#include <gtest/gtest.h>

#include "concise/error.h"
#include "concise/categorize.h"
#include "concise/corpus.h"
#include "concise/evaluate.h"
#include "concise/resources.h"

namespace concise {
namespace {

AlignmentDecomposition dec(const char* w, const char* c) {
  return decompose(tokenize(w), tokenize(c));
}

RevisionCategory cat(const char* w, const char* c) { return classify(dec(w, c)); }

std::string span_text(const std::vector<std::string>& words, const WordSpan& s) {
  std::string out;
  for (std::size_t i = s.begin; i < s.end; ++i) out += (out.empty() ? "" : " ") + words[i];
  return out;
}

TEST(Categories, ActionSetsRoundTrip) {
  for (auto c : {RevisionCategory::kI, RevisionCategory::kII, RevisionCategory::kIII,
                 RevisionCategory::kIV, RevisionCategory::kV, RevisionCategory::kVI,
                 RevisionCategory::kVII, RevisionCategory::kIdentity}) {
    EXPECT_EQ(category_of(actions_of(c)), c);
    EXPECT_EQ(category_from_name(category_name(c)), c);
  }
  EXPECT_EQ(actions_of(RevisionCategory::kIV), (ActionSet{true, true, false}));
  EXPECT_EQ(actions_of(RevisionCategory::kVI), (ActionSet{true, false, true}));
  EXPECT_EQ(actions_of(RevisionCategory::kV), (ActionSet{false, true, true}));
  EXPECT_FALSE(category_from_name("VIII").has_value());
}

TEST(Decompose, DeletionOnly) {
  const auto d = dec("any particular type of dessert is fine with me",
                     "any dessert is fine with me");
  std::vector<std::string> deleted;
  for (auto i : d.deletions) deleted.push_back(d.w[i]);
  EXPECT_EQ(deleted, (std::vector<std::string>{"particular", "type", "of"}));
  EXPECT_TRUE(d.replacements.empty());
  EXPECT_EQ(d.w_prime, d.c);
}

TEST(Decompose, SingleReplacement) {
  const auto d = dec("she has the ability to influence the outcome", "she can influence the outcome");
  EXPECT_TRUE(d.deletions.empty());
  ASSERT_EQ(d.replacements.size(), 1u);
  EXPECT_EQ(span_text(d.w, d.replacements[0].w), "has the ability to");
  EXPECT_EQ(span_text(d.c, d.replacements[0].c), "can");
  EXPECT_EQ(d.w_star, d.c);
}

TEST(Decompose, Identity) {
  const auto d = dec("four rules should be observed", "four rules should be observed");
  EXPECT_TRUE(d.deletions.empty());
  EXPECT_TRUE(d.replacements.empty());
  EXPECT_TRUE(d.rewrite_regions.empty());
  EXPECT_EQ(classify(d), RevisionCategory::kIdentity);
}

TEST(Classify, WorkedExamples) {
  EXPECT_EQ(cat("There are four rules that should be observed.", "Four rules should be observed."),
            RevisionCategory::kI);
  EXPECT_EQ(cat("Regular reviews of online content should be scheduled.",
                "Online content should be reviewed regularly."),
            RevisionCategory::kIII);
  EXPECT_EQ(cat("She fell down due to the fact that she hurried.", "She fell because she hurried."),
            RevisionCategory::kIV);
  EXPECT_EQ(cat("The 1780 constitution of Massachusetts was written by John Adams.",
                "John Adams wrote the 1780 Massachusetts Constitution."),
            RevisionCategory::kIII);
}

TEST(Classify, StockPhraseSplitsIntoReplaceAndDelete) {
  const auto d = dec("She fell down due to the fact that she hurried.", "She fell because she hurried.");
  ASSERT_EQ(d.deletions.size(), 1u);
  EXPECT_EQ(d.w[d.deletions[0]], "down");
  ASSERT_EQ(d.replacements.size(), 1u);
  EXPECT_EQ(span_text(d.w, d.replacements[0].w), "due to the fact that");
}

TEST(Classify, CrossingAlignmentIsEvidence) {
  const auto d = dec("Regular reviews of online content should be scheduled.",
                     "Online content should be reviewed regularly.");
  ASSERT_FALSE(d.rewrite_evidence.empty());
  EXPECT_EQ(d.rewrite_evidence[0].kind, EvidenceKind::kCrossingAlignment);
}

TEST(Classify, SubjectPredicateRuleNeedsTree) {
  const char* w = "it was necessary for us to find a cheaper supplier";
  const char* c = "we had to find a cheaper supplier";
  EXPECT_EQ(cat(w, c), RevisionCategory::kII);
  const DepTree tree = parse_conllu(
      "1\tit\t_\tPRON\t_\t_\t3\texpl\t_\t_\n2\twas\t_\tAUX\t_\t_\t3\tcop\t_\t_\n"
      "3\tnecessary\t_\tADJ\t_\t_\t0\troot\t_\t_\n4\tfor\t_\tADP\t_\t_\t7\tmark\t_\t_\n"
      "5\tus\t_\tPRON\t_\t_\t7\tnsubj\t_\t_\n6\tto\t_\tPART\t_\t_\t7\tmark\t_\t_\n"
      "7\tfind\t_\tVERB\t_\t_\t3\tcsubj\t_\t_\n8\ta\t_\tDET\t_\t_\t10\tdet\t_\t_\n"
      "9\tcheaper\t_\tADJ\t_\t_\t10\tamod\t_\t_\n10\tsupplier\t_\tNOUN\t_\t_\t7\tobj\t_\t_\n\n")[0];
  DecomposeOptions opt;
  opt.w_tree = &tree;
  const auto d = decompose(tokenize(w), tokenize(c), opt);
  EXPECT_EQ(classify(d), RevisionCategory::kIII);
  ASSERT_FALSE(d.rewrite_evidence.empty());
  EXPECT_EQ(d.rewrite_evidence[0].kind, EvidenceKind::kSubjectPredicate);

  const DepTree short_tree = parse_conllu("1\tit\t_\tPRON\t_\t_\t0\troot\t_\t_\n\n")[0];
  opt.w_tree = &short_tree;
  EXPECT_THROW(decompose(tokenize(w), tokenize(c), opt), InputError);
}

TEST(Categorize, ReferencesAreUnited) {
  const auto w = tokenize("Research is increasing in the field of nutrition and food science.");
  const Categorization one =
      categorize(w, {tokenize("Research is increasing in nutrition and food science.")});
  EXPECT_EQ(one.category, RevisionCategory::kI);
  const Categorization both =
      categorize(w, {tokenize("Research is increasing in nutrition and food science."),
                     tokenize("Research within nutrition and food science is increasing.")});
  EXPECT_EQ(both.category, RevisionCategory::kVI);
  EXPECT_EQ(both.per_reference.size(), 2u);
}

TEST(Categorize, LemmaKeys) {
  EXPECT_EQ(lemma_key("reviews"), lemma_key("reviewed"));
  EXPECT_EQ(lemma_key("regular"), lemma_key("regularly"));
  EXPECT_EQ(lemma_key("went"), lemma_key("go"));
  EXPECT_EQ(lemma_key("alcott's"), lemma_key("alcott"));
  EXPECT_TRUE(is_subsequence({"a", "c"}, {"a", "b", "c"}));
  EXPECT_FALSE(is_subsequence({"c", "a"}, {"a", "b", "c"}));
}

TEST(Categorize, BundledMiniCorpus) {
  const auto corpus = load_corpus(data_path("mini_corpus.jsonl"));
  const auto trees = group_trees_by_id(parse_conllu(read_file(data_path("mini_corpus_wordy.conllu"))));
  for (const auto& pair : corpus) {
    DecomposeOptions opt;
    if (auto it = trees.find(pair.id); it != trees.end()) opt.w_tree = &it->second.front();
    std::vector<TokenSeq> refs;
    for (const auto& c : pair.concise) refs.push_back(tokenize(c));
    const Categorization got = categorize(tokenize(pair.wordy), refs, opt);
    const ActionSet want = actions_of(*pair.category);
    if (want.rewrite) {
      EXPECT_TRUE(got.actions.rewrite) << pair.id;
    } else {
      EXPECT_EQ(got.category, *pair.category) << pair.id;
    }
  }
}

}  // namespace
}  // namespace concise
