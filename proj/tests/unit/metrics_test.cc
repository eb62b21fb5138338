#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "concise/error.h"
#include "concise/metrics.h"
#include "test_util.h"

namespace concise {
namespace {

std::vector<TokenSeq> refs(std::initializer_list<const char*> texts) {
  std::vector<TokenSeq> out;
  for (const char* t : texts) out.push_back(tokenize(t));
  return out;
}

const WordNetDb& fixture() {
  static const WordNetDb db = load_wordnet(testing::test_data("wordnet"));
  return db;
}

TEST(Bleu, Identity) {
  const auto s = tokenize("four rules should be observed");
  EXPECT_DOUBLE_EQ(bleu(s, {s}), 1.0);
  EXPECT_DOUBLE_EQ(bleu(tokenize(""), {s}), 0.0);
}

TEST(Bleu, HandCountedClippedPrecisions) {
  // hyp 5 words, ref 8. Clipped matches: 5/5, 3/4, 1/3, 0/2 (floored).
  const double want = std::exp(1.0 - 8.0 / 5.0) * std::pow(1.0 * 0.75 * (1.0 / 3.0) * 1e-9, 0.25);
  EXPECT_NEAR(bleu(tokenize("four rules should be observed"),
                   refs({"there are four rules that should be observed"})),
              want, 1e-12);
}

TEST(Bleu, NoOverlapIsNearZero) {
  const double v = bleu(tokenize("a b c d e"), refs({"v w x y z"}));
  EXPECT_LE(v, std::pow(1e-9, 0.25));
}

TEST(Bleu, ClippingAndMultipleReferences) {
  // "the the the the": unigram clipped to 2 of 4 by the ref with two "the".
  const double one = bleu(tokenize("the cat sat on the mat"), refs({"the cat sat on a mat"}));
  const double two = bleu(tokenize("the cat sat on the mat"),
                          refs({"the cat sat on a mat", "the cat sat on the mat"}));
  EXPECT_LT(one, 1.0);
  EXPECT_DOUBLE_EQ(two, 1.0);
}

TEST(Meteor, IdentityPenalty) {
  for (int m : {1, 3, 7}) {
    std::string text;
    for (int i = 0; i < m; ++i) text += "w" + std::to_string(i) + " ";
    const auto s = tokenize(text);
    EXPECT_NEAR(meteor(s, {s}, nullptr), 1.0 - 0.5 / (m * m * m), 1e-12);
  }
}

TEST(Meteor, StemAndSynonymStages) {
  // Without WordNet only "the" matches: P = R = 1/2, Fmean = 1/2, penalty 1/2.
  EXPECT_NEAR(meteor(tokenize("the can"), refs({"the tin"}), nullptr), 0.25, 1e-12);
  // can and tin share a synset: two matches in one chunk.
  EXPECT_NEAR(meteor(tokenize("the can"), refs({"the tin"}), &fixture()), 1.0 - 0.5 / 8.0, 1e-12);
  // Porter stage: "observed" / "observing".
  EXPECT_NEAR(meteor(tokenize("rules observed"), refs({"rules observing"}), nullptr),
              1.0 - 0.5 / 8.0, 1e-12);
  EXPECT_DOUBLE_EQ(meteor(tokenize("a b"), refs({"x y"}), &fixture()), 0.0);
}

TEST(Meteor, Fragmentation) {
  // 4 matches in 2 chunks: Fmean 1, penalty 0.5 * (2/4)^3.
  EXPECT_NEAR(meteor(tokenize("c d a b"), refs({"a b c d"}), nullptr), 1.0 - 0.5 * 0.125, 1e-12);
}

TEST(Rouge, SpecExamples) {
  const auto s = tokenize("there are four rules that should be observed");
  for (auto v : {RougeVariant::kRouge1, RougeVariant::kRouge2, RougeVariant::kRougeL}) {
    EXPECT_DOUBLE_EQ(rouge(s, {s}, v), 1.0);
  }
  EXPECT_NEAR(rouge(s, refs({"four rules should be observed"}), RougeVariant::kRouge2), 18.0 / 33.0,
              1e-12);
  EXPECT_DOUBLE_EQ(rouge(tokenize("rules"), refs({"four rules"}), RougeVariant::kRouge2), 0.0);
  EXPECT_DOUBLE_EQ(rouge(tokenize("a b c d"), refs({"a c b d"}), RougeVariant::kRougeL), 0.75);
  // R1: 5 shared of 8 vs 5.
  EXPECT_NEAR(rouge(s, refs({"four rules should be observed"}), RougeVariant::kRouge1),
              2 * (5.0 / 8) * 1.0 / (5.0 / 8 + 1.0), 1e-12);
}

// Set-arithmetic SARI written out per n-gram order.
double sari_oracle(const std::vector<std::string>& s, const std::vector<std::string>& h,
                   const std::vector<std::string>& r) {
  using Set = std::set<std::vector<std::string>>;
  auto grams = [](const std::vector<std::string>& w, std::size_t n) {
    Set out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert({w.begin() + i, w.begin() + i + n});
    return out;
  };
  auto inter = [](const Set& a, const Set& b) {
    Set o;
    for (const auto& x : a) {
      if (b.count(x)) o.insert(x);
    }
    return o;
  };
  auto minus = [](const Set& a, const Set& b) {
    Set o;
    for (const auto& x : a) {
      if (!b.count(x)) o.insert(x);
    }
    return o;
  };
  auto f1 = [&](const Set& c, const Set& g) {
    if (c.empty() && g.empty()) return 1.0;
    const double hit = static_cast<double>(inter(c, g).size());
    if (hit == 0) return 0.0;
    const double p = hit / c.size(), rr = hit / g.size();
    return 2 * p * rr / (p + rr);
  };
  auto prec = [&](const Set& c, const Set& g) {
    if (c.empty() && g.empty()) return 1.0;
    if (c.empty() || g.empty()) return 0.0;
    return static_cast<double>(inter(c, g).size()) / c.size();
  };
  double total = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const Set S = grams(s, n), H = grams(h, n), R = grams(r, n);
    total += (f1(inter(S, H), inter(S, R)) + f1(minus(H, S), minus(R, S)) +
              prec(minus(S, H), minus(S, R))) / 3;
  }
  return total / 4;
}

TEST(Sari, SpecExamples) {
  const auto src = tokenize("she has the ability to influence the outcome");
  const auto ref = tokenize("she can influence the outcome");
  EXPECT_DOUBLE_EQ(sari(src, src, {src}), 1.0);
  EXPECT_NEAR(sari(src, ref, {ref}), sari_oracle(src.words(), ref.words(), ref.words()), 1e-12);
  EXPECT_DOUBLE_EQ(sari(src, ref, {ref}), 1.0);
  const auto hyp = tokenize("she has influence on the outcome");
  EXPECT_NEAR(sari(src, hyp, {ref}), sari_oracle(src.words(), hyp.words(), ref.words()), 1e-12);
  EXPECT_LT(sari(src, hyp, {ref}), 1.0);
}

TEST(RelationF1, SpecExamples) {
  const DepTree a = testing::make_tree({"a/_/X/0/root", "b/_/X/1/obj", "c/_/X/1/nsubj"});
  EXPECT_DOUBLE_EQ(relation_f1(a, {a}), 1.0);
  const DepTree d = testing::make_tree({"x/_/X/0/root", "y/_/X/1/obj", "z/_/X/1/nsubj"});
  EXPECT_DOUBLE_EQ(relation_f1(a, {d}), 0.0);
  // Shares only (ROOT, root, a).
  const DepTree one = testing::make_tree({"a/_/X/0/root", "b/_/X/1/iobj", "c/_/X/2/nsubj"});
  EXPECT_NEAR(relation_f1(a, {one}), 1.0 / 3.0, 1e-12);
}

TEST(ConcisionScore, SpecExamples) {
  ConcisionAssessment a{1.0, 1.0, 0.3, 20.0, 0.0};
  EXPECT_NEAR(concision_score(a), 0.7, 1e-12);
  EXPECT_NEAR(a.chi, 0.7, 1e-12);
  ConcisionAssessment b{1.0, 0.9, 0.0, 20.0, 0.0};
  EXPECT_NEAR(concision_score(b), -1.0, 1e-12);
  ConcisionAssessment c{0.96, 1.0, 0.0, 20.0, 0.0};
  EXPECT_NEAR(concision_score(c), -15.0, 1e-12);
  ConcisionAssessment bad{1.0, 1.0, 0.0, 1.0, 0.0};
  EXPECT_THROW(concision_score(bad), InputError);
  ConcisionAssessment out{1.0, 1.2, 0.0, 20.0, 0.0};
  EXPECT_THROW(concision_score(out), InputError);
}

TEST(Aggregate, SpecExamples) {
  MetricReport r;
  r.bleu = r.meteor = r.rouge2_f1 = r.sari = 1.0;
  r.ter_rate = 0.0;
  EXPECT_THROW(aggregate(r), InputError);
  EXPECT_NEAR(aggregate(r, true), 4.0 / 5.0, 1e-12);
  EXPECT_EQ(r.aggregate_terms,
            (std::vector<std::string>{"bleu", "meteor", "rouge2_f1", "sari", "-ter_rate"}));
  r.relation_f1 = 1.0;
  EXPECT_NEAR(aggregate(r), 5.0 / 6.0, 1e-12);
  r.external_similarity = 1.0;
  EXPECT_NEAR(aggregate(r), 6.0 / 7.0, 1e-12);
}

TEST(ScorePair, IdentityAndErrors) {
  const auto s = tokenize("the medical profession focuses on disease prevention");
  const std::vector<TokenSeq> r = {s};
  PairInputs in;
  in.src = &s;
  in.hyp = &s;
  in.refs = &r;
  const MetricReport rep = score_pair(in);
  EXPECT_DOUBLE_EQ(rep.bleu, 1.0);
  EXPECT_DOUBLE_EQ(rep.wer, 0.0);
  EXPECT_EQ(rep.ter_edits, 0u);
  EXPECT_FALSE(rep.relation_f1.has_value());
  ASSERT_TRUE(rep.aggregate.has_value());

  const std::vector<TokenSeq> empty = {tokenize("...")};
  in.refs = &empty;
  EXPECT_THROW(score_pair(in), InputError);
}

TEST(ScorePair, ErrorRatesMayExceedOne) {
  const auto src = tokenize("a b c d e");
  const std::vector<TokenSeq> r = {tokenize("x")};
  PairInputs in;
  in.src = &src;
  in.hyp = &src;
  in.refs = &r;
  EXPECT_DOUBLE_EQ(score_pair(in).wer, 5.0);
}

}  // namespace
}  // namespace concise
