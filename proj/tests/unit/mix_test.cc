#include <gtest/gtest.h>

#include <fstream>

#include "concise/error.h"
#include "concise/mix.h"
#include "test_util.h"

namespace concise {
namespace {

// Scores by shared-word ratio so the fixture's kept count is hand-checkable.
class OverlapScorer : public SimilarityScorer {
 public:
  double similarity(const std::string& a, const std::string& b) override {
    const auto wa = tokenize(a).words();
    const auto wb = tokenize(b).words();
    std::size_t shared = 0;
    for (const auto& w : wa) shared += std::count(wb.begin(), wb.end(), w) > 0;
    return static_cast<double>(shared) / static_cast<double>(std::max(wa.size(), wb.size()));
  }
};

MixSpec fixture_spec() {
  return parse_mix_spec(R"({"shuffle_seed": 3, "sources": [
      {"name": "para", "path": "para.tsv", "role": "paraphrase"},
      {"name": "comp", "path": "comp.tsv", "role": "compression"},
      {"name": "all", "path": "all.tsv", "role": "keep_all"}]})",
                        testing::test_data("mix"));
}

TEST(Mix, FixtureCounts) {
  OverlapScorer scorer;
  const MixResult r = mix_datasets(fixture_spec(), &scorer);
  ASSERT_EQ(r.counts.size(), 3u);
  // para.tsv: 10 pairs, 4 with both sides under 10 words.
  EXPECT_EQ(r.counts[0].kept, 6u);
  EXPECT_EQ(r.counts[0].dropped, 4u);
  // comp.tsv: similarities 1.0, 0.9, 0.8, 0.5.
  EXPECT_EQ(r.counts[1].kept, 2u);
  EXPECT_EQ(r.counts[1].dropped, 2u);
  EXPECT_EQ(r.counts[2].kept, 3u);
  EXPECT_EQ(r.pairs.size(), 11u);
  const MixResult again = mix_datasets(fixture_spec(), &scorer);
  for (std::size_t i = 0; i < r.pairs.size(); ++i) EXPECT_EQ(r.pairs[i].source, again.pairs[i].source);
}

TEST(Mix, Errors) {
  EXPECT_THROW(mix_datasets(fixture_spec(), nullptr), InputError);
  const MixResult empty = mix_datasets(parse_mix_spec(R"({"sources": []})", "."), nullptr);
  EXPECT_TRUE(empty.pairs.empty());
  EXPECT_THROW(parse_mix_spec(R"({"sources": [{"name": "x", "path": "p", "role": "bogus"}]})", "."),
               InputError);
  EXPECT_THROW(mix_datasets(parse_mix_spec(
                   R"({"sources": [{"name": "x", "path": "missing.tsv", "role": "keep_all"}]})", "."),
                            nullptr),
               InputError);
}

TEST(Mix, OverridesThresholds) {
  const MixSpec spec = parse_mix_spec(
      R"({"sources": [{"name": "p", "path": "para.tsv", "role": "paraphrase", "min_words": 2}]})",
      testing::test_data("mix"));
  EXPECT_EQ(mix_datasets(spec, nullptr).counts[0].kept, 10u);
}

}  // namespace
}  // namespace concise
