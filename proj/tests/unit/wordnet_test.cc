#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <tuple>

#include "concise/error.h"
#include "concise/wordnet.h"
#include "test_util.h"

namespace concise {
namespace {

const WordNetDb& fixture() {
  static const WordNetDb db = load_wordnet(testing::test_data("wordnet"));
  return db;
}

TEST(WordNet, LoadsFixture) {
  EXPECT_GT(fixture().synsets().size(), 100u);
  EXPECT_TRUE(fixture().has_lemma("united_kingdom"));
  EXPECT_TRUE(fixture().has_lemma("publish", Pos::kVerb));
  EXPECT_FALSE(fixture().has_lemma("publish", Pos::kNoun));
}

TEST(WordNet, LookupPublish) {
  const auto senses = fixture().lookup("publish", Pos::kVerb);
  ASSERT_EQ(senses.size(), 3u);
  bool found = false;
  for (const Synset* s : senses) {
    if (s->gloss == "have (one's written work) issued for publication") {
      found = true;
      EXPECT_EQ(s->key(), "01744611-v");
    }
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(fixture().lookup("zzzyzx", Pos::kNoun).empty());
}

TEST(WordNet, BaseForms) {
  const auto b = fixture().base_forms("published", Pos::kVerb);
  ASSERT_FALSE(b.empty());
  EXPECT_EQ(b.front(), "publish");
  EXPECT_EQ(fixture().base_forms("reviews", Pos::kNoun).front(), "review");
}

TEST(WordNet, ExtractDefinition) {
  EXPECT_EQ(extract_definition(" have (one's written work) issued for publication; \"How many "
                               "books did Georges Simenon write?\"  "),
            "have (one's written work) issued for publication");
  EXPECT_EQ(extract_definition("a; b c"), "a; b c");
}

TEST(WordNet, MalformedDataFails) {
  const auto dir = std::filesystem::temp_directory_path() / "concise_bad_wn";
  std::filesystem::create_directories(dir);
  for (const char* f : {"data.noun", "data.verb", "data.adj", "data.adv", "index.noun",
                        "index.verb", "index.adj", "index.adv"}) {
    std::ofstream(dir / f) << "";
  }
  std::ofstream(dir / "data.noun") << "00001740 03 n 01 entity\n";
  EXPECT_THROW(load_wordnet(dir), InputError);
  std::filesystem::remove_all(dir);
}

TEST(Lesk, PublishInContext) {
  const LeskChoice c = lesk_disambiguate("publish", Pos::kVerb,
                                         tokenize("Several reviews have been published"),
                                         fixture(), StopwordList::Default(), 4);
  ASSERT_NE(c.synset, nullptr);
  EXPECT_EQ(c.synset->key(), "01744611-v");
}

TEST(Lesk, MonosemousAndUnknown) {
  const auto senses = fixture().lookup("united_kingdom", Pos::kNoun);
  ASSERT_EQ(senses.size(), 1u);
  const LeskChoice c = lesk_disambiguate("united_kingdom", Pos::kNoun, tokenize("cats and dogs"),
                                         fixture(), StopwordList::Default());
  EXPECT_EQ(c.synset, senses.front());
  EXPECT_THROW(lesk_disambiguate("zzzyzx", Pos::kNoun, tokenize("x"), fixture(),
                                 StopwordList::Default()),
               InputError);
}

// Brute force: score every sense independently and check the winner's
// overlap is maximal.
TEST(Lesk, WinnerHasMaximalOverlap) {
  const StopwordList& stop = StopwordList::Default();
  const std::vector<std::tuple<std::string, Pos, std::string>> queries = {
      {"bank", Pos::kNoun, "he sat on the bank of the river and watched the water"},
      {"bank", Pos::kNoun, "she deposited money in the bank to earn interest"},
      {"bass", Pos::kNoun, "the bass line of the music was played by a guitar"},
      {"plant", Pos::kNoun, "the plant needs water and light to grow leaves"},
      {"run", Pos::kVerb, "the engine will run all night and operate the machine"},
      {"review", Pos::kNoun, "the critic wrote a review of the new book"},
      {"issue", Pos::kVerb, "the office will issue an official document"}};
  for (const auto& [lemma, pos, text] : queries) {
    const TokenSeq ctx = tokenize(text);
    std::vector<std::string> ctx_words;
    for (const auto& w : ctx.words()) {
      if (!stop.contains(w) && w != lemma) ctx_words.push_back(w);
    }
    const LeskChoice c = lesk_disambiguate(lemma, pos, ctx, fixture(), stop);
    const auto senses = fixture().lookup(lemma, pos);
    ASSERT_EQ(c.overlaps.size(), senses.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < senses.size(); ++i) {
      std::vector<std::string> gloss;
      for (const auto& w : tokenize(senses[i]->gloss).words()) {
        if (!stop.contains(w)) gloss.push_back(w);
      }
      std::multiset<std::string> a(ctx_words.begin(), ctx_words.end());
      std::size_t overlap = 0;
      for (const auto& w : gloss) {
        if (auto it = a.find(w); it != a.end()) {
          a.erase(it);
          ++overlap;
        }
      }
      best = std::max(best, overlap);
    }
    EXPECT_EQ(c.overlap, best) << lemma << ": " << text;
  }
}

TEST(Lesk, OverlapCountIsMultiset) {
  EXPECT_EQ(overlap_count({"a", "a", "b"}, {"a", "b", "b"}), 2u);
  EXPECT_EQ(overlap_count({}, {"a"}), 0u);
}

TEST(GraftablePatterns, ExactlyEight) {
  std::size_t n = 0;
  for (Pos p : {Pos::kNoun, Pos::kVerb, Pos::kAdj, Pos::kAdjSat, Pos::kAdv}) {
    for (const char* u : {"NOUN", "VERB", "ADJ", "ADV", "ADP", "PRON", "DET", "NUM"}) {
      n += is_graftable_pattern(p, u);
    }
  }
  EXPECT_EQ(n, 8u);
  EXPECT_TRUE(is_graftable_pattern(Pos::kNoun, "NOUN"));
  EXPECT_FALSE(is_graftable_pattern(Pos::kVerb, "NOUN"));
}

TEST(Census, HandCountedFixture) {
  const auto senses_pub = fixture().lookup("publish", Pos::kVerb);
  const auto senses_dog = fixture().lookup("dog", Pos::kNoun);
  std::unordered_map<std::string, DepTree> parses;
  parses[senses_pub[0]->key()] = testing::make_tree({"prepare/_/VERB/0/root"});
  parses[senses_pub[1]->key()] = testing::make_tree({"have/_/VERB/0/root"});
  parses[senses_dog[0]->key()] = testing::make_tree({"a/_/DET/2/det", "member/_/NOUN/0/root"});
  const PatternCensus c = gloss_root_pattern_census(fixture(), parses);
  EXPECT_EQ(c.count(Pos::kVerb, "VERB"), 2u);
  EXPECT_EQ(c.count(Pos::kNoun, "NOUN"), 1u);
  EXPECT_EQ(c.total(), 3u);
  EXPECT_EQ(c.unparsed, fixture().synsets().size() - 3);

  const PatternCensus empty = gloss_root_pattern_census(WordNetDb{}, {});
  EXPECT_EQ(empty.total(), 0u);
  EXPECT_EQ(empty.unparsed, 0u);
}

// Full WordNet 3.0, when available.
const WordNetDb* full_wordnet() {
  static std::unique_ptr<WordNetDb> db = [] {
    const char* dir = std::getenv("CONCISE_WORDNET_DIR");
    if (dir == nullptr || !std::filesystem::exists(std::filesystem::path(dir) / "data.noun")) {
      return std::unique_ptr<WordNetDb>();
    }
    return std::make_unique<WordNetDb>(load_wordnet(dir));
  }();
  return db.get();
}

TEST(FullWordNet, CountsAndPublish) {
  const WordNetDb* db = full_wordnet();
  if (db == nullptr) GTEST_SKIP() << "CONCISE_WORDNET_DIR not set";
  EXPECT_EQ(db->synsets().size(), 117659u);
  const LeskChoice c = lesk_disambiguate("publish", Pos::kVerb,
                                         tokenize("Several reviews have been published"), *db,
                                         StopwordList::Default(), 4);
  EXPECT_EQ(c.synset->key(), "01744611-v");
}

}  // namespace
}  // namespace concise
