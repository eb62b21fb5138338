#include <gtest/gtest.h>

#include "concise/conllu.h"
#include "concise/error.h"
#include "concise/resources.h"
#include "test_util.h"

namespace concise {
namespace {

using testing::load_tree;

TEST(Conllu, ParsesPassiveSentence) {
  const DepTree t = load_tree("synth/passive_published.conllu");
  EXPECT_EQ(t.size(), 5u);
  EXPECT_EQ(t.root_id(), 5);
  EXPECT_EQ(t.node(2).deprel, "nsubjpass");
  EXPECT_EQ(t.children(5), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(t.subtree(2), (std::vector<int>{1, 2}));
  EXPECT_EQ(t.comment_value("text"), "Several reviews have been published");
  EXPECT_EQ(linearize(t).text(), "Several reviews have been published");
}

TEST(Conllu, EmptyInput) { EXPECT_TRUE(parse_conllu("").empty()); }

TEST(Conllu, SelfLoopNamesLine) {
  const std::string text = "1\ta\t_\t_\t_\t_\t0\troot\t_\t_\n2\tb\t_\t_\t_\t_\t2\tdep\t_\t_\n\n";
  try {
    parse_conllu(text);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("self-loop at line 2"), std::string::npos) << e.what();
  }
}

TEST(Conllu, RejectsCyclesAndMultipleRoots) {
  EXPECT_THROW(parse_conllu("1\ta\t_\t_\t_\t_\t2\tdep\t_\t_\n2\tb\t_\t_\t_\t_\t1\tdep\t_\t_\n\n"),
               InputError);
  EXPECT_THROW(parse_conllu("1\ta\t_\t_\t_\t_\t0\troot\t_\t_\n2\tb\t_\t_\t_\t_\t0\troot\t_\t_\n\n"),
               InputError);
  EXPECT_THROW(parse_conllu("1\ta\t_\t_\t_\t_\t0\n\n"), InputError);
}

TEST(Conllu, RoundTrip) {
  for (const char* name : {"synth/passive_published.conllu", "synth/publish_gloss.conllu",
                           "synth/grafted_reparse.conllu"}) {
    const auto trees = parse_conllu(read_file(testing::test_data(name)));
    EXPECT_EQ(parse_conllu(serialize_conllu(trees)), trees) << name;
  }
}

TEST(Conllu, SingleNodeAndReparse) {
  const DepTree one = testing::make_tree({"Hello/hello/INTJ/0/root"});
  EXPECT_EQ(serialize_conllu({one}), "1\tHello\thello\tINTJ\t_\t_\t0\troot\t_\t_\n\n");
  EXPECT_EQ(linearize(one).text(), "Hello");

  const DepTree c = load_tree("synth/grafted_reparse.conllu");
  const std::string text = serialize_conllu({c});
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 8 + 1);
  EXPECT_EQ(linearize(c).text(), "Several reviews have been had issued for publication");
}

TEST(Conllu, KeepsMultiwordLines) {
  const std::string text =
      "# sent_id = 1\n1-2\tdidn't\t_\t_\t_\t_\t_\t_\t_\t_\n1\tdid\tdo\tAUX\t_\t_\t3\taux\t_\t_\n"
      "2\tn't\tnot\tPART\t_\t_\t3\tadvmod\t_\t_\n3\tgo\tgo\tVERB\t_\t_\t0\troot\t_\t_\n\n";
  const auto trees = parse_conllu(text);
  ASSERT_EQ(trees.size(), 1u);
  EXPECT_EQ(trees[0].size(), 3u);
  EXPECT_EQ(serialize_conllu(trees), text);
}

TEST(RelationTriples, PassiveSentence) {
  const auto triples = relation_triples(load_tree("synth/passive_published.conllu"));
  EXPECT_NE(std::find(triples.begin(), triples.end(),
                      RelationTriple{"publish", "nsubjpass", "review"}),
            triples.end());
  EXPECT_EQ(relation_triples(testing::make_tree({"Hello/_/INTJ/0/root"})),
            (std::vector<RelationTriple>{{"ROOT", "root", "hello"}}));
}

DepTree chain(int n, int differing_head_at = 0) {
  std::vector<std::string> rows;
  for (int i = 1; i <= n; ++i) {
    int head = i == 1 ? 0 : 1;
    if (i == differing_head_at) head = i - 1;
    rows.push_back("w" + std::to_string(i) + "/_/X/" + std::to_string(head) + "/" +
                   (head == 0 ? "root" : "dep"));
  }
  return testing::make_tree(rows);
}

TEST(TreeMismatches, Arithmetic) {
  const DepTree a = chain(10);
  EXPECT_EQ(tree_mismatches(a, a).mismatches, 0u);
  EXPECT_DOUBLE_EQ(tree_mismatches(a, a).accuracy, 1.0);
  const TreeAgreement one = tree_mismatches(a, chain(10, 5));
  EXPECT_EQ(one.mismatches, 1u);
  EXPECT_DOUBLE_EQ(one.accuracy, 0.9);
  EXPECT_THROW(tree_mismatches(a, chain(9)), InputError);
}

TEST(TreeMismatches, LabeledVsUnlabeled) {
  const DepTree a = testing::make_tree({"a/_/X/0/root", "b/_/X/1/obj"});
  const DepTree b = testing::make_tree({"a/_/X/0/root", "b/_/X/1/nsubj"});
  EXPECT_EQ(tree_mismatches(a, b, true).mismatches, 1u);
  EXPECT_EQ(tree_mismatches(a, b, false).mismatches, 0u);
}

}  // namespace
}  // namespace concise
