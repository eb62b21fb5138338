#include <gtest/gtest.h>

#include "concise/bridge.h"
#include "concise/error.h"
#include "test_util.h"

namespace concise {
namespace {

std::string fake_command() {
  return "python3 " + testing::test_data("bridge/fake_bridge.py").string();
}

TEST(Bridge, ParseAndSimilarity) {
  auto client = BridgeClient::Launch(fake_command());
  const DepTree t = client->parse("Several reviews have been published");
  EXPECT_EQ(t.size(), 5u);
  EXPECT_EQ(t.node(2).form, "reviews");
  EXPECT_EQ(client->model(), "fake-overlap-1");
  EXPECT_DOUBLE_EQ(client->similarity("a b", "a b"), 1.0);
  EXPECT_DOUBLE_EQ(client->similarity("a b c", "a d"), 0.25);
  EXPECT_DOUBLE_EQ(client->similarity("a d", "a b c"), 0.25);
  EXPECT_EQ(client->parse_conllu_text(""), "");
}

TEST(Bridge, ErrorsSurfaceAsInputErrors) {
  auto client = BridgeClient::Launch(fake_command());
  EXPECT_THROW(client->parse("__error__"), InputError);
  // The stream survives an error response.
  EXPECT_EQ(client->parse("still here").size(), 2u);
  EXPECT_THROW(client->parse("__badid__"), InputError);
}

TEST(Bridge, Timeout) {
  auto client = BridgeClient::Launch(fake_command(), std::chrono::milliseconds(300));
  EXPECT_THROW(client->parse("__hang__"), InputError);
}

TEST(Bridge, ProcessExit) {
  auto client = BridgeClient::Launch("exit 0");
  EXPECT_THROW(client->similarity("a", "b"), InputError);
}

}  // namespace
}  // namespace concise
