#include <benchmark/benchmark.h>

#include <random>

#include "concise/categorize.h"
#include "concise/conllu.h"
#include "concise/corpus.h"
#include "concise/metrics.h"
#include "concise/resources.h"
#include "concise/synthesize.h"
#include "concise/text.h"
#include "concise/wordiness.h"

namespace {

using namespace concise;

const std::filesystem::path kRoot = CONCISE_SOURCE_DIR;

const std::vector<SentencePair>& corpus() {
  static const auto rows = load_corpus(kRoot / "data" / "mini_corpus.jsonl");
  return rows;
}

std::vector<std::string> random_words(std::size_t n, std::mt19937& rng) {
  static const std::vector<std::string> vocab = {"the", "cat", "sat", "on", "a", "mat", "dog",
                                                 "ran", "to", "park", "it", "was", "very", "big"};
  std::vector<std::string> out(n);
  for (auto& w : out) w = vocab[rng() % vocab.size()];
  return out;
}

void BM_Ter(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto hyp = random_words(static_cast<std::size_t>(state.range(0)), rng);
  const auto ref = random_words(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(translation_edit_rate(hyp, ref));
}
BENCHMARK(BM_Ter)->Arg(10)->Arg(25)->Arg(50);

void BM_Levenshtein(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto a = random_words(static_cast<std::size_t>(state.range(0)), rng);
  const auto b = random_words(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(levenshtein(a, b));
}
BENCHMARK(BM_Levenshtein)->Arg(25)->Arg(100);

void BM_Bleu(benchmark::State& state) {
  std::vector<TokenSeq> hyps, refs;
  for (const auto& row : corpus()) {
    hyps.push_back(tokenize(row.wordy));
    refs.push_back(tokenize(row.concise[0]));
  }
  for (auto _ : state) {
    for (std::size_t i = 0; i < hyps.size(); ++i) benchmark::DoNotOptimize(bleu(hyps[i], {refs[i]}));
  }
}
BENCHMARK(BM_Bleu);

void BM_ScorePair(benchmark::State& state) {
  const auto& row = corpus().front();
  const TokenSeq src = tokenize(row.wordy);
  const TokenSeq hyp = tokenize(row.concise[0]);
  const std::vector<TokenSeq> refs = {hyp};
  PairInputs in;
  in.src = &src;
  in.hyp = &src;
  in.refs = &refs;
  for (auto _ : state) benchmark::DoNotOptimize(score_pair(in));
}
BENCHMARK(BM_ScorePair);

void BM_CategorizeCorpus(benchmark::State& state) {
  std::vector<std::pair<TokenSeq, std::vector<TokenSeq>>> pairs;
  for (const auto& row : corpus()) {
    std::vector<TokenSeq> refs;
    for (const auto& c : row.concise) refs.push_back(tokenize(c));
    pairs.emplace_back(tokenize(row.wordy), refs);
  }
  for (auto _ : state) {
    for (const auto& [w, refs] : pairs) benchmark::DoNotOptimize(categorize(w, refs));
  }
}
BENCHMARK(BM_CategorizeCorpus);

void BM_Wordiness(benchmark::State& state) {
  const TokenSeq s = tokenize(corpus()[4].wordy);
  const auto& lex = WordinessLexicon::Default();
  for (auto _ : state) benchmark::DoNotOptimize(detect(s, nullptr, lex));
}
BENCHMARK(BM_Wordiness);

void BM_Graft(benchmark::State& state) {
  const auto a = parse_conllu(read_file(kRoot / "tests" / "data" / "synth" / "passive_published.conllu")).at(0);
  const auto g = parse_conllu(read_file(kRoot / "tests" / "data" / "synth" / "publish_gloss.conllu")).at(0);
  GraftJob job;
  job.sentence_tree = a;
  job.target_index = 5;
  job.gloss_tree = g;
  for (auto _ : state) benchmark::DoNotOptimize(graft(job));
}
BENCHMARK(BM_Graft);

}  // namespace

BENCHMARK_MAIN();
