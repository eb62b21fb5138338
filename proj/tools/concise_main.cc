// concise: command-line front end for the concise-revision toolkit.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "concise/bridge.h"
#include "concise/categorize.h"
#include "concise/conllu.h"
#include "concise/corpus.h"
#include "concise/error.h"
#include "concise/evaluate.h"
#include "concise/metrics.h"
#include "concise/mix.h"
#include "concise/resources.h"
#include "concise/selection.h"
#include "concise/synthesize.h"
#include "concise/wordiness.h"
#include "concise/wordnet.h"

namespace {

using namespace concise;
using nlohmann::ordered_json;

struct Flags {
  std::string corpus, pred, conllu_pred, conllu_ref, conllu_wordy, conllu_gloss;
  std::string wordnet, scorer, parser, out, format = "tsv", input, text, spec;
  std::uint64_t seed = 0;
  double alpha = 20.0, gamma = 1.0, rho = 1.0;
  std::size_t rounds = 1, common_rank = 3000;
  bool unlabeled = false, corpus_bleu = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing required flag ") + flag);
}

std::vector<DepTree> load_conllu(const std::string& path) {
  return parse_conllu(read_file(path));
}

std::unique_ptr<WordNetDb> maybe_wordnet(const Flags& f) {
  if (f.wordnet.empty()) return nullptr;
  return std::make_unique<WordNetDb>(load_wordnet(f.wordnet));
}

std::unique_ptr<BridgeClient> maybe_bridge(const std::string& command) {
  if (command.empty()) return nullptr;
  return BridgeClient::Launch(command);
}

std::string fixed(double v, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string join_words(const std::vector<std::string>& words, const WordSpan& span) {
  std::string s;
  for (std::size_t i = span.begin; i < span.end; ++i) {
    if (!s.empty()) s += ' ';
    s += words[i];
  }
  return s;
}

ordered_json decomposition_json(const AlignmentDecomposition& d) {
  ordered_json j;
  j["deleted"] = ordered_json::array();
  for (std::size_t i : d.deletions) j["deleted"].push_back(d.w[i]);
  auto pairs = [&](const std::vector<Replacement>& rs) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rs) arr.push_back({join_words(d.w, r.w), join_words(d.c, r.c)});
    return arr;
  };
  j["replaced"] = pairs(d.replacements);
  j["rewritten"] = pairs(d.rewrite_regions);
  j["evidence"] = ordered_json::array();
  for (const auto& e : d.rewrite_evidence) j["evidence"].push_back(e.detail);
  return j;
}

std::string actions_text(const ActionSet& a) {
  std::string s;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += "+";
    s += name;
  };
  add(a.del, "delete");
  add(a.replace, "replace");
  add(a.rewrite, "rewrite");
  return s.empty() ? "none" : s;
}

int cmd_validate(const Flags& f) {
  require(f.corpus, "--corpus");
  const auto corpus = load_corpus(f.corpus);
  std::cout << "ok: " << corpus.size() << " rows\n";
  return 0;
}

int cmd_stats(const Flags& f) {
  require(f.corpus, "--corpus");
  const auto stats = corpus_stats(load_corpus(f.corpus));
  Output out(f.out);
  auto row = [&](const std::string& label, const CategoryStats& s, ordered_json& arr) {
    if (f.format == "json") {
      arr.push_back({{"category", label},
                     {"count", s.count},
                     {"mean_wordy_words", s.mean_wordy_words},
                     {"mean_concise_words", s.mean_concise_words},
                     {"mean_ter_edits", s.mean_ter_edits}});
    } else {
      out.get() << label << '\t' << s.count << '\t' << fixed(s.mean_wordy_words, 2) << '\t'
                << fixed(s.mean_concise_words, 2) << '\t' << fixed(s.mean_ter_edits, 2) << '\n';
    }
  };
  ordered_json arr = ordered_json::array();
  if (f.format != "json") out.get() << "category\tcount\twordy_words\tconcise_words\tter_edits\n";
  for (const auto& [cat, s] : stats.by_category) row(std::string(category_name(cat)), s, arr);
  row("All", stats.all, arr);
  if (f.format == "json") out.get() << arr.dump(2) << '\n';
  return 0;
}

int cmd_categorize(const Flags& f) {
  require(f.corpus, "--corpus");
  const auto corpus = load_corpus(f.corpus);
  std::map<std::string, std::vector<DepTree>> trees;
  if (!f.conllu_wordy.empty()) trees = group_trees_by_id(load_conllu(f.conllu_wordy));
  Output out(f.out);
  std::size_t labeled = 0, agree = 0;
  ordered_json arr = ordered_json::array();
  if (f.format != "json") out.get() << "id\tgold\tpredicted\tactions\n";
  for (const auto& pair : corpus) {
    DecomposeOptions opt;
    const auto it = trees.find(pair.id);
    if (it != trees.end()) opt.w_tree = &it->second.front();
    std::vector<TokenSeq> refs;
    for (const auto& c : pair.concise) refs.push_back(tokenize(c));
    const Categorization cat = categorize(tokenize(pair.wordy), refs, opt);
    const std::string gold = pair.category ? std::string(category_name(*pair.category)) : "-";
    if (pair.category) {
      ++labeled;
      agree += *pair.category == cat.category;
    }
    if (f.format == "json") {
      arr.push_back({{"id", pair.id},
                     {"gold", gold},
                     {"predicted", std::string(category_name(cat.category))},
                     {"actions", actions_text(cat.actions)}});
      arr.back()["references"] = ordered_json::array();
      for (const auto& d : cat.per_reference) arr.back()["references"].push_back(decomposition_json(d));
    } else {
      out.get() << pair.id << '\t' << gold << '\t' << category_name(cat.category) << '\t'
                << actions_text(cat.actions) << '\n';
    }
  }
  if (f.format == "json") out.get() << arr.dump(2) << '\n';
  std::cerr << "agreement: " << agree << "/" << labeled << "\n";
  return 0;
}

EvaluationReport evaluate_from_flags(const Flags& f, std::unique_ptr<WordNetDb>& db,
                                     std::unique_ptr<BridgeClient>& scorer) {
  require(f.corpus, "--corpus");
  require(f.pred, "--pred");
  const auto corpus = load_corpus(f.corpus);
  const auto preds = load_predictions(f.pred);
  db = maybe_wordnet(f);
  scorer = maybe_bridge(f.scorer);
  std::map<std::string, std::vector<DepTree>> pred_trees, ref_trees;
  EvaluateOptions opt;
  opt.db = db.get();
  opt.scorer = scorer.get();
  opt.corpus_bleu = f.corpus_bleu;
  if (!f.conllu_pred.empty() || !f.conllu_ref.empty()) {
    require(f.conllu_pred, "--conllu-pred");
    require(f.conllu_ref, "--conllu-ref");
    pred_trees = group_trees_by_id(load_conllu(f.conllu_pred));
    ref_trees = group_trees_by_id(load_conllu(f.conllu_ref));
    opt.pred_trees = &pred_trees;
    opt.ref_trees = &ref_trees;
  }
  return run_evaluate(preds, corpus, opt);
}

int cmd_evaluate(const Flags& f) {
  std::unique_ptr<WordNetDb> db;
  std::unique_ptr<BridgeClient> scorer;
  const auto report = evaluate_from_flags(f, db, scorer);
  Output out(f.out);
  out.get() << (f.format == "json" ? report_json(report) : report_tsv(report));
  return 0;
}

int cmd_select_eval(const Flags& f) {
  std::unique_ptr<WordNetDb> db;
  std::unique_ptr<BridgeClient> scorer;
  const auto report = evaluate_from_flags(f, db, scorer);
  std::map<RevisionCategory, std::vector<std::pair<double, std::string>>> scored;
  for (const auto& r : report.rows) {
    if (r.category) scored[*r.category].emplace_back(r.metrics.aggregate.value_or(0.0), r.id);
  }
  std::map<RevisionCategory, std::vector<std::string>> ranked;
  for (auto& [cat, rows] : scored) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& r : rows) ranked[cat].push_back(r.second);
  }
  XorShift64 gen(f.seed);
  const EvalSelection sel = select_eval_samples(ranked, gen);
  for (const auto& w : sel.warnings) std::cerr << "warning: " << w << "\n";
  Output out(f.out);
  out.get() << "category\tupper\tlower\n";
  for (const auto& [cat, pick] : sel.picks) {
    out.get() << category_name(cat) << '\t' << pick.upper.value_or("-") << '\t'
              << pick.lower.value_or("-") << '\n';
  }
  return 0;
}

int cmd_synthesize(const Flags& f) {
  require(f.input, "--input");
  require(f.wordnet, "--wordnet");
  const auto sentences = load_conllu(f.input);
  const WordNetDb db = load_wordnet(f.wordnet);
  std::unordered_map<std::string, DepTree> glosses;
  if (!f.conllu_gloss.empty()) {
    for (const auto& t : load_conllu(f.conllu_gloss)) {
      const std::string key = t.comment_value("synset");
      if (key.empty()) throw InputError("gloss parse without '# synset' comment");
      glosses.insert_or_assign(key, t);
    }
  }
  auto parser = maybe_bridge(f.parser);
  std::unique_ptr<BridgeClient> separate_scorer;
  BridgeClient* scorer = nullptr;
  if (!f.scorer.empty()) {
    if (f.scorer == f.parser && parser) {
      scorer = parser.get();
    } else {
      separate_scorer = maybe_bridge(f.scorer);
      scorer = separate_scorer.get();
    }
  }
  if (!parser && glosses.empty()) throw InputError("synthesize needs --parser or --conllu-gloss");
  SynthesisContext ctx;
  ctx.db = &db;
  ctx.freq = &FrequencyList::Default();
  ctx.gloss_trees = &glosses;
  ctx.parser = parser.get();
  ctx.scorer = scorer;
  ctx.target.common_rank = f.common_rank;
  ctx.filter.labeled = !f.unlabeled;
  ctx.rounds = f.rounds;
  Output out(f.out);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto rec = synthesize_sentence(sentences[i], f.seed + i, ctx);
    kept += rec.verdict == Verdict::kKept;
    out.get() << to_json_line(rec) << '\n';
  }
  std::cerr << "kept " << kept << " of " << sentences.size() << "\n";
  return 0;
}

int cmd_mix(const Flags& f) {
  require(f.spec, "--spec");
  const std::filesystem::path spec_path(f.spec);
  const MixSpec spec = parse_mix_spec(read_file(spec_path), spec_path.parent_path());
  auto scorer = maybe_bridge(f.scorer);
  const MixResult result = mix_datasets(spec, scorer.get());
  Output out(f.out);
  for (const auto& p : result.pairs) out.get() << p.source << '\t' << p.target << '\n';
  for (const auto& c : result.counts) {
    std::cerr << c.name << ": kept " << c.kept << ", dropped " << c.dropped << "\n";
  }
  return 0;
}

int cmd_wordiness(const Flags& f) {
  std::vector<std::string> lines;
  std::vector<DepTree> trees;
  if (!f.conllu_wordy.empty()) {
    trees = load_conllu(f.conllu_wordy);
    for (const auto& t : trees) lines.push_back(linearize(t).text());
  } else if (!f.input.empty()) {
    lines = read_lines(f.input);
  } else {
    require(f.text, "--text, --input or --conllu-wordy");
    lines.push_back(f.text);
  }
  const auto& lexicon = WordinessLexicon::Default();
  Output out(f.out);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const TokenSeq seq = trees.empty() ? tokenize(lines[i]) : linearize(trees[i]);
    const auto spans = detect(seq, trees.empty() ? nullptr : &trees[i], lexicon);
    ConcisionAssessment a;
    a.gamma = f.gamma;
    a.rho = f.rho;
    a.alpha = f.alpha;
    a.omega = omega(seq, spans);
    concision_score(a);
    ordered_json j;
    j["sentence"] = lines[i];
    j["omega"] = a.omega;
    j["chi"] = a.chi;
    j["spans"] = ordered_json::array();
    for (const auto& s : spans) {
      std::string text;
      for (std::size_t k = s.start; k < s.end; ++k) {
        if (!text.empty()) text += ' ';
        text += seq[k].surface;
      }
      j["spans"].push_back({{"start", s.start},
                            {"end", s.end},
                            {"class", std::string(wordiness_class_name(s.cls))},
                            {"pattern", s.pattern_id},
                            {"text", text}});
    }
    out.get() << j.dump() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concise-revision toolkit: categorize, evaluate, synthesize, mix"};
  app.require_subcommand(1);
  Flags f;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    c->add_option("--out", f.out, "Output path (default stdout)");
  };
  auto add_eval = [&](CLI::App* c) {
    c->add_option("--corpus", f.corpus, "Corpus JSON lines");
    c->add_option("--pred", f.pred, "Predictions JSON lines {id, prediction}");
    c->add_option("--conllu-pred", f.conllu_pred, "Parses of the predictions, keyed by '# id'");
    c->add_option("--conllu-ref", f.conllu_ref, "Parses of the references, keyed by '# id'");
    c->add_option("--wordnet", f.wordnet, "WordNet dict directory for METEOR synonyms");
    c->add_option("--scorer", f.scorer, "Similarity bridge command");
    c->add_flag("--corpus-bleu", f.corpus_bleu, "Also report corpus-level BLEU");
  };

  auto* validate = app.add_subcommand("validate", "Schema-check a corpus");
  validate->add_option("--corpus", f.corpus, "Corpus JSON lines");

  auto* stats = app.add_subcommand("stats", "Per-category word and edit counts");
  stats->add_option("--corpus", f.corpus, "Corpus JSON lines");
  add_format(stats);

  auto* categorize_cmd = app.add_subcommand("categorize", "Assign revision categories I-VII");
  categorize_cmd->add_option("--corpus", f.corpus, "Corpus JSON lines");
  categorize_cmd->add_option("--conllu-wordy", f.conllu_wordy, "Parses of the wordy sentences");
  add_format(categorize_cmd);

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score predictions against the corpus");
  add_eval(evaluate_cmd);
  add_format(evaluate_cmd);

  auto* select = app.add_subcommand("select-eval", "Pick two rows per category for review");
  add_eval(select);
  select->add_option("--seed", f.seed, "PRNG seed");
  select->add_option("--out", f.out, "Output path (default stdout)");

  auto* synth = app.add_subcommand("synthesize", "Inflate sentences by gloss grafting");
  synth->add_option("--input", f.input, "CoNLL-U source sentences");
  synth->add_option("--wordnet", f.wordnet, "WordNet dict directory");
  synth->add_option("--conllu-gloss", f.conllu_gloss, "Gloss parses keyed by '# synset'");
  synth->add_option("--parser", f.parser, "Parser bridge command");
  synth->add_option("--scorer", f.scorer, "Similarity bridge command");
  synth->add_option("--seed", f.seed, "Seed for target selection");
  synth->add_option("--rounds", f.rounds, "Grafts per sentence")->check(CLI::PositiveNumber);
  synth->add_option("--common-rank", f.common_rank, "Skip the K most frequent words");
  synth->add_flag("--unlabeled", f.unlabeled, "Compare re-parses on heads only");
  synth->add_option("--out", f.out, "Output path (default stdout)");

  auto* mix = app.add_subcommand("mix", "Filter and shuffle parallel datasets");
  mix->add_option("--spec", f.spec, "Mix spec JSON");
  mix->add_option("--scorer", f.scorer, "Similarity bridge command");
  mix->add_option("--out", f.out, "Output path (default stdout)");

  auto* wordiness = app.add_subcommand("wordiness", "Detect wordy spans and score concision");
  wordiness->add_option("--text", f.text, "One sentence");
  wordiness->add_option("--input", f.input, "Sentences, one per line");
  wordiness->add_option("--conllu-wordy", f.conllu_wordy, "Parsed sentences");
  wordiness->add_option("--alpha", f.alpha, "Weight alpha (> 1)");
  wordiness->add_option("--gamma", f.gamma, "Grammaticality in [0, 1]");
  wordiness->add_option("--rho", f.rho, "Information retention in [0, 1]");
  wordiness->add_option("--out", f.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate) return cmd_validate(f);
    if (*stats) return cmd_stats(f);
    if (*categorize_cmd) return cmd_categorize(f);
    if (*evaluate_cmd) return cmd_evaluate(f);
    if (*select) return cmd_select_eval(f);
    if (*synth) return cmd_synthesize(f);
    if (*mix) return cmd_mix(f);
    if (*wordiness) return cmd_wordiness(f);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
