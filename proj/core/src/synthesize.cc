#include "concise/synthesize.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include <json.hpp>

#include "concise/error.h"
#include "concise/resources.h"
#include "concise/selection.h"

namespace concise {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool has_feat(std::string_view feats, std::string_view kv) {
  std::size_t pos = 0;
  while (pos <= feats.size()) {
    const auto bar = feats.find('|', pos);
    const auto item = feats.substr(pos, bar == std::string_view::npos ? feats.npos : bar - pos);
    if (item == kv) return true;
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return false;
}

bool is_aux_rel(std::string_view rel) {
  return rel == "aux" || rel == "auxpass" || rel.starts_with("aux:");
}

bool is_object_rel(std::string_view rel) { return rel == "obj" || rel == "dobj"; }

bool is_det_rel(std::string_view rel) { return rel == "det" || rel.starts_with("det:"); }

// WordNet lemma for a node: its own lemma or the first morphological base
// form with senses.
std::optional<std::string> wordnet_lemma(const DepNode& n, const WordNetDb& db, Pos pos) {
  const std::string lemma = node_lemma(n);
  if (!db.lookup(lemma, pos).empty()) return lemma;
  for (const auto& base : db.base_forms(lower(n.form), pos)) {
    if (!db.lookup(base, pos).empty()) return base;
  }
  return std::nullopt;
}

struct WorkNode {
  DepNode n;
  int key = 0;
  int head_key = 0;
  double order = 0;
};

const Inflector& inflector_of(const GraftResources& res) {
  return res.inflector ? *res.inflector : Inflector::Default();
}

const TransitivityTable& transitivity_of(const GraftResources& res) {
  return res.transitivity ? *res.transitivity : TransitivityTable::Default();
}

}  // namespace

FrequencyList::FrequencyList(std::vector<std::string> words) {
  for (auto& w : words) {
    const std::string key = lower(w);
    ranks_.emplace(key, ranks_.size() + 1);
  }
}

FrequencyList FrequencyList::Load(const std::filesystem::path& path) {
  return FrequencyList(read_lines(path));
}

const FrequencyList& FrequencyList::Default() {
  static const FrequencyList list = Load(data_path("word_frequency_en.txt"));
  return list;
}

std::optional<std::size_t> FrequencyList::rank(std::string_view word) const {
  const auto it = ranks_.find(lower(word));
  if (it == ranks_.end()) return std::nullopt;
  return it->second;
}

bool FrequencyList::is_common(std::string_view word, std::size_t k) const {
  const auto r = rank(word);
  return r && *r <= k;
}

TransitivityTable TransitivityTable::Load(const std::filesystem::path& path) {
  TransitivityTable t;
  std::size_t line_no = 0;
  for (const auto& line : read_lines(path)) {
    ++line_no;
    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (true) {
      const auto tab = line.find('\t', pos);
      cols.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (cols.size() != 3 || (cols[1] != "transitive" && cols[1] != "intransitive")) {
      throw InputError(path.string() + ": malformed row " + std::to_string(line_no));
    }
    Transitivity tr;
    tr.transitive = cols[1] == "transitive";
    if (cols[2] != "-") tr.preposition = cols[2];
    t.table_.insert_or_assign(lower(cols[0]), tr);
  }
  return t;
}

const TransitivityTable& TransitivityTable::Default() {
  static const TransitivityTable table = Load(data_path("verb_transitivity.tsv"));
  return table;
}

std::optional<Transitivity> TransitivityTable::lookup(std::string_view verb) const {
  const auto it = table_.find(lower(verb));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::string node_lemma(const DepNode& n) {
  return lower(n.lemma == "_" || n.lemma.empty() ? n.form : n.lemma);
}

std::vector<int> eligible_targets(const DepTree& tree, const WordNetDb& db,
                                  const FrequencyList& freq, const TargetOptions& opt) {
  std::vector<int> out;
  const auto& nodes = tree.nodes();
  for (const auto& n : nodes) {
    if (n.upos != "NOUN" && n.upos != "VERB" && n.upos != "ADJ" && n.upos != "ADV") continue;
    const Pos pos = *pos_from_upos(n.upos);
    const auto lemma = wordnet_lemma(n, db, pos);
    if (!lemma) continue;
    if (freq.is_common(*lemma, opt.common_rank)) continue;
    // Multiword entries formed with a neighbour, by surface form or lemma.
    bool collocation = false;
    const std::vector<std::string> self = {lower(n.form), *lemma};
    if (n.id < static_cast<int>(nodes.size())) {
      const auto& next = tree.node(n.id + 1);
      for (const auto& a : self) {
        for (const auto& b : {lower(next.form), node_lemma(next)}) {
          collocation = collocation || db.has_lemma(a + "_" + b);
        }
      }
    }
    if (n.id > 1) {
      const auto& prev = tree.node(n.id - 1);
      for (const auto& a : {lower(prev.form), node_lemma(prev)}) {
        for (const auto& b : self) collocation = collocation || db.has_lemma(a + "_" + b);
      }
    }
    if (!collocation) out.push_back(n.id);
  }
  return out;
}

std::optional<int> select_target(const DepTree& tree, const WordNetDb& db,
                                 const FrequencyList& freq, std::uint64_t seed,
                                 const TargetOptions& opt) {
  const auto ids = eligible_targets(tree, db, freq, opt);
  if (ids.empty()) return std::nullopt;
  XorShift64 gen(seed);
  return ids[gen.next_index(0, ids.size())];
}

DepTree prune_parentheticals(const DepTree& gloss) {
  const auto& nodes = gloss.nodes();
  std::vector<bool> drop(nodes.size() + 1, false);
  int depth = 0;
  bool any = false;
  for (const auto& n : nodes) {
    const bool open = n.form == "(" || n.form == "-LRB-";
    const bool close = n.form == ")" || n.form == "-RRB-";
    if (open) ++depth;
    if (depth > 0) {
      drop[n.id] = true;
      any = true;
    }
    if (close && depth > 0) --depth;
  }
  if (!any || drop[gloss.root_id()]) return gloss;

  std::vector<int> new_id(nodes.size() + 1, 0);
  int next = 0;
  for (const auto& n : nodes) {
    if (!drop[n.id]) new_id[n.id] = ++next;
  }
  std::vector<DepNode> out;
  for (const auto& n : nodes) {
    if (drop[n.id]) continue;
    DepNode m = n;
    int h = n.head;
    while (h != 0 && drop[h]) h = gloss.node(h).head;
    m.id = new_id[n.id];
    m.head = h == 0 ? 0 : new_id[h];
    m.deps = "_";
    out.push_back(std::move(m));
  }
  return DepTree::FromNodes(std::move(out), gloss.comments());
}

Inflection node_inflection(const DepTree& tree, int id, const Inflector& inflector) {
  const DepNode& n = tree.node(id);
  const std::string_view feats = n.feats;
  if (n.upos == "NOUN" || n.upos == "PROPN") {
    if (has_feat(feats, "Number=Plur") || n.xpos == "NNS" || n.xpos == "NNPS") {
      return Inflection::kPlural;
    }
    if (has_feat(feats, "Number=Sing") || n.xpos == "NN" || n.xpos == "NNP") {
      return Inflection::kSingular;
    }
    const std::string form = lower(n.form);
    const std::string lemma = node_lemma(n);
    return form != lemma && inflector.inflect(lemma, Inflection::kPlural) == form
               ? Inflection::kPlural
               : Inflection::kSingular;
  }
  if (has_feat(feats, "VerbForm=Ger")) return Inflection::kGerund;
  if (has_feat(feats, "VerbForm=Part")) {
    return has_feat(feats, "Tense=Pres") ? Inflection::kGerund : Inflection::kPastParticiple;
  }
  if (has_feat(feats, "Tense=Past")) return Inflection::kPast;
  if (has_feat(feats, "Tense=Pres") && has_feat(feats, "Person=3") &&
      has_feat(feats, "Number=Sing")) {
    return Inflection::kThirdSingular;
  }
  if (n.xpos == "VBG") return Inflection::kGerund;
  if (n.xpos == "VBN") return Inflection::kPastParticiple;
  if (n.xpos == "VBD") return Inflection::kPast;
  if (n.xpos == "VBZ") return Inflection::kThirdSingular;
  if (n.xpos == "VB" || n.xpos == "VBP" || feats != "_") return Inflection::kBase;

  const std::string form = lower(n.form);
  const std::string lemma = node_lemma(n);
  if (form == lemma) return Inflection::kBase;
  if (inflector.inflect(lemma, Inflection::kGerund) == form) return Inflection::kGerund;
  if (inflector.inflect(lemma, Inflection::kThirdSingular) == form) {
    return Inflection::kThirdSingular;
  }
  const bool past = inflector.inflect(lemma, Inflection::kPast) == form;
  const bool part = inflector.inflect(lemma, Inflection::kPastParticiple) == form;
  if (past && part) {
    for (int c : tree.children(id)) {
      if (is_aux_rel(tree.node(c).deprel)) return Inflection::kPastParticiple;
    }
    return Inflection::kPast;
  }
  if (part) return Inflection::kPastParticiple;
  if (past) return Inflection::kPast;
  return Inflection::kBase;
}

GraftResult graft(const GraftJob& job, const GraftResources& res) {
  const DepTree& ts = job.sentence_tree;
  if (job.target_index < 1 || job.target_index > static_cast<int>(ts.size())) {
    throw InputError("graft: target index out of range");
  }
  const DepNode& u = ts.node(job.target_index);
  const auto u_pos = pos_from_upos(u.upos);
  if (!u_pos || *u_pos == Pos::kAdjSat) throw InputError("graft: target is not NOUN/VERB/ADJ/ADV");
  if (job.gloss_tree.size() == 0) throw InputError("graft: empty gloss tree");

  const DepTree tg = prune_parentheticals(job.gloss_tree);
  const DepNode& rg = tg.node(tg.root_id());
  Pos pattern_pos = *u_pos;
  if (job.sense && job.sense->pos == Pos::kAdjSat && *u_pos == Pos::kAdj) pattern_pos = Pos::kAdjSat;
  if (!is_graftable_pattern(pattern_pos, rg.upos) &&
      !(pattern_pos == Pos::kAdj && is_graftable_pattern(Pos::kAdjSat, rg.upos))) {
    throw InputError("unsupported pattern");
  }

  const Inflector& inflector = inflector_of(res);
  GraftResult result;
  constexpr int kGlossBase = 1 << 20;
  const int u_id = u.id;
  const int h_u = u.head;
  const double g_span = static_cast<double>(tg.size()) + 1.0;
  const bool post_attributive = (*u_pos == Pos::kAdj || *u_pos == Pos::kAdv) && h_u != 0;
  const double slot = post_attributive ? static_cast<double>(h_u) : static_cast<double>(u_id - 1);

  std::vector<WorkNode> work;
  for (const auto& n : ts.nodes()) {
    if (n.id == u_id) continue;
    WorkNode w{n, n.id, n.head, static_cast<double>(n.id)};
    if (n.head == u_id) w.head_key = kGlossBase + tg.root_id();  // copy children onto r_g
    work.push_back(std::move(w));
  }
  const std::size_t gloss_begin = work.size();
  for (const auto& n : tg.nodes()) {
    WorkNode w{n, kGlossBase + n.id, n.head == 0 ? h_u : kGlossBase + n.head,
               slot + static_cast<double>(n.id) / g_span};
    if (n.head == 0) w.n.deprel = u.deprel;
    work.push_back(std::move(w));
  }
  auto find_key = [&](int key) -> WorkNode* {
    for (auto& w : work) {
      if (w.key == key) return &w;
    }
    return nullptr;
  };
  auto remove_key = [&](int key) {
    WorkNode* victim = find_key(key);
    const int parent = victim->head_key;
    for (auto& w : work) {
      if (w.head_key == key) w.head_key = parent;
    }
    work.erase(std::remove_if(work.begin(), work.end(), [&](const WorkNode& w) { return w.key == key; }),
               work.end());
    ++result.removed;
  };
  const int rg_key = kGlossBase + tg.root_id();
  WorkNode* root = find_key(rg_key);
  const std::string rg_lemma = node_lemma(rg);

  std::vector<int> u_children = ts.children(u_id);
  auto u_has_child = [&](auto pred) {
    return std::any_of(u_children.begin(), u_children.end(),
                       [&](int c) { return pred(ts.node(c).deprel); });
  };

  if (*u_pos == Pos::kNoun) {
    if (rg.upos == "VERB") {
      root->n.form = inflector.inflect(rg_lemma, Inflection::kGerund);
      root->n.xpos = "VBG";
      root->n.feats = "VerbForm=Ger";
    } else if (node_inflection(ts, u_id, inflector) == Inflection::kPlural) {
      root->n.form = inflector.inflect(rg_lemma, Inflection::kPlural);
      if (root->n.xpos == "NN") root->n.xpos = "NNS";
      if (has_feat(root->n.feats, "Number=Sing")) root->n.feats = "Number=Plur";
    }
    if (u_has_child(is_det_rel)) {
      std::vector<int> gloss_dets;
      for (std::size_t i = gloss_begin; i < work.size(); ++i) {
        if (work[i].head_key == rg_key && is_det_rel(work[i].n.deprel)) gloss_dets.push_back(work[i].key);
      }
      for (int k : gloss_dets) remove_key(k);
    }
  } else if (*u_pos == Pos::kVerb) {
    const Inflection infl = node_inflection(ts, u_id, inflector);
    if (infl != Inflection::kBase) {
      root->n.form = inflector.inflect(rg_lemma, infl);
      switch (infl) {
        case Inflection::kGerund: root->n.xpos = "VBG"; break;
        case Inflection::kPast: root->n.xpos = "VBD"; break;
        case Inflection::kPastParticiple: root->n.xpos = "VBN"; break;
        case Inflection::kThirdSingular: root->n.xpos = "VBZ"; break;
        default: break;
      }
      root->n.feats = u.feats;
    }
    const auto tr = transitivity_of(res).lookup(rg_lemma);
    if (!tr) result.notes.push_back("transitivity unknown: " + rg_lemma);
    int object = 0;
    for (int c : u_children) {
      if (is_object_rel(ts.node(c).deprel)) {
        object = c;
        break;
      }
    }
    if (object != 0 && tr && !tr->transitive && !tr->preposition.empty()) {
      const auto sub = ts.subtree(object);
      WorkNode prep;
      prep.n.form = tr->preposition;
      prep.n.lemma = tr->preposition;
      prep.n.upos = "ADP";
      prep.n.xpos = "IN";
      prep.n.deprel = "case";
      prep.key = kGlossBase * 2;
      prep.head_key = object;
      prep.order = static_cast<double>(sub.front()) - 0.5;
      work.push_back(std::move(prep));
      ++result.added;
    } else if (object == 0 && tg.size() > 1) {
      // A gloss ending in a bare preposition expects an object u did not have.
      const DepNode& last = tg.nodes().back();
      if (last.upos == "ADP" && tg.children(last.id).empty()) remove_key(kGlossBase + last.id);
    }
  }

  // Keep sentence-initial capitalization.
  const DepNode& first = ts.node(1);
  const bool capitalized = !first.form.empty() && std::isupper(static_cast<unsigned char>(first.form[0]));

  std::stable_sort(work.begin(), work.end(),
                   [](const WorkNode& a, const WorkNode& b) { return a.order < b.order; });
  std::map<int, int> id_of;
  for (std::size_t i = 0; i < work.size(); ++i) id_of[work[i].key] = static_cast<int>(i) + 1;
  std::vector<DepNode> nodes;
  nodes.reserve(work.size());
  for (std::size_t i = 0; i < work.size(); ++i) {
    DepNode n = work[i].n;
    n.id = static_cast<int>(i) + 1;
    n.head = work[i].head_key == 0 ? 0 : id_of.at(work[i].head_key);
    n.deps = "_";
    nodes.push_back(std::move(n));
  }
  if (u_id == 1 && capitalized && !nodes.empty() && !nodes[0].form.empty()) {
    nodes[0].form[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(nodes[0].form[0])));
  }
  result.tree = DepTree::FromNodes(std::move(nodes));
  return result;
}

std::string_view drop_reason_name(DropReason r) {
  switch (r) {
    case DropReason::kReparseMismatch: return "reparse_mismatch";
    case DropReason::kReparseAccuracy: return "reparse_accuracy";
    case DropReason::kLowSimilarity: return "low_similarity";
    case DropReason::kNoCandidate: return "no_candidate";
  }
  return "";
}

std::string to_json_line(const SynthesisRecord& rec) {
  nlohmann::ordered_json j;
  j["original"] = rec.original;
  j["inflated"] = rec.inflated;
  j["verdict"] = rec.verdict == Verdict::kKept ? "kept" : "dropped";
  if (rec.reason) j["reason"] = drop_reason_name(*rec.reason);
  if (rec.similarity) j["similarity"] = *rec.similarity;
  if (rec.unfiltered) j["unfiltered"] = true;
  if (!rec.target.empty()) j["target"] = rec.target;
  if (!rec.sense.empty()) j["sense"] = rec.sense;
  return j.dump();
}

SynthesisRecord filter_synthesis(SynthesisRecord rec, const DepTree& constructed,
                                 const DepTree& reparsed, std::optional<double> similarity,
                                 const FilterOptions& opt) {
  const TreeAgreement agree = tree_mismatches(constructed, reparsed, opt.labeled);
  rec.similarity = similarity;
  rec.unfiltered = !similarity.has_value();
  auto drop = [&](DropReason r) {
    rec.verdict = Verdict::kDropped;
    rec.reason = r;
    return rec;
  };
  if (agree.mismatches > opt.max_mismatches) return drop(DropReason::kReparseMismatch);
  if (agree.accuracy < opt.min_accuracy) return drop(DropReason::kReparseAccuracy);
  if (similarity && *similarity <= opt.max_dropped_similarity) return drop(DropReason::kLowSimilarity);
  rec.verdict = Verdict::kKept;
  rec.reason.reset();
  return rec;
}

SynthesisRecord synthesize_sentence(const DepTree& sentence, std::uint64_t seed,
                                    const SynthesisContext& ctx) {
  if (!ctx.db || !ctx.freq) throw InputError("synthesize: WordNet and frequency list required");
  const StopwordList& stopwords = ctx.stopwords ? *ctx.stopwords : StopwordList::Default();
  SynthesisRecord rec;
  rec.original = linearize(sentence).text();
  auto no_candidate = [&](std::string note) {
    rec.inflated = rec.original;
    rec.verdict = Verdict::kDropped;
    rec.reason = DropReason::kNoCandidate;
    rec.notes.push_back(std::move(note));
    return rec;
  };

  DepTree current = sentence;
  const std::size_t rounds = std::max<std::size_t>(1, ctx.rounds);
  for (std::size_t round = 0; round < rounds; ++round) {
    const auto target = select_target(current, *ctx.db, *ctx.freq, seed + round, ctx.target);
    if (!target) {
      if (round == 0) return no_candidate("no eligible target");
      break;
    }
    const DepNode u = current.node(*target);  // current is replaced below
    const Pos pos = *pos_from_upos(u.upos);
    const std::string lemma = *wordnet_lemma(u, *ctx.db, pos);
    const LeskChoice choice =
        lesk_disambiguate(lemma, pos, linearize(current), *ctx.db, stopwords,
                          static_cast<std::size_t>(*target - 1));
    const Synset* sense = choice.synset;
    std::optional<DepTree> gloss;
    if (ctx.gloss_trees) {
      if (const auto it = ctx.gloss_trees->find(sense->key()); it != ctx.gloss_trees->end()) {
        gloss = it->second;
      }
    }
    if (!gloss && ctx.parser) gloss = ctx.parser->parse(sense->gloss);
    if (!gloss) return no_candidate("no gloss parse for " + sense->key());

    GraftJob job{current, *target, sense, *gloss, seed + round};
    try {
      GraftResult g = graft(job, ctx.graft);
      for (auto& note : g.notes) rec.notes.push_back(std::move(note));
      current = std::move(g.tree);
    } catch (const InputError& e) {
      return no_candidate(e.what());
    }
    if (!rec.target.empty()) {
      rec.target += " ";
      rec.sense += " ";
    }
    rec.target += u.form;
    rec.sense += sense->key();
  }
  rec.inflated = linearize(current).text();

  std::optional<double> similarity;
  if (ctx.scorer) similarity = ctx.scorer->similarity(rec.original, rec.inflated);
  if (ctx.parser) {
    const DepTree reparsed = ctx.parser->parse(rec.inflated);
    try {
      return filter_synthesis(rec, current, reparsed, similarity, ctx.filter);
    } catch (const InputError& e) {
      rec.verdict = Verdict::kDropped;
      rec.reason = DropReason::kReparseMismatch;
      rec.similarity = similarity;
      rec.notes.push_back(e.what());
      return rec;
    }
  }
  // Without a parser only the similarity filter can run.
  rec.similarity = similarity;
  rec.unfiltered = !similarity.has_value();
  if (similarity && *similarity <= ctx.filter.max_dropped_similarity) {
    rec.verdict = Verdict::kDropped;
    rec.reason = DropReason::kLowSimilarity;
  }
  return rec;
}

}  // namespace concise
