#include "locus/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace locus {

namespace {

class Fnv1a {
 public:
  void add(std::string_view s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 0x100000001b3ULL;
    }
    add_byte(0xff);
  }
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) add_byte(static_cast<unsigned char>(v >> (8 * i)));
  }
  std::uint64_t value() const { return h_; }

 private:
  void add_byte(unsigned char c) {
    h_ ^= c;
    h_ *= 0x100000001b3ULL;
  }
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

void hash_frame(Fnv1a& h, const FiniteFrame& f) {
  h.add(f.name());
  h.add(static_cast<std::uint64_t>(f.size()));
  for (ElementId x : f.elements()) {
    h.add(f.label(x));
    h.add(f.up_set(x).bits());
  }
}

void hash_map(Fnv1a& h, const LocalicMap& m) {
  h.add(m.source()->name());
  h.add(m.target()->name());
  for (ElementId y : m.table()) h.add(static_cast<std::uint64_t>(y.index));
}

// Indices into the corpus: frames by position, dense sublocales by position
// in FrameAnalysis::contexts(), maps by position in Corpus::maps.
struct ContextTask {
  std::size_t frame;
  std::size_t context;
};
struct SquareTask {
  std::size_t map;
  std::size_t s;
  std::size_t t;
};
struct ChainTask {
  std::size_t map;
  std::size_t s;
  std::size_t r;
  std::size_t t;
  std::size_t u;
};
struct TriangleTask {
  std::size_t f;
  std::size_t phi;
  std::size_t s;
  std::size_t t;
  std::size_t u;
};

struct Corpus {
  std::vector<FramePtr> frames;
  std::vector<std::unique_ptr<FrameAnalysis>> analyses;
  std::map<const FiniteFrame*, std::size_t> frame_index;
  std::vector<LocalicMap> maps;
  /// Exhaustive maps per (source, target) pair, as positions in `maps`.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> pair_maps;
  std::vector<ContextTask> contexts;
  std::vector<SquareTask> squares;
  std::vector<ChainTask> chains;
  std::vector<TriangleTask> triangles;
  CorpusStats stats;

  const FrameAnalysis& source_of(std::size_t map) const { return *analyses[frame_index.at(maps[map].source().get())]; }
  const FrameAnalysis& target_of(std::size_t map) const { return *analyses[frame_index.at(maps[map].target().get())]; }
};

constexpr std::size_t kRandomMapNodeBudget = 200000;
constexpr std::size_t kDrawAttemptsPerInstance = 20;

// Dense sublocales of `fa` (as context positions) containing `img`.
std::vector<std::size_t> dense_above(const FrameAnalysis& fa, const Sublocale& img) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fa.contexts().size(); ++i) {
    if (img.subset_of(fa.contexts()[i]->dense())) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> dense_below(const FrameAnalysis& fa, const Sublocale& top) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fa.contexts().size(); ++i) {
    if (fa.contexts()[i]->dense().subset_of(top)) out.push_back(i);
  }
  return out;
}

const Sublocale& dense_at(const FrameAnalysis& fa, std::size_t i) { return fa.contexts()[i]->dense(); }

void add_squares_for(Corpus& c, std::size_t map) {
  const LocalicMap& f = c.maps[map];
  const FrameAnalysis& l = c.source_of(map);
  const FrameAnalysis& m = c.target_of(map);
  for (std::size_t s = 0; s < l.contexts().size(); ++s) {
    Sublocale img = image(f, dense_at(l, s));
    for (std::size_t t : dense_above(m, img)) c.squares.push_back({map, s, t});
  }
}

void add_chains_for(Corpus& c, std::size_t map) {
  const LocalicMap& f = c.maps[map];
  const FrameAnalysis& l = c.source_of(map);
  const FrameAnalysis& m = c.target_of(map);
  for (std::size_t r = 0; r < l.contexts().size(); ++r) {
    for (std::size_t u : dense_above(m, image(f, dense_at(l, r)))) {
      for (std::size_t s : dense_below(l, dense_at(l, r))) {
        Sublocale fs = image(f, dense_at(l, s));
        for (std::size_t t : dense_below(m, dense_at(m, u))) {
          if (fs.subset_of(dense_at(m, t))) c.chains.push_back({map, s, r, t, u});
        }
      }
    }
  }
}

void add_triangles_for(Corpus& c, std::size_t f_map, std::size_t phi_map) {
  const LocalicMap& f = c.maps[f_map];
  const LocalicMap& phi = c.maps[phi_map];
  const FrameAnalysis& a = c.source_of(f_map);
  const FrameAnalysis& b = c.target_of(f_map);
  const FrameAnalysis& cc = c.target_of(phi_map);
  for (std::size_t s = 0; s < a.contexts().size(); ++s) {
    for (std::size_t t : dense_above(b, image(f, dense_at(a, s)))) {
      for (std::size_t u : dense_above(cc, image(phi, dense_at(b, t)))) c.triangles.push_back({f_map, phi_map, s, t, u});
    }
  }
}

// One seeded map src -> tgt, appended to the corpus.
std::optional<std::size_t> draw_map(Corpus& c, std::size_t src, std::size_t tgt, Rng& rng) {
  MapSearch search;
  search.limit = 1;
  search.seed = rng.next();
  search.node_budget = kRandomMapNodeBudget;
  auto found = gen_maps(c.frames[src], c.frames[tgt], search);
  if (found.empty()) return std::nullopt;
  c.maps.push_back(std::move(found.front()));
  return c.maps.size() - 1;
}

template <class T>
const T& pick(const std::vector<T>& xs, Rng& rng) {
  return xs[rng.below(xs.size())];
}

Corpus build_corpus(const GenSpec& spec) {
  Corpus c;
  c.frames = gen_frames(spec);
  for (std::size_t i = 0; i < c.frames.size(); ++i) {
    c.frame_index.emplace(c.frames[i].get(), i);
    c.analyses.push_back(std::make_unique<FrameAnalysis>(c.frames[i]));
    for (std::size_t k = 0; k < c.analyses.back()->contexts().size(); ++k) c.contexts.push_back({i, k});
  }

  auto size_of = [&](std::size_t i) { return c.frames[i]->size(); };
  const std::size_t n = c.frames.size();

  // Exhaustive maps between frames small enough for squares.
  for (std::size_t i = 0; i < n; ++i) {
    if (size_of(i) > spec.square_max_elements) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (size_of(j) > spec.square_max_elements) continue;
      auto& slot = c.pair_maps[{i, j}];
      for (auto& m : gen_maps(c.frames[i], c.frames[j])) {
        c.maps.push_back(std::move(m));
        slot.push_back(c.maps.size() - 1);
      }
    }
  }
  const std::size_t exhaustive_maps = c.maps.size();

  for (std::size_t map = 0; map < exhaustive_maps; ++map) add_squares_for(c, map);
  c.stats.squares = c.squares.size();

  for (std::size_t map = 0; map < exhaustive_maps; ++map) {
    if (c.source_of(map).frame().size() <= spec.chain_max_elements &&
        c.target_of(map).frame().size() <= spec.chain_max_elements) {
      add_chains_for(c, map);
    }
  }
  c.stats.chains = c.chains.size();

  for (std::size_t a = 0; a < n; ++a) {
    if (size_of(a) > spec.triangle_max_elements) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (size_of(b) > spec.triangle_max_elements) continue;
      for (std::size_t d = 0; d < n; ++d) {
        if (size_of(d) > spec.triangle_max_elements) continue;
        for (std::size_t f : c.pair_maps[{a, b}]) {
          for (std::size_t phi : c.pair_maps[{b, d}]) add_triangles_for(c, f, phi);
        }
      }
    }
  }
  c.stats.triangles = c.triangles.size();

  // Seeded draws over the pairs the exhaustive tiers leave out.
  Rng rng(spec.seed ^ 0x5eed5eed5eed5eedULL);
  auto pairs_beyond = [&](std::size_t bound) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (std::max(size_of(i), size_of(j)) > bound) out.emplace_back(i, j);
      }
    }
    return out;
  };

  auto square_pairs = pairs_beyond(spec.square_max_elements);
  for (std::size_t k = 0, tries = 0; k < spec.random_squares && !square_pairs.empty() &&
                                     tries < spec.random_squares * kDrawAttemptsPerInstance;
       ++tries) {
    auto [i, j] = pick(square_pairs, rng);
    auto map = draw_map(c, i, j, rng);
    if (!map) continue;
    const FrameAnalysis& l = *c.analyses[i];
    const FrameAnalysis& m = *c.analyses[j];
    std::size_t s = rng.below(l.contexts().size());
    std::size_t t = pick(dense_above(m, image(c.maps[*map], dense_at(l, s))), rng);
    c.squares.push_back({*map, s, t});
    ++k;
  }
  c.stats.random_squares = c.squares.size() - c.stats.squares;

  auto chain_pairs = pairs_beyond(spec.chain_max_elements);
  for (std::size_t k = 0, tries = 0; k < spec.random_chains && !chain_pairs.empty() &&
                                     tries < spec.random_chains * kDrawAttemptsPerInstance;
       ++tries) {
    auto [i, j] = pick(chain_pairs, rng);
    auto map = draw_map(c, i, j, rng);
    if (!map) continue;
    const LocalicMap& f = c.maps[*map];
    const FrameAnalysis& l = *c.analyses[i];
    const FrameAnalysis& m = *c.analyses[j];
    std::size_t r = rng.below(l.contexts().size());
    std::size_t u = pick(dense_above(m, image(f, dense_at(l, r))), rng);
    std::size_t s = pick(dense_below(l, dense_at(l, r)), rng);
    Sublocale fs = image(f, dense_at(l, s));
    std::vector<std::size_t> ts;
    for (std::size_t t : dense_below(m, dense_at(m, u))) {
      if (fs.subset_of(dense_at(m, t))) ts.push_back(t);
    }
    c.chains.push_back({*map, s, r, pick(ts, rng), u});
    ++k;
  }
  c.stats.random_chains = c.chains.size() - c.stats.chains;

  std::vector<std::size_t> everything(n);
  for (std::size_t i = 0; i < n; ++i) everything[i] = i;
  for (std::size_t k = 0, tries = 0; k < spec.random_triangles && n > 0 &&
                                     tries < spec.random_triangles * kDrawAttemptsPerInstance;
       ++tries) {
    std::size_t a = pick(everything, rng), b = pick(everything, rng), d = pick(everything, rng);
    if (std::max({size_of(a), size_of(b), size_of(d)}) <= spec.triangle_max_elements) continue;
    auto f = draw_map(c, a, b, rng);
    if (!f) continue;
    auto phi = draw_map(c, b, d, rng);
    if (!phi) continue;
    const FrameAnalysis& fa = *c.analyses[a];
    const FrameAnalysis& fb = *c.analyses[b];
    const FrameAnalysis& fd = *c.analyses[d];
    std::size_t s = rng.below(fa.contexts().size());
    std::size_t t = pick(dense_above(fb, image(c.maps[*f], dense_at(fa, s))), rng);
    std::size_t u = pick(dense_above(fd, image(c.maps[*phi], dense_at(fb, t))), rng);
    c.triangles.push_back({*f, *phi, s, t, u});
    ++k;
  }
  c.stats.random_triangles = c.triangles.size() - c.stats.triangles;

  c.stats.frames = n;
  c.stats.contexts = c.contexts.size();
  c.stats.maps = c.maps.size();
  c.stats.squares += c.stats.random_squares;
  c.stats.chains += c.stats.random_chains;
  c.stats.triangles += c.stats.random_triangles;
  return c;
}

std::uint64_t corpus_hash(const Corpus& c) {
  Fnv1a h;
  for (const auto& f : c.frames) hash_frame(h, *f);
  for (const auto& m : c.maps) hash_map(h, m);
  for (const auto& t : c.squares) {
    for (auto v : {t.map, t.s, t.t}) h.add(static_cast<std::uint64_t>(v));
  }
  for (const auto& t : c.chains) {
    for (auto v : {t.map, t.s, t.r, t.t, t.u}) h.add(static_cast<std::uint64_t>(v));
  }
  for (const auto& t : c.triangles) {
    for (auto v : {t.f, t.phi, t.s, t.t, t.u}) h.add(static_cast<std::uint64_t>(v));
  }
  return h.value();
}

struct Selected {
  std::vector<std::size_t> frame, context, square, chain, triangle;  // registry positions
};

// One unit of work: a verdict per selected check of its scope, plus witnesses for failures.
struct TaskResult {
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::size_t, ReportRow>> failures;  // (slot in verdicts, row)
};

template <class Analysis, class Runner>
void run_checks(TaskResult& out, const std::vector<std::size_t>& selected, const Analysis& a,
                const std::string& frame_name, const std::string& description) {
  const auto& reg = registry();
  out.verdicts.reserve(selected.size());
  for (std::size_t k = 0; k < selected.size(); ++k) {
    const TheoremCheck& check = reg[selected[k]];
    CheckOutcome o;
    try {
      o = std::get<Runner>(check.runner)(a);
    } catch (const std::exception& e) {
      o = CheckOutcome::fail(std::string("exception: ") + e.what());
    }
    out.verdicts.push_back(o.verdict);
    if (o.verdict == Verdict::Fail) {
      out.failures.emplace_back(k, ReportRow{std::string(check.id), frame_name, description, o.verdict, o.witness});
    }
  }
}

std::string describe_square(const FrameAnalysis& l, const FrameAnalysis& m, const LocalicMap& f, std::size_t s,
                            std::size_t t) {
  return f.name() + " S=" + describe(dense_at(l, s)) + " T=" + describe(dense_at(m, t));
}

}  // namespace

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.fail;
  return n;
}

const CheckTally* SuiteReport::find(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

SuiteReport run_suite(const SuiteOptions& options) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.spec = options.spec;
  report.filter = options.filter;

  const auto& reg = registry();
  Selected sel;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (!glob_match(options.filter, reg[i].id)) continue;
    switch (reg[i].scope) {
      case Scope::Frame:
        sel.frame.push_back(i);
        break;
      case Scope::Context:
        sel.context.push_back(i);
        break;
      case Scope::Square:
        sel.square.push_back(i);
        break;
      case Scope::Chain:
        sel.chain.push_back(i);
        break;
      case Scope::Triangle:
        sel.triangle.push_back(i);
        break;
    }
  }

  GenSpec spec = options.spec;
  // Instances nobody will look at are not generated.
  if (sel.square.empty()) spec.square_max_elements = 0, spec.random_squares = 0;
  if (sel.chain.empty()) spec.chain_max_elements = 0, spec.random_chains = 0;
  if (sel.triangle.empty()) spec.triangle_max_elements = 0, spec.random_triangles = 0;
  if (sel.square.empty() && sel.chain.empty() && sel.triangle.empty()) spec.square_max_elements = 0;
  Corpus corpus = build_corpus(spec);
  report.corpus = corpus.stats;
  report.corpus_hash = corpus_hash(corpus);

  // Task order: frames, contexts, squares, chains, triangles.
  const std::size_t n_frames = sel.frame.empty() ? 0 : corpus.frames.size();
  const std::size_t n_contexts = sel.context.empty() ? 0 : corpus.contexts.size();
  const std::size_t n_squares = sel.square.empty() ? 0 : corpus.squares.size();
  const std::size_t n_chains = sel.chain.empty() ? 0 : corpus.chains.size();
  const std::size_t n_triangles = sel.triangle.empty() ? 0 : corpus.triangles.size();
  const std::size_t total = n_frames + n_contexts + n_squares + n_chains + n_triangles;
  std::vector<TaskResult> results(total);

  auto run_task = [&](std::size_t k) {
    TaskResult& out = results[k];
    if (k < n_frames) {
      const FrameAnalysis& fa = *corpus.analyses[k];
      run_checks<FrameAnalysis, FrameRunner>(out, sel.frame, fa, fa.frame().name(), "");
      return;
    }
    k -= n_frames;
    if (k < n_contexts) {
      const ContextTask& t = corpus.contexts[k];
      const FrameAnalysis& fa = *corpus.analyses[t.frame];
      const ContextAnalysis& ca = *fa.contexts()[t.context];
      run_checks<ContextAnalysis, ContextRunner>(out, sel.context, ca, fa.frame().name(), describe(ca.dense()));
      return;
    }
    k -= n_contexts;
    if (k < n_squares) {
      const SquareTask& t = corpus.squares[k];
      const FrameAnalysis& l = corpus.source_of(t.map);
      const FrameAnalysis& m = corpus.target_of(t.map);
      const LocalicMap& f = corpus.maps[t.map];
      std::string name = describe_square(l, m, f, t.s, t.t);
      DenseSquare sq = square_from_induced(f, l.contexts()[t.s]->induced(), m.contexts()[t.t]->induced(), name);
      SquareAnalysis sa(sq, l, m);
      run_checks<SquareAnalysis, SquareRunner>(out, sel.square, sa, l.frame().name() + "->" + m.frame().name(), name);
      return;
    }
    k -= n_squares;
    if (k < n_chains) {
      const ChainTask& t = corpus.chains[k];
      const FrameAnalysis& l = corpus.source_of(t.map);
      const FrameAnalysis& m = corpus.target_of(t.map);
      const LocalicMap& f = corpus.maps[t.map];
      std::string name = describe_square(l, m, f, t.s, t.t) + " R=" + describe(dense_at(l, t.r)) +
                         " U=" + describe(dense_at(m, t.u));
      SquareChain ch = chain_from_sublocales(f, dense_at(l, t.s), dense_at(l, t.r), dense_at(m, t.t),
                                             dense_at(m, t.u), name);
      ChainAnalysis ca(ch, l, m);
      run_checks<ChainAnalysis, ChainRunner>(out, sel.chain, ca, l.frame().name() + "->" + m.frame().name(), name);
      return;
    }
    k -= n_chains;
    const TriangleTask& t = corpus.triangles[k];
    const FrameAnalysis& a = corpus.source_of(t.f);
    const FrameAnalysis& b = corpus.target_of(t.f);
    const FrameAnalysis& d = corpus.target_of(t.phi);
    const LocalicMap& f = corpus.maps[t.f];
    const LocalicMap& phi = corpus.maps[t.phi];
    DenseSquare first = square_from_induced(f, a.contexts()[t.s]->induced(), b.contexts()[t.t]->induced(),
                                            describe_square(a, b, f, t.s, t.t));
    DenseSquare second = square_from_induced(phi, b.contexts()[t.t]->induced(), d.contexts()[t.u]->induced(),
                                             describe_square(b, d, phi, t.t, t.u));
    std::string name = first.name() + " ; " + phi.name() + " U=" + describe(dense_at(d, t.u));
    SquareTriangle tri(std::move(first), std::move(second), name);
    TriangleAnalysis ta(tri, a, b, d);
    run_checks<TriangleAnalysis, TriangleRunner>(
        out, sel.triangle, ta, a.frame().name() + "->" + b.frame().name() + "->" + d.frame().name(), name);
  };

  unsigned jobs = options.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(total, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < total; k = next.fetch_add(1)) {
      try {
        run_task(k);
      } catch (const std::exception& e) {
        // Building the instance itself failed; charge it to every check of the scope.
        results[k].verdicts.clear();
        results[k].failures.clear();
        results[k].failures.emplace_back(SIZE_MAX, ReportRow{"", "", "", Verdict::Fail, e.what()});
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }

  // Merge in task order.
  std::map<std::size_t, CheckTally> tallies;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (!glob_match(options.filter, reg[i].id)) continue;
    CheckTally t;
    t.id = std::string(reg[i].id);
    t.scope = reg[i].scope;
    t.group = reg[i].group;
    tallies.emplace(i, std::move(t));
  }
  auto merge = [&](std::size_t begin, std::size_t end, const std::vector<std::size_t>& selected) {
    for (std::size_t k = begin; k < end; ++k) {
      TaskResult& r = results[k];
      if (r.verdicts.empty() && !r.failures.empty() && r.failures.front().first == SIZE_MAX) {
        for (std::size_t c : selected) {
          CheckTally& t = tallies.at(c);
          ++t.fail;
          if (t.witnesses.size() < options.max_witnesses) {
            ReportRow row = r.failures.front().second;
            row.statement_id = t.id;
            row.witness = "instance construction failed: " + row.witness;
            t.witnesses.push_back(row);
          }
        }
        continue;
      }
      for (std::size_t slot = 0; slot < r.verdicts.size(); ++slot) {
        CheckTally& t = tallies.at(selected[slot]);
        switch (r.verdicts[slot]) {
          case Verdict::Pass:
            ++t.pass;
            break;
          case Verdict::HypothesesNotMet:
            ++t.hypotheses_not_met;
            break;
          case Verdict::Fail:
            ++t.fail;
            break;
        }
      }
      for (auto& [slot, row] : r.failures) {
        CheckTally& t = tallies.at(selected[slot]);
        if (t.witnesses.size() < options.max_witnesses) t.witnesses.push_back(std::move(row));
      }
    }
  };
  std::size_t at = 0;
  merge(at, at + n_frames, sel.frame);
  at += n_frames;
  merge(at, at + n_contexts, sel.context);
  at += n_contexts;
  merge(at, at + n_squares, sel.square);
  at += n_squares;
  merge(at, at + n_chains, sel.chain);
  at += n_chains;
  merge(at, at + n_triangles, sel.triangle);

  for (auto& [i, t] : tallies) report.checks.push_back(std::move(t));
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_json(const SuiteReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["spec"] = report.spec;
  j["filter"] = report.filter;
  std::ostringstream hash;
  hash << std::hex << std::setw(16) << std::setfill('0') << report.corpus_hash;
  j["corpus_hash"] = hash.str();
  const CorpusStats& s = report.corpus;
  j["corpus"] = {{"frames", s.frames},
                 {"contexts", s.contexts},
                 {"maps", s.maps},
                 {"squares", s.squares},
                 {"random_squares", s.random_squares},
                 {"chains", s.chains},
                 {"random_chains", s.random_chains},
                 {"triangles", s.triangles},
                 {"random_triangles", s.random_triangles}};
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& row : c.witnesses) {
      w.push_back({{"statement_id", row.statement_id},
                   {"frame_name", row.frame_name},
                   {"s_description", row.s_description},
                   {"verdict", to_string(row.verdict)},
                   {"witness", row.witness}});
    }
    checks.push_back({{"id", c.id},
                      {"scope", to_string(c.scope)},
                      {"group", to_string(c.group)},
                      {"pass", c.pass},
                      {"hypotheses_not_met", c.hypotheses_not_met},
                      {"fail", c.fail},
                      {"witnesses", std::move(w)}});
  }
  j["checks"] = std::move(checks);
  j["failures"] = report.failures();
  return j.dump(2) + "\n";
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream out;
  std::size_t width = 5;
  for (const auto& c : report.checks) width = std::max(width, c.id.size());
  out << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::setw(9) << "scope" << std::right
      << std::setw(10) << "pass" << std::setw(12) << "not-met" << std::setw(8) << "fail" << "\n";
  for (const auto& c : report.checks) {
    out << std::left << std::setw(static_cast<int>(width)) << c.id << "  " << std::setw(9) << to_string(c.scope)
        << std::right << std::setw(10) << c.pass << std::setw(12) << c.hypotheses_not_met << std::setw(8) << c.fail
        << "\n";
    for (const auto& w : c.witnesses) out << "    " << w.frame_name << " | " << w.s_description << " | " << w.witness << "\n";
  }
  const CorpusStats& s = report.corpus;
  out << "corpus: " << s.frames << " frames, " << s.contexts << " contexts, " << s.maps << " maps, " << s.squares
      << " squares (" << s.random_squares << " random), " << s.chains << " chains (" << s.random_chains
      << " random), " << s.triangles << " triangles (" << s.random_triangles << " random)\n";
  out << "failures: " << report.failures() << "\n";
  return out.str();
}

}  // namespace locus
