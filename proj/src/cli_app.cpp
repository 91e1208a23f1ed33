#include "groundkit/cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <thread>

#include "groundkit/amr_pipeline.hpp"
#include "groundkit/dict_graph.hpp"
#include "groundkit/errors.hpp"
#include "groundkit/fvs_oracle.hpp"
#include "groundkit/graph_io.hpp"
#include "groundkit/kernel_metrics.hpp"
#include "groundkit/penman.hpp"
#include "groundkit/reductions.hpp"

namespace groundkit::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

enum class InputKind { PenmanCorpus, DictionaryJsonl, ArcList };

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// First meaningful line decides: '{' JSONL, '(' or '# ::' metadata PENMAN,
// anything else an arc list ('#' comments stay ambiguous and are skipped).
InputKind detect_kind(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim_view(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    if (line.front() == '{') return InputKind::DictionaryJsonl;
    if (line.front() == '(') return InputKind::PenmanCorpus;
    if (line.front() == '#') {
      if (trim_view(line.substr(1)).rfind("::", 0) == 0) return InputKind::PenmanCorpus;
      continue;
    }
    return InputKind::ArcList;
  }
  return InputKind::ArcList;
}

unsigned thread_cap() {
  if (const char* env = std::getenv("GROUNDKIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min(v, 256L));
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

struct Config {
  std::string input;
  std::vector<std::string> inputs;
  std::string mode = "confluent";
  bool verify = false;
  std::string stoplist;
  std::size_t max_n = 20;
  std::optional<std::uint64_t> seed;
  std::string out = ".";
};

LoadedGraph load_any(const Config& c) {
  std::string text = read_text_file(c.input);
  switch (detect_kind(text)) {
    case InputKind::ArcList:
      return read_arc_list(text);
    case InputKind::DictionaryJsonl: {
      dict::RawDictionary d = dict::parse_dictionary_jsonl(text);
      dict::Stoplist stop;
      if (!c.stoplist.empty()) stop = dict::read_stoplist(c.stoplist);
      return {dict::build_dictionary_digraph(d, stop), {}};
    }
    case InputKind::PenmanCorpus: {
      amr::CorpusResult r = amr::process_corpus(text);
      return {std::move(r.graph), std::move(r.graph_tags)};
    }
  }
  return {};
}

std::string out_file(const Config& c, const char* name) {
  fs::create_directories(c.out.empty() ? "." : c.out);
  return (fs::path(c.out.empty() ? "." : c.out) / name).string();
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json preprocess_json(const amr::PreprocessMetrics& m) {
  ordered_json j;
  j["definition_quantity"] = m.definition_quantity;
  j["initial_invalid"] = m.initial_invalid;
  j["saved"] = m.saved;
  j["final_invalid"] = m.final_invalid;
  j["polysemy_filtered"] = m.polysemy_filtered;
  j["symbol_collisions"] = m.symbol_collisions;
  j["final_quantity"] = m.final_quantity;
  return j;
}

ordered_json trace_json(const ReductionTrace& t, const Digraph& g) {
  std::vector<std::string> u;
  for (VertexId v : t.included) u.push_back(g.label(v));
  std::sort(u.begin(), u.end());
  ordered_json j;
  j["initial_vertices"] = t.initial_vertices;
  j["remaining_vertices"] = t.remaining_vertices;
  j["remaining_arcs"] = t.remaining_arcs;
  j["included"] = t.included.size();
  j["excluded"] = t.excluded();
  j["reductions_total"] = t.reductions_total();
  j["loop"] = t.loop;
  j["subset"] = t.subset;
  j["in_clique"] = t.in_clique;
  j["out_clique"] = t.out_clique;
  j["pie"] = t.pie;
  j["dome"] = t.dome;
  j["isolated"] = t.isolated;
  j["partial_mfvs"] = u;
  return j;
}

int cmd_build(const Config& c) {
  std::string text = read_text_file(c.input);
  InputKind kind = detect_kind(text);
  amr::PreprocessMetrics m;
  if (kind == InputKind::PenmanCorpus) {
    amr::CorpusResult r = amr::process_corpus(text);
    write_arc_list_file(out_file(c, "graph.tsv"), r.graph, &r.graph_tags);
    write_text_file(out_file(c, "preserved.tsv"), write_annotation_list(r.preserved));
    m = r.metrics;
  } else if (kind == InputKind::DictionaryJsonl) {
    dict::RawDictionary d = dict::parse_dictionary_jsonl(text);
    dict::Stoplist stop;
    if (!c.stoplist.empty()) stop = dict::read_stoplist(c.stoplist);
    Digraph g = dict::build_dictionary_digraph(d, stop);
    write_arc_list_file(out_file(c, "graph.tsv"), g);
    m.definition_quantity = d.entries.size();
    m.final_quantity = d.entries.size();
  } else {
    throw ParseError(ParseError::Kind::Format,
                     "input is already an arc list; build expects a PENMAN corpus or dictionary "
                     "JSONL");
  }
  ordered_json j = preprocess_json(m);
  write_text_file(out_file(c, "metrics.json"), j.dump(2) + "\n");
  emit(j);
  return 0;
}

int cmd_kernel(const Config& c) {
  LoadedGraph in = load_any(c);
  KernelResult k = kernel(in.graph);
  write_arc_list_file(out_file(c, "kernel.tsv"), k.kernel, &in.annotations);
  ordered_json j;
  j["initial_vertices"] = in.graph.vertex_count();
  j["size_kernel"] = k.kernel.vertex_count();
  j["kernel_nb_arcs"] = k.kernel.arc_count();
  j["nb_undefined"] = k.nb_undefined;
  j["nb_undefining"] = k.nb_undefining;
  emit(j);
  return 0;
}

int cmd_reduce(const Config& c) {
  LoadedGraph in = load_any(c);
  bool nc = c.mode == "nonconfluent";
  ReduceOptions opts;
  opts.shuffle_seed = c.seed;
  ReduceResult r = reduce(in.graph, nc ? nonconfluent_kinds() : confluent_kinds(),
                          nc ? nonconfluent_priorities() : confluent_priorities(), opts);
  if (c.verify) {
    MfvsOptions mopts;
    mopts.max_n = c.max_n;
    if (!preserves_mfvs(in.graph, r.graph, r.trace.included, mopts)) {
      std::cerr << "groundkit: reduction verification failed\n";
      return 4;
    }
  }
  write_arc_list_file(out_file(c, "reduced.tsv"), r.graph, &in.annotations);
  ordered_json j = trace_json(r.trace, r.graph);
  write_text_file(out_file(c, "trace.json"), j.dump(2) + "\n");
  emit(j);
  return 0;
}

int cmd_stats(const Config& c) {
  LoadedGraph in = load_any(c);
  KernelResult k = kernel(in.graph);
  ReduceResult rc = reduce(k.kernel, confluent_kinds(), confluent_priorities());
  ReduceResult rn = reduce(k.kernel, nonconfluent_kinds(), nonconfluent_priorities());
  MetricsReport rep = metrics(in.graph, k, rc.graph, rn.graph);
  ordered_json j;
  j["nb_vertices"] = rep.nb_vertices;
  j["size_kernel"] = rep.size_kernel;
  j["size_reduced_kernel"] = rep.size_reduced_kernel;
  j["nc_reduced_kernel"] = rep.nc_reduced_kernel;
  j["init_nb_arcs"] = rep.init_nb_arcs;
  j["final_nb_arcs"] = rep.final_nb_arcs;
  j["nc_final_arcs"] = rep.nc_final_arcs;
  j["nb_undefined"] = rep.nb_undefined;
  j["nb_undefining"] = rep.nb_undefining;
  j["nb_sccs_kernel"] = rep.nb_sccs_kernel;
  j["kernel_nb_arcs"] = rep.kernel_nb_arcs;
  j["kernel_density"] = format_density(rep.kernel_density);
  write_text_file(out_file(c, "metrics.json"), j.dump(2) + "\n");
  write_text_file(out_file(c, "metrics.csv"), metrics_csv(rep));
  std::cout << metrics_table(rep);
  return 0;
}

int cmd_mfvs(const Config& c) {
  LoadedGraph in = load_any(c);
  MfvsOptions opts;
  opts.max_n = c.max_n;
  FvsResult r = exact_mfvs(in.graph, opts);
  ordered_json j;
  j["size"] = r.size;
  j["witness_count"] = r.witnesses.size();
  std::vector<std::string> labels;
  if (!r.witnesses.empty())
    for (VertexId v : r.witnesses.front()) labels.push_back(in.graph.label(v));
  j["witness"] = labels;
  emit(j);
  return 0;
}

int cmd_common(const Config& c) {
  std::vector<LoadedGraph> graphs(c.inputs.size());
  std::vector<std::exception_ptr> errors(c.inputs.size());
  unsigned workers = std::min<std::size_t>(thread_cap(), c.inputs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next.fetch_add(1); i < c.inputs.size(); i = next.fetch_add(1)) {
      try {
        graphs[i] = read_arc_list_file(c.inputs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<const Digraph*> ptrs;
  for (const LoadedGraph& g : graphs) ptrs.push_back(&g.graph);
  std::vector<std::string> labels = common_symbols(ptrs);
  std::string body;
  for (const std::string& l : labels) body += l + "\n";
  std::cout << body;
  if (!c.out.empty()) write_text_file(out_file(c, "common.txt"), body);
  return 0;
}

int cmd_export_dot(const Config& c) {
  LoadedGraph in = load_any(c);
  std::string dot = write_dot(in.graph, &in.annotations);
  std::cout << dot;
  if (!c.out.empty()) write_text_file(out_file(c, "graph.dot"), dot);
  return 0;
}

// --- selftest ----------------------------------------------------------------

Digraph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  Digraph g;
  for (std::size_t i = 0; i < n; ++i) g.intern("n" + std::to_string(i));
  std::bernoulli_distribution arc(density);
  std::bernoulli_distribution self(density / 4.0);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) {
      if (u == v ? self(rng) : arc(rng)) g.add_arc(u, v);
    }
  return g;
}

constexpr const char* kSelftestCorpus = R"(# ::id apple.0
# ::snt apple is defined as a red round fruit
(d / define-01
   :ARG1 (a / apple)
   :ARG2 (f / fruit
      :mod (r / red)
      :mod (r2 / round)))

# ::id wacky.0
# ::def-amr (s / silly :manner (w2 / way :mod (e / exciting)))
(d / define-01
   :ARG1 (w / wacky))
)";

int cmd_selftest(const Config& c) {
  std::mt19937_64 rng(c.seed.value_or(12345));
  auto fail = [](const char* what) {
    std::cerr << "FAIL " << what << "\n";
    return 4;
  };

  std::uniform_int_distribution<std::size_t> size(1, 8);
  const double densities[] = {0.1, 0.25, 0.4};
  for (int i = 0; i < 40; ++i) {
    Digraph g = random_graph(rng, size(rng), densities[i % 3]);
    ReduceResult r = reduce(g, confluent_kinds(), confluent_priorities());
    if (!preserves_mfvs(g, r.graph, r.trace.included)) return fail("confluent preservation");
  }
  std::cout << "ok confluent reduction preserves the mfvs (40 random graphs)\n";

  for (int i = 0; i < 15; ++i) {
    Digraph g = random_graph(rng, size(rng), densities[i % 3]);
    ReduceResult r = reduce(g, nonconfluent_kinds(), nonconfluent_priorities());
    if (!preserves_mfvs(g, r.graph, r.trace.included)) return fail("nonconfluent preservation");
  }
  std::cout << "ok nonconfluent reduction preserves the mfvs (15 random graphs)\n";

  for (int i = 0; i < 25; ++i) {
    Digraph g = random_graph(rng, size(rng), densities[i % 3]);
    KernelResult k = kernel(g);
    if (k.kernel.vertex_count() + k.nb_undefined + k.nb_undefining != g.vertex_count())
      return fail("kernel conservation");
    if (exact_mfvs(g).size != exact_mfvs(k.kernel).size) return fail("kernel mfvs identity");
  }
  std::cout << "ok kernelization conserves counts and the mfvs size (25 random graphs)\n";

  amr::CorpusResult r = amr::process_corpus(kSelftestCorpus);
  if (!amr::metrics_identity_holds(r.metrics) || r.metrics.final_quantity != 2)
    return fail("corpus pipeline metrics");
  std::cout << "ok corpus pipeline metrics identity\n";

  std::vector<penman::PenmanDocument> docs = penman::parse_corpus(kSelftestCorpus);
  for (const penman::PenmanDocument& d : docs) {
    penman::PenmanDocument again = penman::parse_penman(penman::serialize_penman(d));
    if (!penman::structurally_equal(d.graph, again.graph)) return fail("penman round-trip");
  }
  std::cout << "ok penman round-trip\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"definitional digraph toolkit: build, kernelize, reduce, measure"};
  app.require_subcommand(1);
  Config cfg;

  std::uint64_t seed_val = 0;

  auto add_out = [&](CLI::App* sub, const char* dflt) {
    cfg.out = dflt;
    return sub->add_option("--out", cfg.out, "output directory");
  };
  auto add_seed = [&](CLI::App* sub) {
    return sub->add_option("--seed", seed_val, "seed for randomized orders");
  };

  CLI::App* build = app.add_subcommand("build", "corpus or dictionary to definitional digraph");
  build->add_option("input", cfg.input, "PENMAN corpus or dictionary JSONL")->required();
  build->add_option("--stoplist", cfg.stoplist, "closed-class word list");
  add_out(build, ".");

  CLI::App* kern = app.add_subcommand("kernel", "trim undefined/undefining vertices");
  kern->add_option("input", cfg.input, "arc list, corpus or dictionary")->required();
  kern->add_option("--stoplist", cfg.stoplist, "closed-class word list");
  add_out(kern, ".");

  CLI::App* red = app.add_subcommand("reduce", "apply the reduction engine");
  red->add_option("input", cfg.input, "arc list, corpus or dictionary")->required();
  red->add_option("--mode", cfg.mode, "reduction family")
      ->check(CLI::IsMember({"confluent", "nonconfluent"}));
  red->add_flag("--verify", cfg.verify, "check mfvs preservation with the exact oracle");
  red->add_option("--max-n", cfg.max_n, "oracle size cap")->check(CLI::Range(1, 24));
  red->add_option("--stoplist", cfg.stoplist, "closed-class word list");
  add_seed(red);
  add_out(red, ".");

  CLI::App* stats = app.add_subcommand("stats", "kernel + reduction summary metrics");
  stats->add_option("input", cfg.input, "arc list, corpus or dictionary")->required();
  stats->add_option("--stoplist", cfg.stoplist, "closed-class word list");
  add_out(stats, ".");

  CLI::App* mfvs = app.add_subcommand("mfvs", "exact minimum feedback vertex set");
  mfvs->add_option("input", cfg.input, "arc list, corpus or dictionary")->required();
  mfvs->add_option("--max-n", cfg.max_n, "oracle size cap")->check(CLI::Range(1, 24));
  mfvs->add_option("--stoplist", cfg.stoplist, "closed-class word list");

  CLI::App* common = app.add_subcommand("common", "symbols common to all graphs");
  common->add_option("inputs", cfg.inputs, "arc-list files")->required()->expected(-1);
  add_out(common, "");

  CLI::App* dot = app.add_subcommand("export-dot", "GraphViz export");
  dot->add_option("input", cfg.input, "arc list, corpus or dictionary")->required();
  dot->add_option("--stoplist", cfg.stoplist, "closed-class word list");
  add_out(dot, "");

  CLI::App* selftest = app.add_subcommand("selftest", "built-in property checks");
  add_seed(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (red->count("--seed") || selftest->count("--seed")) cfg.seed = seed_val;

  try {
    if (build->parsed()) return cmd_build(cfg);
    if (kern->parsed()) return cmd_kernel(cfg);
    if (red->parsed()) return cmd_reduce(cfg);
    if (stats->parsed()) return cmd_stats(cfg);
    if (mfvs->parsed()) return cmd_mfvs(cfg);
    if (common->parsed()) return cmd_common(cfg);
    if (dot->parsed()) return cmd_export_dot(cfg);
    if (selftest->parsed()) return cmd_selftest(cfg);
  } catch (const CapExceededError& e) {
    std::cerr << "groundkit: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "groundkit: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "groundkit: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "groundkit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "groundkit: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("groundkit");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace groundkit::cli
