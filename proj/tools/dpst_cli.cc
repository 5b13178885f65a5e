// Copyright 2026 The dpst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpst_cli.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dpst/budget.h"
#include "dpst/corpus.h"
#include "dpst/corpus_store.h"
#include "dpst/embedding.h"
#include "dpst/error.h"
#include "dpst/evaluation.h"
#include "dpst/extractor.h"
#include "dpst/http.h"
#include "dpst/http_embedding.h"
#include "dpst/kmeans.h"
#include "dpst/mechanism.h"
#include "dpst/privatizer.h"
#include "dpst/random.h"
#include "dpst/reconstruction.h"
#include "dpst/record_io.h"
#include "dpst/scorer.h"
#include "dpst/text.h"
#include "dpst/vector_file.h"
#include "json.hpp"

namespace dpst::cli {
namespace {

using Json = nlohmann::json;
namespace fs = std::filesystem;

constexpr char kFooter[] = R"(File formats:
  corpus dir   triples.jsonl   {"id","s","p","o"} per line
               vectors.bin     DPSTVEC1: magic, u32 dim, u64 rows, f32 LE
               vectors.keys    one formatted triple per line
               clusters.k<k>.bin
                               DPSTCLU1: magic, u32 k, u32 dim, u64 rows,
                               k*dim f32 centroids, rows u32 assignments
               meta.json       embedding spec, dedup settings, built k
  documents    {"doc_id","text"} per line
  records      {"doc_id","fallback","epsilon_base","epsilon_doc",
                "epsilon_triple","inputs","clusters","outputs"} per line
  scores       {"dataset","method","epsilon_base","geval","task",
                "ep_static","ep_adaptive"} per line

Exit status: 0 ok, 1 runtime error, 2 usage error.)";

// Embedding flags shared by the subcommands that embed text. Empty fields
// mean "use what the corpus was built with".
struct EmbeddingFlags {
  std::string mode;
  std::optional<std::uint64_t> seed;
  std::size_t dimension = kDefaultEmbeddingDimension;
  std::string endpoint;
  std::string vectors;
  std::string keys;
};

void AddEmbeddingFlags(CLI::App* cmd, EmbeddingFlags& f) {
  cmd->add_option("--embedding", f.mode, "stub | precomputed | http")
      ->check(CLI::IsMember({"stub", "precomputed", "http"}));
  cmd->add_option("--embed-seed", f.seed,
                  "Seed of the stub embedding (default: --seed)");
  cmd->add_option("--endpoint", f.endpoint, "Embedding service base URL");
  cmd->add_option("--vectors", f.vectors, "DPSTVEC1 file (precomputed)");
  cmd->add_option("--keys", f.keys, "Key file matching --vectors");
}

std::unique_ptr<EmbeddingProvider> MakeProvider(const EmbeddingSpec& spec,
                                                const EmbeddingFlags& f,
                                                std::size_t dimension) {
  if (spec.mode == "stub") {
    return std::make_unique<StubEmbeddingProvider>(dimension, spec.seed);
  }
  if (spec.mode == "precomputed") {
    if (f.vectors.empty() || f.keys.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "precomputed embeddings need --vectors and --keys");
    }
    return std::make_unique<PrecomputedEmbeddingProvider>(
        PrecomputedEmbeddingProvider::FromFiles(f.vectors, f.keys, dimension));
  }
  if (spec.mode == "http") {
    if (spec.endpoint.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "http embeddings need --endpoint");
    }
    HttpOptions http;
    http.endpoint = spec.endpoint;
    return std::make_unique<HttpEmbeddingProvider>(http, dimension);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown embedding mode '" + spec.mode + "'");
}

// Corpus settings overridden by whatever was given on the command line.
EmbeddingSpec ResolveSpec(EmbeddingSpec spec, const EmbeddingFlags& f) {
  if (!f.mode.empty()) spec.mode = f.mode;
  if (f.seed) spec.seed = *f.seed;
  if (!f.endpoint.empty()) spec.endpoint = f.endpoint;
  return spec;
}

std::unique_ptr<TripleScorer> MakeScorer(
    const std::string& scores_path, std::span<const SemanticTriple> reference) {
  if (!scores_path.empty()) {
    return std::make_unique<TableScorer>(TableScorer::FromFile(scores_path, 0.0));
  }
  return std::make_unique<UnigramSurprisalScorer>(
      UnigramSurprisalScorer::FromTriples(reference));
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results keep input
// order; the first exception (by index) is rethrown after all workers stop.
template <typename T>
std::vector<T> ParallelMap(std::size_t n, std::size_t jobs,
                           const std::function<T(std::size_t)>& fn) {
  std::vector<T> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

// "-" or empty writes to `out`.
void WriteText(const std::string& path, const std::string& text,
               std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIoError, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorCode::kIoError, "short write to " + path);
}

std::string LogLine(const PrivatizationRecord& r) {
  Json j{{"event", "privatize"},
         {"doc_id", r.doc_id},
         {"fallback", r.fallback},
         {"triples", r.inputs.size()},
         {"epsilon_base", r.budget.base_epsilon},
         {"epsilon_doc", r.budget.document_epsilon},
         {"clusters", r.neighborhoods}};
  j["epsilon_triple"] =
      r.fallback ? Json(nullptr) : Json(r.budget.per_triple_epsilon);
  return j.dump();
}

struct PrivatizeFlags {
  std::string corpus;
  std::uint32_t k = 0;
  std::string input;
  std::string output;
  double eps_base = 0.1;
  std::optional<double> avg_words;
  bool per_doc_words = false;
  std::string extractor = "heuristic";
  std::string extractions;
  std::string scores;
  EmbeddingFlags embedding;
  std::size_t jobs = 1;
};

void AddPrivatizeFlags(CLI::App* cmd, PrivatizeFlags& f) {
  cmd->add_option("--corpus", f.corpus, "Corpus directory")->required();
  cmd->add_option("--k", f.k, "Cluster count (must already be built)")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--input", f.input, "Documents, JSON lines")->required();
  cmd->add_option("--output", f.output, "Records file (default: stdout)");
  cmd->add_option("--eps-base", f.eps_base,
                  "Base epsilon per word: 0.1, 0.5, 1 or any positive value")
      ->check(CLI::PositiveNumber);
  auto* avg = cmd->add_option("--avg-words", f.avg_words,
                              "Dataset average words per document");
  auto* per_doc = cmd->add_flag("--per-doc-words", f.per_doc_words,
                                "Use each document's own word count");
  avg->excludes(per_doc);
  per_doc->excludes(avg);
  cmd->add_option("--extractor", f.extractor, "heuristic | imported")
      ->check(CLI::IsMember({"heuristic", "imported"}));
  cmd->add_option("--extractions", f.extractions,
                  "Imported extractions, JSON lines");
  cmd->add_option("--scores", f.scores, "Triple scores for deduplication");
  cmd->add_option("--jobs", f.jobs, "Documents processed in parallel")
      ->check(CLI::PositiveNumber);
  AddEmbeddingFlags(cmd, f.embedding);
}

// Everything privatization needs, loaded once per run.
struct PrivatizeContext {
  StoredCorpus stored;
  ClusterIndex index;
  std::unique_ptr<EmbeddingProvider> provider;
  std::unique_ptr<ExtractorProvider> extractor;
  std::unique_ptr<TripleScorer> scorer;
  std::unique_ptr<Privatizer> privatizer;
  BudgetPolicy budget;
};

std::unique_ptr<PrivatizeContext> LoadPrivatizeContext(
    const PrivatizeFlags& f, const std::vector<Document>& docs) {
  auto ctx = std::make_unique<PrivatizeContext>();
  ctx->stored = LoadCorpus(f.corpus);
  ctx->index = LoadClusterIndex(f.corpus, f.k);
  const EmbeddingSpec spec = ResolveSpec(ctx->stored.meta.embedding, f.embedding);
  ctx->provider = MakeProvider(spec, f.embedding, ctx->stored.corpus.dimension());
  if (f.extractor == "imported") {
    if (f.extractions.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--extractor imported needs --extractions");
    }
    ctx->extractor = std::make_unique<ImportedExtractor>(
        ImportedExtractor::FromFile(f.extractions));
  } else {
    ctx->extractor = std::make_unique<HeuristicExtractor>();
  }
  ctx->scorer = MakeScorer(f.scores, ctx->stored.corpus.triples());
  PrivatizerOptions opts;
  opts.dedup_threshold = ctx->stored.meta.dedup_threshold;
  opts.dedup_seed = ctx->stored.meta.dedup_seed;
  ctx->privatizer = std::make_unique<Privatizer>(
      ctx->stored.corpus, ctx->index, *ctx->provider, *ctx->extractor,
      *ctx->scorer, opts);

  ctx->budget.base_epsilon = f.eps_base;
  if (f.per_doc_words) {
    ctx->budget.source = BudgetPolicy::WordSource::kPerDocument;
  } else if (f.avg_words) {
    ctx->budget.avg_words = *f.avg_words;
  } else {
    // No word count given: average over the input documents.
    std::size_t words = 0;
    for (const auto& d : docs) words += CountWords(d.text);
    ctx->budget.avg_words =
        docs.empty() ? 0.0
                     : static_cast<double>(words) / static_cast<double>(docs.size());
  }
  return ctx;
}

std::vector<PrivatizationRecord> PrivatizeAll(const PrivatizeContext& ctx,
                                              const std::vector<Document>& docs,
                                              std::uint64_t seed,
                                              std::size_t jobs) {
  return ParallelMap<PrivatizationRecord>(
      docs.size(), jobs, [&](std::size_t i) {
        MechanismConfig config;
        config.rng_seed = DeriveSeed(seed, docs[i].doc_id);
        return ctx.privatizer->Privatize(docs[i].doc_id, docs[i].text,
                                         ctx.budget, config);
      });
}

std::string ReconstructRecord(const PrivatizationRecord& r,
                              const Reconstructor& reconstructor) {
  if (r.fallback) return r.passthrough_text;
  std::vector<SemanticTriple> triples;
  triples.reserve(r.outputs.size());
  for (const auto& o : r.outputs) triples.push_back(o.triple);
  return ReconstructDocument(triples, reconstructor);
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::uint64_t seed = 0;
};

int RunBuildCorpus(Context& c, const std::string& triples_path,
                   const std::string& corpus_dir, const EmbeddingFlags& ef,
                   double threshold, const std::string& scores) {
  const std::vector<SemanticTriple> raw = ReadTripleList(triples_path);
  EmbeddingSpec spec;
  spec.seed = c.seed;
  spec = ResolveSpec(spec, ef);
  const auto provider = MakeProvider(spec, ef, ef.dimension);
  const auto scorer = MakeScorer(scores, raw);
  IngestOptions opts;
  opts.dedup_threshold = threshold;
  opts.dedup_seed = c.seed;
  const Corpus corpus = IngestTriples(raw, *provider, *scorer, opts);

  CorpusMeta meta;
  meta.embedding = spec;
  meta.dedup_seed = c.seed;
  meta.dedup_threshold = threshold;
  fs::create_directories(corpus_dir);
  SaveCorpus(corpus_dir, corpus, meta);
  c.out << Json{{"raw", raw.size()},
                {"stored", corpus.size()},
                {"dimension", corpus.dimension()},
                {"embedding", spec.mode}}
               .dump()
        << "\n";
  return kExitOk;
}

int RunCluster(Context& c, const std::string& corpus_dir, std::uint32_t k,
               const KMeansOptions& opts) {
  const StoredCorpus stored = LoadCorpus(corpus_dir);
  const KMeansResult result =
      KMeansCluster(stored.corpus.vectors(), k, c.seed, opts);
  SaveClusterIndex(corpus_dir, result.index);
  const auto sizes = ClusterSizes(result.index);
  c.out << Json{{"k", k},
                {"seed", c.seed},
                {"iterations", result.iterations},
                {"converged", result.converged},
                {"objective", result.objective_history.empty()
                                  ? 0.0
                                  : result.objective_history.back()},
                {"min_size", *std::min_element(sizes.begin(), sizes.end())},
                {"max_size", *std::max_element(sizes.begin(), sizes.end())}}
               .dump()
        << "\n";
  return kExitOk;
}

int RunPrivatize(Context& c, const PrivatizeFlags& f) {
  const std::vector<Document> docs = ReadDocuments(f.input);
  const auto ctx = LoadPrivatizeContext(f, docs);
  const auto records = PrivatizeAll(*ctx, docs, c.seed, f.jobs);
  std::string text;
  for (const auto& r : records) {
    text += RecordToJsonLine(r);
    text.push_back('\n');
    c.err << LogLine(r) << "\n";
  }
  WriteText(f.output, text, c.out);
  return kExitOk;
}

struct ReconstructFlags {
  std::string input;
  std::string output;
  std::string client = "offline-joiner";
  std::string endpoint;
  std::string model = CompletionOptions{}.model;
  std::optional<int> max_tokens;
  bool degrade = false;
  std::size_t jobs = 1;
};

int RunReconstruct(Context& c, const ReconstructFlags& f) {
  const std::vector<PrivatizationRecord> records = ReadRecords(f.input);
  std::unique_ptr<CompletionClient> client;
  std::unique_ptr<Reconstructor> reconstructor;
  if (f.client == "http") {
    if (f.endpoint.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "--client http needs --endpoint");
    }
    CompletionOptions opts;
    opts.http.endpoint = f.endpoint;
    opts.model = f.model;
    opts.max_tokens = f.max_tokens;
    client = std::make_unique<HttpCompletionClient>(opts);
    reconstructor = std::make_unique<LlmReconstructor>(*client, f.degrade);
  } else {
    reconstructor = std::make_unique<OfflineJoiner>();
  }
  const auto texts = ParallelMap<std::string>(
      records.size(), f.jobs,
      [&](std::size_t i) { return ReconstructRecord(records[i], *reconstructor); });
  std::string text;
  for (std::size_t i = 0; i < records.size(); ++i) {
    text += Json{{"doc_id", records[i].doc_id},
                 {"text", texts[i]},
                 {"fallback", records[i].fallback}}
                .dump();
    text.push_back('\n');
  }
  WriteText(f.output, text, c.out);
  return kExitOk;
}

struct EvalFlags {
  std::string scores;
  std::string format = "text";
  std::string original;
  std::string privatized;
  std::vector<std::string> endpoints;
  std::size_t dimension = kDefaultEmbeddingDimension;
  std::string output;
};

int RunEval(Context& c, const EvalFlags& f) {
  if (!f.scores.empty()) {
    const auto rows = ReadScoreFile(f.scores);
    const auto gains = ComputeRelativeGains(rows);
    WriteText(f.output,
              f.format == "json" ? RelativeGainsToJsonLines(gains)
                                 : RelativeGainsToText(gains),
              c.out);
    return kExitOk;
  }
  const auto originals = ReadDocuments(f.original);
  const auto privatized = ReadDocuments(f.privatized);
  std::map<std::string, std::string> by_id;
  for (const auto& d : privatized) by_id[d.doc_id] = d.text;
  std::vector<TextPair> pairs;
  for (const auto& d : originals) {
    const auto it = by_id.find(d.doc_id);
    if (it != by_id.end()) pairs.push_back({d.text, it->second});
  }
  std::vector<std::unique_ptr<EmbeddingProvider>> owned;
  if (f.endpoints.empty()) {
    owned.push_back(std::make_unique<StubEmbeddingProvider>(f.dimension, c.seed));
  }
  for (const auto& e : f.endpoints) {
    HttpOptions http;
    http.endpoint = e;
    owned.push_back(std::make_unique<HttpEmbeddingProvider>(http, f.dimension));
  }
  std::vector<const EmbeddingProvider*> providers;
  for (const auto& p : owned) providers.push_back(p.get());
  const double mean = MeanPairwiseSimilarity(pairs, providers);
  WriteText(f.output,
            Json{{"pairs", pairs.size()},
                 {"providers", providers.size()},
                 {"mean_similarity", mean}}
                    .dump() +
                "\n",
            c.out);
  return kExitOk;
}

int RunBench(Context& c, const PrivatizeFlags& f) {
  const std::vector<Document> docs = ReadDocuments(f.input);
  const auto ctx = LoadPrivatizeContext(f, docs);
  const OfflineJoiner joiner;
  std::vector<std::string> texts;
  texts.reserve(docs.size());
  for (const auto& d : docs) texts.push_back(d.text);

  const auto start = std::chrono::steady_clock::now();
  const auto records = PrivatizeAll(*ctx, docs, c.seed, f.jobs);
  const auto outputs = ParallelMap<std::string>(
      records.size(), f.jobs,
      [&](std::size_t i) { return ReconstructRecord(records[i], joiner); });
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;

  const EfficiencyReport report = MakeEfficiencyReport(elapsed.count(), texts);
  WriteText(f.output,
            Json{{"total_seconds", report.total_seconds},
                 {"doc_count", report.doc_count},
                 {"word_count", report.word_count},
                 {"avg_per_doc", report.avg_per_doc},
                 {"avg_per_word", report.avg_per_word},
                 {"jobs", f.jobs}}
                    .dump() +
                "\n",
            c.out);
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"dpst: document privatization with semantic triples", "dpst"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Context ctx{out, err};
  app.add_option("--seed", ctx.seed, "Master seed for all randomness")
      ->capture_default_str();

  std::string triples_path;
  std::string corpus_dir;
  EmbeddingFlags build_embedding;
  double threshold = kDefaultDedupThreshold;
  std::string build_scores;
  auto* build = app.add_subcommand("build-corpus",
                                   "Deduplicate, embed and store public triples");
  build->add_option("--triples", triples_path, "Triples, JSON lines {s,p,o}")
      ->required();
  build->add_option("--corpus", corpus_dir, "Output corpus directory")
      ->required();
  build->add_option("--dim", build_embedding.dimension, "Embedding dimension")
      ->check(CLI::PositiveNumber);
  build->add_option("--dedup-threshold", threshold, "MinHash LSH threshold")
      ->check(CLI::Range(0.0, 1.0));
  build->add_option("--scores", build_scores,
                    "Triple scores {triple,score}; default unigram surprisal");
  AddEmbeddingFlags(build, build_embedding);
  build->add_option("--seed", ctx.seed, "Master seed");

  std::uint32_t cluster_k = 0;
  KMeansOptions kmeans_opts;
  std::string cluster_corpus;
  auto* cluster = app.add_subcommand("cluster", "Build a k-means cluster index");
  cluster->add_option("--corpus", cluster_corpus, "Corpus directory")->required();
  cluster->add_option("--k", cluster_k, "Number of clusters")
      ->required()
      ->check(CLI::PositiveNumber);
  cluster->add_option("--max-iter", kmeans_opts.max_iterations,
                      "Lloyd iteration cap")
      ->check(CLI::PositiveNumber);
  cluster->add_option("--seed", ctx.seed, "Master seed");

  PrivatizeFlags priv_flags;
  auto* privatize = app.add_subcommand("privatize", "Privatize documents");
  AddPrivatizeFlags(privatize, priv_flags);
  privatize->add_option("--seed", ctx.seed, "Master seed");

  ReconstructFlags rec_flags;
  auto* reconstruct = app.add_subcommand(
      "reconstruct", "Turn privatization records back into text");
  reconstruct->add_option("--input", rec_flags.input, "Records file")->required();
  reconstruct->add_option("--output", rec_flags.output,
                          "Documents file (default: stdout)");
  reconstruct->add_option("--client", rec_flags.client, "offline-joiner | http")
      ->check(CLI::IsMember({"offline-joiner", "http"}));
  reconstruct->add_option("--endpoint", rec_flags.endpoint,
                          "Chat completions base URL");
  reconstruct->add_option("--model", rec_flags.model, "Model name")
      ->capture_default_str();
  reconstruct->add_option("--max-tokens", rec_flags.max_tokens,
                          "Completion length cap");
  reconstruct->add_flag("--degrade-to-joiner", rec_flags.degrade,
                        "Join triples when the LLM call fails");
  reconstruct->add_option("--jobs", rec_flags.jobs, "Parallel requests")
      ->check(CLI::PositiveNumber);

  EvalFlags eval_flags;
  auto* eval = app.add_subcommand(
      "eval", "Relative Gain from a score file, or mean text similarity");
  auto* eval_scores =
      eval->add_option("--scores", eval_flags.scores, "Score file, JSON lines");
  eval->add_option("--format", eval_flags.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  auto* eval_orig = eval->add_option("--original", eval_flags.original,
                                     "Original documents");
  auto* eval_priv = eval->add_option("--private", eval_flags.privatized,
                                     "Privatized documents");
  eval->add_option("--endpoint", eval_flags.endpoints,
                   "Embedding service (repeatable); default stub");
  eval->add_option("--dim", eval_flags.dimension, "Embedding dimension")
      ->check(CLI::PositiveNumber);
  eval->add_option("--output", eval_flags.output, "Output file");
  eval->add_option("--seed", ctx.seed, "Master seed");
  eval_scores->excludes(eval_orig)->excludes(eval_priv);
  eval_orig->needs(eval_priv);
  eval_priv->needs(eval_orig);

  PrivatizeFlags bench_flags;
  auto* bench = app.add_subcommand(
      "bench", "Time privatization plus offline reconstruction");
  AddPrivatizeFlags(bench, bench_flags);
  bench->add_option("--seed", ctx.seed, "Master seed");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("dpst");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (eval->parsed() && eval_flags.scores.empty() &&
        eval_flags.original.empty()) {
      throw CLI::ValidationError("eval", "needs --scores or --original with --private");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (build->parsed()) {
      return RunBuildCorpus(ctx, triples_path, corpus_dir, build_embedding,
                            threshold, build_scores);
    }
    if (cluster->parsed()) return RunCluster(ctx, cluster_corpus, cluster_k,
                                             kmeans_opts);
    if (privatize->parsed()) return RunPrivatize(ctx, priv_flags);
    if (reconstruct->parsed()) return RunReconstruct(ctx, rec_flags);
    if (eval->parsed()) return RunEval(ctx, eval_flags);
    if (bench->parsed()) return RunBench(ctx, bench_flags);
  } catch (const std::exception& e) {
    err << "dpst: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitUsage;
}

}  // namespace dpst::cli
