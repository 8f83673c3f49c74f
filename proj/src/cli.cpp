#include "topicmetrics/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "topicmetrics/classify.hpp"
#include "topicmetrics/coherence.hpp"
#include "topicmetrics/corpus.hpp"
#include "topicmetrics/diagnostics.hpp"
#include "topicmetrics/embedding.hpp"
#include "topicmetrics/error.hpp"
#include "topicmetrics/features.hpp"
#include "topicmetrics/io.hpp"
#include "topicmetrics/report.hpp"
#include "topicmetrics/topics.hpp"

namespace topicmetrics::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

// Flag combinations CLI11 cannot express; reported like any parse error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultLsaDim = 64;

std::string dataset_name(const std::string& given, const fs::path& input) {
  return given.empty() ? input.stem().string() : given;
}

Corpus load_prepped(const fs::path& path) {
  auto corpus = load_corpus(path, format_for_path(path));
  if (!corpus.preprocessed) {
    throw PreconditionError(fmt::format("{} has no tokens; run `prep` first", path.string()));
  }
  return corpus;
}

// Embeddings for the cluster model: the given EMB1 file, or LSA over TF-IDF.
EmbeddingMatrix cluster_embeddings(const std::string& path, const DocTermMatrix& tfidf, std::uint64_t seed) {
  if (!path.empty()) return load_embeddings(path, tfidf.rows());
  const std::size_t dim = std::min({kDefaultLsaDim, tfidf.rows(), tfidf.cols()});
  return lsa_embed(tfidf, dim, derive_seed(seed, "lsa"));
}

// ---------------------------------------------------------------- prep

struct PrepArgs {
  std::string input, output, format = "auto", stopwords;
  bool no_stem = false;
};

void do_prep(const PrepArgs& a) {
  CorpusFormat format = a.format == "auto" ? format_for_path(a.input)
                        : a.format == "csv" ? CorpusFormat::csv
                                            : CorpusFormat::jsonl;
  PreprocessOptions opts;
  opts.stem = !a.no_stem;
  opts.stopwords = a.stopwords.empty() ? default_stopwords() : load_stopwords(a.stopwords);
  auto corpus = preprocess_corpus(load_corpus(a.input, format), opts);
  const json config = {{"command", "prep"},
                       {"input", a.input},
                       {"format", a.format},
                       {"stem", opts.stem},
                       {"stopwords", a.stopwords.empty() ? "default" : a.stopwords}};
  io::write_file_atomic(a.output, serialize_corpus_jsonl(corpus, config.dump()));
}

// ---------------------------------------------------------------- embed

struct EmbedArgs {
  std::string input, output, embeddings;
  std::size_t dim = kDefaultLsaDim;
  std::size_t min_df = 1;
  std::uint64_t seed = 0;
};

void write_embeddings(const EmbeddingMatrix& emb, const std::string& output, const json& config) {
  // EMB1 has no room for metadata, so the config travels in a sidecar.
  io::write_file_atomic(output, serialize_embeddings(emb));
  io::write_file_atomic(output + ".config.json", config.dump(2) + "\n");
}

void do_embed_lsa(const EmbedArgs& a) {
  const auto corpus = load_prepped(a.input);
  const auto tfidf = build_doc_term_matrix(corpus, Weighting::tfidf, a.min_df);
  const auto emb = lsa_embed(tfidf, a.dim, derive_seed(a.seed, "lsa"));
  write_embeddings(emb, a.output,
                   {{"command", "embed lsa"}, {"input", a.input}, {"dim", a.dim}, {"min_df", a.min_df}, {"seed", a.seed}});
}

void do_embed_load(const EmbedArgs& a) {
  const auto corpus = load_prepped(a.input);
  const auto emb = load_embeddings(a.embeddings, corpus.size());
  write_embeddings(emb, a.output, {{"command", "embed load"}, {"input", a.input}, {"embeddings", a.embeddings}});
}

// ---------------------------------------------------------------- topics

struct ModelArgs {
  std::size_t lda_iterations = 1000;
  std::optional<double> alpha;
  double beta = 0.01;
  std::size_t nmf_iterations = 200;
  double nmf_tol = 1e-4;
  std::size_t reduced_dim = 5;
  std::size_t min_df = 1;
  std::string embeddings;

  ModelSpec spec(ModelKind kind) const {
    ModelSpec s;
    s.kind = kind;
    s.lda.alpha = alpha;
    s.lda.beta = beta;
    s.lda.iterations = lda_iterations;
    s.nmf.iterations = nmf_iterations;
    s.nmf.tol = nmf_tol;
    s.cluster.reduced_dim = reduced_dim;
    return s;
  }

  json to_json() const {
    json j = {{"lda_iterations", lda_iterations}, {"beta", beta},   {"nmf_iterations", nmf_iterations},
              {"nmf_tol", nmf_tol},               {"reduced_dim", reduced_dim}, {"min_df", min_df},
              {"embeddings", embeddings.empty() ? "lsa" : embeddings}};
    j["alpha"] = alpha ? json(*alpha) : json("50/K");
    return j;
  }
};

// Matrices shared by every fit on one corpus.
struct Prepared {
  DocTermMatrix counts;
  DocTermMatrix tfidf;
  std::optional<EmbeddingMatrix> embeddings;

  TopicInputs inputs() const { return {&counts, &tfidf, embeddings ? &*embeddings : nullptr}; }
};

Prepared prepare_inputs(const Corpus& corpus, const ModelArgs& m, bool need_embeddings, std::uint64_t seed) {
  Prepared p{build_doc_term_matrix(corpus, Weighting::count, m.min_df),
             build_doc_term_matrix(corpus, Weighting::tfidf, m.min_df), std::nullopt};
  if (need_embeddings) p.embeddings = cluster_embeddings(m.embeddings, p.tfidf, seed);
  return p;
}

struct FitArgs {
  std::string input, output, model = "cluster";
  std::size_t k = 10;
  std::uint64_t seed = 0;
  ModelArgs m;
};

void do_topics_fit(const FitArgs& a) {
  if (a.k < 1) throw PreconditionError(fmt::format("--k must be at least 1, got {}", a.k));
  const auto kind = parse_model_kind(a.model);
  const auto corpus = load_prepped(a.input);
  const auto prepared = prepare_inputs(corpus, a.m, kind == ModelKind::cluster, a.seed);
  // Same derivation as the sweep, so a fit reproduces its sweep row.
  const auto seed = derive_seed(a.seed, fmt::format("{}:{}", to_string(kind), a.k));
  const auto result = fit_topic_model(a.m.spec(kind), prepared.inputs(), a.k, seed);
  json config = {{"command", "topics fit"}, {"input", a.input}, {"model", to_string(kind)},
                 {"k", a.k},                {"seed", a.seed},   {"hyperparams", a.m.to_json()}};
  io::write_file_atomic(a.output, serialize_model(result, config.dump()));
}

// ---------------------------------------------------------------- coherence

struct SweepArgs {
  std::string input, output, measure = "npmi", dataset;
  std::vector<std::string> models = {"lda", "nmf", "cluster"};
  std::size_t k_min = 5, k_max = 50, step = 5, top_n = 10, window = 10;
  std::uint64_t seed = 0;
  ModelArgs m;
};

void do_sweep(const SweepArgs& a) {
  std::vector<ModelSpec> specs;
  bool need_embeddings = false;
  for (const auto& name : a.models) {
    specs.push_back(a.m.spec(parse_model_kind(name)));
    need_embeddings |= specs.back().kind == ModelKind::cluster;
  }
  if (specs.empty()) throw UsageError("--models is empty");
  CoherenceConfig cc;
  cc.measure = parse_coherence_measure(a.measure);
  cc.top_n = a.top_n;
  cc.window = a.window;
  const auto corpus = load_prepped(a.input);
  const auto prepared = prepare_inputs(corpus, a.m, need_embeddings, a.seed);
  const auto result = sweep(corpus, prepared.inputs(), specs, a.k_min, a.k_max, a.step, cc, a.seed);
  json models = json::array();
  for (const auto& s : specs) models.push_back(to_string(s.kind));
  const json config = {{"command", "coherence sweep"},
                       {"input", a.input},
                       {"dataset", dataset_name(a.dataset, a.input)},
                       {"models", models},
                       {"k_min", a.k_min},
                       {"k_max", a.k_max},
                       {"step", a.step},
                       {"measure", a.measure},
                       {"top_n", a.top_n},
                       {"window", a.window},
                       {"seed", a.seed},
                       {"hyperparams", a.m.to_json()}};
  io::write_file_atomic(a.output, serialize_sweep_csv(result, config.dump()));
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string input, output, model, features = "topic", classifier = "logistic", lexicon, dataset;
  std::size_t folds = 10;
  double split = 0.8;
  std::uint64_t seed = 0;
  ClassifierSpec spec;
};

void do_classify(const ClassifyArgs& a) {
  const auto kind = parse_feature_kind(a.features);
  ClassifierSpec spec = a.spec;
  spec.kind = parse_classifier_kind(a.classifier);
  if (kind != FeatureKind::sentiment && a.model.empty()) {
    throw UsageError(fmt::format("--features {} needs --model", a.features));
  }
  const auto corpus = load_prepped(a.input);
  const auto y = stance_labels(corpus);

  auto sentiment = [&] {
    return a.lexicon.empty() ? sentiment_from_column(corpus) : sentiment_from_lexicon(corpus, load_lexicon(a.lexicon));
  };
  auto topics = [&] {
    const auto model = load_model(a.model);
    if (model.n_docs() != corpus.size()) {
      throw DataError(fmt::format("model has {} documents but the corpus has {}", model.n_docs(), corpus.size()));
    }
    return one_hot_topics(model.assignments, model.k);
  };
  FeatureMatrix x;
  switch (kind) {
    case FeatureKind::topic:
      x = topics();
      break;
    case FeatureKind::sentiment:
      x = sentiment();
      break;
    case FeatureKind::combined:
      x = combine_features(topics(), sentiment());
      break;
  }

  const auto r = evaluate_protocol(x, y, spec, a.folds, a.split, a.seed);

  json config = {{"command", "classify"}, {"input", a.input},  {"model", a.model},
                 {"features", a.features}, {"classifier", to_string(spec.kind)},
                 {"folds", a.folds},       {"split", a.split}, {"seed", a.seed},
                 {"lexicon", a.lexicon.empty() ? "column" : a.lexicon}};
  switch (spec.kind) {
    case ClassifierKind::logistic:
      config["hyperparams"] = {{"l2", spec.logistic.l2},
                               {"learning_rate", spec.logistic.learning_rate},
                               {"epochs", spec.logistic.epochs}};
      break;
    case ClassifierKind::knn:
      config["hyperparams"] = {{"k", spec.knn.k}, {"metric", "euclidean"}};
      break;
    case ClassifierKind::linear_svm:
      config["hyperparams"] = {
          {"c", spec.svm.c}, {"learning_rate", spec.svm.learning_rate}, {"epochs", spec.svm.epochs}};
      break;
  }

  json out = {{"dataset", dataset_name(a.dataset, a.input)},
              {"feature_kind", to_string(kind)},
              {"classifier", to_string(spec.kind)},
              {"folds", r.cv.fold_f1},
              {"mean", r.cv.mean},
              {"std", r.cv.std},
              {"seed", a.seed},
              {"cv_scope", "training split"},
              {"holdout_f1", r.holdout_f1},
              {"n_train", r.n_train},
              {"n_test", r.n_test},
              {"config", config}};
  // The correlation is a dataset property; record it whenever sentiment exists.
  try {
    const auto s = sentiment();
    std::vector<double> values(s.values.data(), s.values.data() + s.values.size());
    out["corr"] = point_biserial(y, values);
  } catch (const Error& e) {
    if (kind != FeatureKind::topic) warn(fmt::format("stance/sentiment correlation unavailable: {}", e.what()));
  }
  io::write_file_atomic(a.output, out.dump(2) + "\n");
}

// ---------------------------------------------------------------- report

struct ReportArgs {
  std::vector<std::string> results, sweeps;
  std::string output, format = "markdown";
};

std::string sweep_dataset(const std::string& content, const fs::path& path) {
  if (content.rfind("# ", 0) == 0) {
    const auto line = content.substr(2, content.find('\n') - 2);
    const auto j = json::parse(line, nullptr, false);
    if (j.is_object() && j.contains("dataset") && j["dataset"].is_string()) return j["dataset"].get<std::string>();
  }
  return path.stem().string();
}

void do_report(const ReportArgs& a) {
  const auto format = parse_report_format(a.format);
  std::vector<ComparisonRow> rows;
  auto row_for = [&](const std::string& dataset) -> ComparisonRow& {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const ComparisonRow& r) { return r.dataset == dataset; });
    if (it != rows.end()) return *it;
    rows.push_back({});
    rows.back().dataset = dataset;
    return rows.back();
  };
  for (const auto& path : a.results) {
    json j;
    try {
      j = json::parse(io::read_file(path));
      const auto dataset = j.at("dataset").get<std::string>();
      auto& row = row_for(dataset);
      const MetricCell cell{j.at("mean").get<double>(), j.at("std").get<double>()};
      std::optional<MetricCell>* slot = nullptr;
      switch (parse_feature_kind(j.at("feature_kind").get<std::string>())) {
        case FeatureKind::topic:
          slot = &row.topic;
          break;
        case FeatureKind::sentiment:
          slot = &row.sentiment;
          break;
        case FeatureKind::combined:
          slot = &row.combined;
          break;
      }
      if (*slot) throw DataError(fmt::format("{} repeats a result for dataset '{}'", path, dataset));
      *slot = cell;
      if (j.contains("corr") && !row.corr) row.corr = j["corr"].get<double>();
    } catch (const json::exception& e) {
      throw DataError(fmt::format("{}: malformed results JSON ({})", path, e.what()));
    }
  }

  std::vector<DatasetSweep> sweeps;
  for (const auto& path : a.sweeps) {
    const auto content = io::read_file(path);
    sweeps.push_back({sweep_dataset(content, path), parse_sweep_csv(content)});
    const auto& ds = sweeps.back();
    if (ds.sweep.rows.empty()) continue;
    auto it = std::find_if(rows.begin(), rows.end(), [&](const ComparisonRow& r) { return r.dataset == ds.dataset; });
    if (it == rows.end()) continue;
    const bool has_cluster = std::any_of(ds.sweep.rows.begin(), ds.sweep.rows.end(),
                                         [](const SweepRow& r) { return r.model == ModelKind::cluster; });
    double best = ds.sweep.rows.front().score;
    for (const auto& r : ds.sweep.rows) best = std::max(best, r.score);
    it->coherence_best = has_cluster ? best_score(ds.sweep, ModelKind::cluster) : best;
  }

  json inputs_results = a.results;
  json inputs_sweeps = a.sweeps;
  const json config = {
      {"command", "report"}, {"results", inputs_results}, {"sweeps", inputs_sweeps}, {"format", a.format}};
  io::write_file_atomic(a.output, render_report(rows, sweeps, format, config.dump()));
}

// ---------------------------------------------------------------- wiring

void add_model_options(CLI::App* cmd, ModelArgs& m) {
  cmd->add_option("--lda-iterations", m.lda_iterations, "Gibbs sweeps")->capture_default_str();
  cmd->add_option("--alpha", m.alpha, "LDA document-topic prior (default 50/K)");
  cmd->add_option("--beta", m.beta, "LDA topic-word prior")->capture_default_str();
  cmd->add_option("--nmf-iterations", m.nmf_iterations, "NMF update limit")->capture_default_str();
  cmd->add_option("--nmf-tol", m.nmf_tol, "NMF relative objective tolerance")->capture_default_str();
  cmd->add_option("--reduced-dim", m.reduced_dim, "PCA dimension before k-means")->capture_default_str();
  cmd->add_option("--min-df", m.min_df, "Drop terms in fewer documents")->capture_default_str();
  cmd->add_option("--embeddings", m.embeddings, "EMB1 file for the cluster model (default: LSA)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topic and sentiment metrics for stance classification", "topicmetrics"};
  app.require_subcommand(1);

  PrepArgs prep;
  auto* prep_cmd = app.add_subcommand("prep", "Tokenize a raw corpus into JSONL");
  prep_cmd->add_option("--input", prep.input, "Corpus (.jsonl or .csv)")->required();
  prep_cmd->add_option("--output", prep.output, "Tokenized JSONL")->required();
  prep_cmd->add_option("--format", prep.format, "Input format")
      ->check(CLI::IsMember({"auto", "jsonl", "csv"}))
      ->capture_default_str();
  prep_cmd->add_option("--stopwords", prep.stopwords, "Stopword file (default: bundled English list)");
  prep_cmd->add_flag("--no-stem", prep.no_stem, "Skip Porter stemming");

  EmbedArgs embed;
  auto* embed_cmd = app.add_subcommand("embed", "Document embeddings");
  embed_cmd->require_subcommand(1);
  auto* lsa_cmd = embed_cmd->add_subcommand("lsa", "Latent semantic embedding of TF-IDF rows");
  lsa_cmd->add_option("--input", embed.input, "Tokenized JSONL")->required();
  lsa_cmd->add_option("--output", embed.output, "EMB1 file")->required();
  lsa_cmd->add_option("--dim", embed.dim, "Embedding dimension")->capture_default_str();
  lsa_cmd->add_option("--min-df", embed.min_df, "Drop terms in fewer documents")->capture_default_str();
  lsa_cmd->add_option("--seed", embed.seed, "Random seed")->capture_default_str();
  auto* load_cmd = embed_cmd->add_subcommand("load", "Validate externally produced EMB1 against a corpus");
  load_cmd->add_option("--input", embed.input, "Tokenized JSONL")->required();
  load_cmd->add_option("--embeddings", embed.embeddings, "EMB1 file to check")->required();
  load_cmd->add_option("--output", embed.output, "EMB1 copy with config sidecar")->required();

  FitArgs fit;
  auto* topics_cmd = app.add_subcommand("topics", "Topic models");
  topics_cmd->require_subcommand(1);
  auto* fit_cmd = topics_cmd->add_subcommand("fit", "Fit one topic model");
  fit_cmd->add_option("--input", fit.input, "Tokenized JSONL")->required();
  fit_cmd->add_option("--output", fit.output, "Model JSON")->required();
  fit_cmd->add_option("--model", fit.model, "lda, nmf or cluster")
      ->check(CLI::IsMember({"lda", "nmf", "cluster", "bertopic"}))
      ->capture_default_str();
  fit_cmd->add_option("--k", fit.k, "Number of topics")->required();
  fit_cmd->add_option("--seed", fit.seed, "Random seed")->capture_default_str();
  add_model_options(fit_cmd, fit.m);

  SweepArgs sw;
  auto* coherence_cmd = app.add_subcommand("coherence", "Topic coherence");
  coherence_cmd->require_subcommand(1);
  auto* sweep_cmd = coherence_cmd->add_subcommand("sweep", "Coherence over a range of K");
  sweep_cmd->add_option("--input", sw.input, "Tokenized JSONL")->required();
  sweep_cmd->add_option("--output", sw.output, "Sweep CSV")->required();
  sweep_cmd->add_option("--k-min", sw.k_min, "Smallest K")->capture_default_str();
  sweep_cmd->add_option("--k-max", sw.k_max, "Largest K")->capture_default_str();
  sweep_cmd->add_option("--step", sw.step, "K increment")->capture_default_str();
  sweep_cmd->add_option("--measure", sw.measure, "npmi or umass")
      ->check(CLI::IsMember({"npmi", "umass"}))
      ->capture_default_str();
  sweep_cmd->add_option("--models", sw.models, "Comma-separated model list")
      ->delimiter(',')
      ->check(CLI::IsMember({"lda", "nmf", "cluster", "bertopic"}))
      ->capture_default_str();
  sweep_cmd->add_option("--top-n", sw.top_n, "Keywords per topic")->capture_default_str();
  sweep_cmd->add_option("--window", sw.window, "NPMI sliding window")->capture_default_str();
  sweep_cmd->add_option("--dataset", sw.dataset, "Dataset name (default: input file stem)");
  sweep_cmd->add_option("--seed", sw.seed, "Random seed")->capture_default_str();
  add_model_options(sweep_cmd, sw.m);

  ClassifyArgs cls;
  auto* classify_cmd = app.add_subcommand("classify", "Cross-validated stance classification");
  classify_cmd->add_option("--input", cls.input, "Tokenized JSONL with stance labels")->required();
  classify_cmd->add_option("--output", cls.output, "Results JSON")->required();
  classify_cmd->add_option("--model", cls.model, "Model JSON from `topics fit` (topic/combined features)");
  classify_cmd->add_option("--features", cls.features, "topic, sentiment or combined")
      ->check(CLI::IsMember({"topic", "sentiment", "combined"}))
      ->capture_default_str();
  classify_cmd->add_option("--classifier", cls.classifier, "logistic, knn or svm")
      ->check(CLI::IsMember({"logistic", "knn", "svm", "linear_svm"}))
      ->capture_default_str();
  classify_cmd->add_option("--folds", cls.folds, "Cross-validation folds")->capture_default_str();
  classify_cmd->add_option("--split", cls.split, "Training share of the held-out split")->capture_default_str();
  classify_cmd->add_option("--lexicon", cls.lexicon, "token<TAB>polarity file (default: sentiment column)");
  classify_cmd->add_option("--dataset", cls.dataset, "Dataset name (default: input file stem)");
  classify_cmd->add_option("--seed", cls.seed, "Random seed")->capture_default_str();
  classify_cmd->add_option("--l2", cls.spec.logistic.l2, "Logistic L2 penalty")->capture_default_str();
  classify_cmd->add_option("--learning-rate", cls.spec.logistic.learning_rate, "Logistic step size")
      ->capture_default_str();
  classify_cmd->add_option("--epochs", cls.spec.logistic.epochs, "Logistic epochs")->capture_default_str();
  classify_cmd->add_option("--knn-k", cls.spec.knn.k, "Neighbours for knn")->capture_default_str();
  classify_cmd->add_option("--svm-c", cls.spec.svm.c, "SVM C")->capture_default_str();
  classify_cmd->add_option("--svm-epochs", cls.spec.svm.epochs, "SVM epochs")->capture_default_str();
  classify_cmd->add_option("--svm-learning-rate", cls.spec.svm.learning_rate, "SVM base step size")
      ->capture_default_str();

  ReportArgs rep;
  auto* report_cmd = app.add_subcommand("report", "Comparison tables from classify and sweep outputs");
  report_cmd->add_option("--results", rep.results, "Results JSON files")->required();
  report_cmd->add_option("--sweep", rep.sweeps, "Sweep CSV files");
  report_cmd->add_option("--output", rep.output, "Report file")->required();
  report_cmd->add_option("--format", rep.format, "markdown or csv")
      ->check(CLI::IsMember({"markdown", "md", "csv"}))
      ->capture_default_str();

  WarningSink previous = set_warning_sink([&err](const std::string& msg) { err << "warning: " << msg << "\n"; });
  struct Restore {
    WarningSink& sink;
    ~Restore() { set_warning_sink(std::move(sink)); }
  } restore{previous};

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  std::string stage;
  try {
    if (prep_cmd->parsed()) {
      stage = "prep";
      do_prep(prep);
    } else if (lsa_cmd->parsed()) {
      stage = "embed lsa";
      do_embed_lsa(embed);
    } else if (load_cmd->parsed()) {
      stage = "embed load";
      do_embed_load(embed);
    } else if (fit_cmd->parsed()) {
      stage = fmt::format("topics fit --model {} --k {}", fit.model, fit.k);
      do_topics_fit(fit);
    } else if (sweep_cmd->parsed()) {
      stage = "coherence sweep";
      do_sweep(sw);
    } else if (classify_cmd->parsed()) {
      stage = fmt::format("classify --features {} --classifier {}", cls.features, cls.classifier);
      do_classify(cls);
    } else if (report_cmd->parsed()) {
      stage = "report";
      do_report(rep);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << stage << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << stage << ": " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace topicmetrics::cli
