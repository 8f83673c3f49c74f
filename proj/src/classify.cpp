#include "topicmetrics/classify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>

#include <fmt/format.h>

#include "topicmetrics/diagnostics.hpp"
#include "topicmetrics/error.hpp"
#include "topicmetrics/random.hpp"

namespace topicmetrics {

std::string_view to_string(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::logistic:
      return "logistic";
    case ClassifierKind::knn:
      return "knn";
    case ClassifierKind::linear_svm:
      return "svm";
  }
  return "?";
}

ClassifierKind parse_classifier_kind(std::string_view name) {
  if (name == "logistic") return ClassifierKind::logistic;
  if (name == "knn") return ClassifierKind::knn;
  if (name == "svm" || name == "linear_svm") return ClassifierKind::linear_svm;
  throw PreconditionError(fmt::format("unknown classifier '{}'", name));
}

namespace {

void check_labels(const Labels& y, std::size_t rows) {
  if (y.size() != rows) throw PreconditionError(fmt::format("{} labels for {} rows", y.size(), rows));
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != 0 && y[i] != 1) throw PreconditionError(fmt::format("label {} at row {} is not 0 or 1", y[i], i));
  }
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

}  // namespace

LogisticLoss logistic_loss(const Dense& x, const Labels& y, const Eigen::VectorXd& w, double b, double l2) {
  const auto n = static_cast<double>(x.rows());
  const Eigen::VectorXd z = (x * w).array() + b;
  Eigen::VectorXd residual(z.size());
  double ce = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double yi = y[static_cast<std::size_t>(i)];
    ce += softplus(z(i)) - yi * z(i);
    residual(i) = sigmoid(z(i)) - yi;
  }
  LogisticLoss out;
  out.loss = ce / n + 0.5 * l2 * w.squaredNorm();
  out.grad_w = x.transpose() * residual / n + l2 * w;
  out.grad_b = residual.sum() / n;
  return out;
}

double hinge_objective(const Dense& x, const Labels& y, const Eigen::VectorXd& w, double b, double c) {
  const Eigen::VectorXd f = (x * w).array() + b;
  double hinge = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    const double s = y[static_cast<std::size_t>(i)] == 1 ? 1.0 : -1.0;
    hinge += std::max(0.0, 1.0 - s * f(i));
  }
  return hinge / static_cast<double>(x.rows()) + w.squaredNorm() / (2.0 * c);
}

TrainedModel fit_classifier(const ClassifierSpec& spec, const FeatureMatrix& x, const Labels& y,
                            std::uint64_t /*seed*/) {
  if (x.rows() == 0) throw PreconditionError("training set is empty");
  check_labels(y, x.rows());
  TrainedModel model;
  model.spec = spec;
  model.feature_kind = x.kind;
  model.n_features = x.cols();
  const auto p = static_cast<Eigen::Index>(x.cols());

  switch (spec.kind) {
    case ClassifierKind::logistic: {
      const auto& hp = spec.logistic;
      if (hp.l2 < 0.0 || !(hp.learning_rate > 0.0)) throw PreconditionError("invalid logistic hyperparameters");
      model.weights = Eigen::VectorXd::Zero(p);
      for (std::size_t epoch = 0; epoch < hp.epochs; ++epoch) {
        const auto g = logistic_loss(x.values, y, model.weights, model.bias, hp.l2);
        model.loss_history.push_back(g.loss);
        model.weights -= hp.learning_rate * g.grad_w;
        model.bias -= hp.learning_rate * g.grad_b;
      }
      model.loss_history.push_back(logistic_loss(x.values, y, model.weights, model.bias, hp.l2).loss);
      break;
    }
    case ClassifierKind::linear_svm: {
      const auto& hp = spec.svm;
      if (!(hp.c > 0.0) || !(hp.learning_rate > 0.0)) throw PreconditionError("invalid svm hyperparameters");
      model.weights = Eigen::VectorXd::Zero(p);
      const auto n = static_cast<double>(x.rows());
      for (std::size_t epoch = 0; epoch < hp.epochs; ++epoch) {
        model.loss_history.push_back(hinge_objective(x.values, y, model.weights, model.bias, hp.c));
        const Eigen::VectorXd f = (x.values * model.weights).array() + model.bias;
        Eigen::VectorXd gw = model.weights / hp.c;
        double gb = 0.0;
        for (Eigen::Index i = 0; i < f.size(); ++i) {
          const double s = y[static_cast<std::size_t>(i)] == 1 ? 1.0 : -1.0;
          if (s * f(i) < 1.0) {
            gw -= (s / n) * x.values.row(i).transpose();
            gb -= s / n;
          }
        }
        const double step = hp.learning_rate / std::sqrt(static_cast<double>(epoch) + 1.0);
        model.weights -= step * gw;
        model.bias -= step * gb;
      }
      model.loss_history.push_back(hinge_objective(x.values, y, model.weights, model.bias, hp.c));
      break;
    }
    case ClassifierKind::knn:
      if (spec.knn.k < 1) throw PreconditionError("knn needs k >= 1");
      model.train_x = x.values;
      model.train_y = y;
      break;
  }
  return model;
}

Eigen::VectorXd decision_values(const TrainedModel& model, const Dense& x) {
  if (model.spec.kind == ClassifierKind::knn) throw PreconditionError("knn has no linear decision function");
  if (static_cast<std::size_t>(x.cols()) != model.n_features) {
    throw PreconditionError(fmt::format("expected {} features, got {}", model.n_features, x.cols()));
  }
  return (x * model.weights).array() + model.bias;
}

Labels predict(const TrainedModel& model, const FeatureMatrix& x) {
  if (x.cols() != model.n_features) {
    throw PreconditionError(fmt::format("expected {} features, got {}", model.n_features, x.cols()));
  }
  Labels out(x.rows(), 0);
  if (model.spec.kind != ClassifierKind::knn) {
    const auto f = decision_values(model, x.values);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(static_cast<Eigen::Index>(i)) >= 0.0 ? 1 : 0;
    return out;
  }
  const Dense d2 = kernels::omp::squared_distances(x.values, model.train_x);
  const std::size_t n_train = model.train_y.size();
  const std::size_t k = std::min(model.spec.knn.k, n_train);
  std::vector<std::size_t> order(n_train);
  for (std::size_t q = 0; q < out.size(); ++q) {
    std::iota(order.begin(), order.end(), 0);
    const auto row = d2.row(static_cast<Eigen::Index>(q));
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        const double da = row(static_cast<Eigen::Index>(a));
                        const double db = row(static_cast<Eigen::Index>(b));
                        return da != db ? da < db : a < b;
                      });
    std::size_t positive = 0;
    for (std::size_t j = 0; j < k; ++j) positive += static_cast<std::size_t>(model.train_y[order[j]]);
    out[q] = 2 * positive >= k ? 1 : 0;
  }
  return out;
}

double f1_score(const Labels& y_true, const Labels& y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw PreconditionError(fmt::format("label length mismatch: {} vs {}", y_true.size(), y_pred.size()));
  }
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const int t = y_true[i];
    const int p = y_pred[i];
    if ((t != 0 && t != 1) || (p != 0 && p != 1)) throw PreconditionError("labels must be 0 or 1");
    tp += static_cast<std::size_t>(t == 1 && p == 1);
    fp += static_cast<std::size_t>(t == 0 && p == 1);
    fn += static_cast<std::size_t>(t == 1 && p == 0);
  }
  // 2PR/(P+R) == 2TP/(2TP+FP+FN), and both vanish together.
  const std::size_t denom = 2 * tp + fp + fn;
  if (tp == 0 || denom == 0) return 0.0;
  return static_cast<double>(2 * tp) / static_cast<double>(denom);
}

Split train_test_split(std::size_t n, double ratio, const std::optional<Labels>& stratify, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw PreconditionError(fmt::format("split ratio must be in (0, 1), got {}", ratio));
  if (n < 2) throw PreconditionError("need at least two samples to split");
  const auto n_train = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n)));
  Rng rng(seed);
  Split split;
  if (!stratify) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    rng.shuffle(std::span(idx));
    split.train.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
    split.test.assign(idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
  } else {
    check_labels(*stratify, n);
    std::vector<std::vector<std::size_t>> members(2);
    for (std::size_t i = 0; i < n; ++i) members[static_cast<std::size_t>((*stratify)[i])].push_back(i);
    std::vector<std::size_t> quota(2, 0);
    std::vector<double> frac(2, 0.0);
    std::size_t assigned = 0;
    for (std::size_t c = 0; c < 2; ++c) {
      if (members[c].empty()) continue;
      if (members[c].size() < 2) {
        throw PreconditionError(fmt::format("class {} has fewer than two members; cannot stratify", c));
      }
      const double share = ratio * static_cast<double>(members[c].size());
      quota[c] = static_cast<std::size_t>(std::floor(share));
      frac[c] = share - std::floor(share);
      assigned += quota[c];
    }
    std::vector<std::size_t> by_frac = {0, 1};
    std::stable_sort(by_frac.begin(), by_frac.end(), [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
    for (std::size_t c : by_frac) {
      if (assigned >= n_train) break;
      if (quota[c] < members[c].size()) {
        ++quota[c];
        ++assigned;
      }
    }
    for (std::size_t c = 0; c < 2; ++c) {
      rng.shuffle(std::span(members[c]));
      split.train.insert(split.train.end(), members[c].begin(), members[c].begin() + static_cast<std::ptrdiff_t>(quota[c]));
      split.test.insert(split.test.end(), members[c].begin() + static_cast<std::ptrdiff_t>(quota[c]), members[c].end());
    }
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

std::vector<std::size_t> assign_folds(const Labels& y, std::size_t folds, std::uint64_t seed) {
  const std::size_t n = y.size();
  if (folds < 2) throw PreconditionError("cross-validation needs at least two folds");
  if (n < folds) throw PreconditionError(fmt::format("{} samples cannot fill {} folds", n, folds));
  Rng rng(seed);
  std::vector<std::vector<std::size_t>> members(2);
  for (std::size_t i = 0; i < n; ++i) members[y[i] == 1 ? 1 : 0].push_back(i);
  const bool stratified = std::all_of(members.begin(), members.end(),
                                      [&](const auto& m) { return m.empty() || m.size() >= folds; });
  std::vector<std::size_t> order;
  order.reserve(n);
  if (stratified) {
    // Classes are dealt round-robin back to back, so both the per-class and
    // the total fold sizes differ by at most one.
    for (auto& m : members) {
      rng.shuffle(std::span(m));
      order.insert(order.end(), m.begin(), m.end());
    }
  } else {
    warn(fmt::format("a class has fewer than {} members; using unstratified folds", folds));
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span(order));
  }
  std::vector<std::size_t> fold_of(n);
  for (std::size_t p = 0; p < n; ++p) fold_of[order[p]] = p % folds;
  return fold_of;
}

EvalResult summarize_folds(std::vector<double> fold_f1) {
  EvalResult r;
  r.fold_f1 = std::move(fold_f1);
  const auto n = static_cast<double>(r.fold_f1.size());
  if (r.fold_f1.empty()) return r;
  r.mean = std::accumulate(r.fold_f1.begin(), r.fold_f1.end(), 0.0) / n;
  if (r.fold_f1.size() > 1) {
    double ss = 0.0;
    for (double v : r.fold_f1) ss += (v - r.mean) * (v - r.mean);
    r.std = std::sqrt(ss / (n - 1.0));
  }
  return r;
}

FeatureMatrix take_rows(const FeatureMatrix& x, const std::vector<std::size_t>& indices) {
  FeatureMatrix out;
  out.kind = x.kind;
  out.column_labels = x.column_labels;
  out.values.resize(static_cast<Eigen::Index>(indices.size()), x.values.cols());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out.values.row(static_cast<Eigen::Index>(i)) = x.values.row(static_cast<Eigen::Index>(indices[i]));
  }
  return out;
}

Labels take_labels(const Labels& y, const std::vector<std::size_t>& indices) {
  Labels out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(y[i]);
  return out;
}

EvalResult cross_validate(const FeatureMatrix& x, const Labels& y, const ClassifierSpec& spec, std::size_t folds,
                          std::uint64_t seed) {
  check_labels(y, x.rows());
  const auto fold_of = assign_folds(y, folds, seed);
  std::vector<double> f1(folds, 0.0);
  std::vector<std::exception_ptr> errors(folds);
  const auto n_folds = static_cast<std::ptrdiff_t>(folds);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t f = 0; f < n_folds; ++f) {
    try {
      std::vector<std::size_t> train, valid;
      for (std::size_t i = 0; i < fold_of.size(); ++i) {
        (fold_of[i] == static_cast<std::size_t>(f) ? valid : train).push_back(i);
      }
      const auto model = fit_classifier(spec, take_rows(x, train), take_labels(y, train), seed);
      f1[static_cast<std::size_t>(f)] = f1_score(take_labels(y, valid), predict(model, take_rows(x, valid)));
    } catch (...) {
      errors[static_cast<std::size_t>(f)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return summarize_folds(std::move(f1));
}

ProtocolResult evaluate_protocol(const FeatureMatrix& x, const Labels& y, const ClassifierSpec& spec,
                                 std::size_t folds, double split_ratio, std::uint64_t seed) {
  check_labels(y, x.rows());
  const auto split = train_test_split(x.rows(), split_ratio, y, derive_seed(seed, "split"));
  const auto x_train = take_rows(x, split.train);
  const auto y_train = take_labels(y, split.train);
  ProtocolResult r;
  r.n_train = split.train.size();
  r.n_test = split.test.size();
  r.cv = cross_validate(x_train, y_train, spec, folds, derive_seed(seed, "cv"));
  const auto model = fit_classifier(spec, x_train, y_train, seed);
  r.holdout_f1 = f1_score(take_labels(y, split.test), predict(model, take_rows(x, split.test)));
  return r;
}

Labels stance_labels(const Corpus& corpus) {
  Labels y;
  y.reserve(corpus.size());
  for (const auto& doc : corpus.documents) {
    if (!doc.stance) throw DataError("document '" + doc.id + "' has no stance label");
    y.push_back(*doc.stance);
  }
  return y;
}

}  // namespace topicmetrics
