#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topicmetrics/features.hpp"

namespace topicmetrics {

using Labels = std::vector<int>;

enum class ClassifierKind { logistic, knn, linear_svm };

std::string_view to_string(ClassifierKind kind);
/// Accepts "logistic", "knn", "svm" and "linear_svm".
ClassifierKind parse_classifier_kind(std::string_view name);

struct ClassifierSpec {
  ClassifierKind kind = ClassifierKind::logistic;
  struct {
    double l2 = 1.0;
    double learning_rate = 0.1;
    std::size_t epochs = 500;
  } logistic;
  struct {
    std::size_t k = 5;
  } knn;
  struct {
    double c = 1.0;
    double learning_rate = 0.1;
    std::size_t epochs = 500;
  } svm;
};

struct TrainedModel {
  ClassifierSpec spec;
  FeatureKind feature_kind = FeatureKind::topic;
  std::size_t n_features = 0;
  Eigen::VectorXd weights;  // logistic / svm
  double bias = 0.0;
  Dense train_x;            // knn
  Labels train_y;           // knn
  std::vector<double> loss_history;  // objective before each epoch, then final
};

// ---------------------------------------------------------------- logistic

struct LogisticLoss {
  double loss = 0.0;
  Eigen::VectorXd grad_w;
  double grad_b = 0.0;
};

/// Mean cross-entropy of sigmoid(Xw + b) plus (l2 / 2) ||w||^2; the bias is
/// not regularized.
LogisticLoss logistic_loss(const Dense& x, const Labels& y, const Eigen::VectorXd& w, double b, double l2);

/// Mean hinge loss on labels mapped to +-1 plus ||w||^2 / (2c).
double hinge_objective(const Dense& x, const Labels& y, const Eigen::VectorXd& w, double b, double c);

// ---------------------------------------------------------------- training

/// Logistic: full-batch gradient descent from zero weights. SVM: subgradient
/// descent with step learning_rate / sqrt(epoch + 1). kNN: stores the data.
/// `seed` is unused by the current deterministic trainers.
TrainedModel fit_classifier(const ClassifierSpec& spec, const FeatureMatrix& x, const Labels& y,
                            std::uint64_t seed = 0);

/// w.x + b for linear models. Not defined for knn.
Eigen::VectorXd decision_values(const TrainedModel& model, const Dense& x);

/// Linear models: 1 iff decision >= 0. kNN: majority of the k nearest by
/// Euclidean distance; vote ties -> 1, distance ties -> lower training index.
Labels predict(const TrainedModel& model, const FeatureMatrix& x);

// ---------------------------------------------------------------- evaluation

/// Binary F1 on the positive class; 0 when precision + recall is 0.
double f1_score(const Labels& y_true, const Labels& y_pred);

struct Split {
  std::vector<std::size_t> train;  // ascending
  std::vector<std::size_t> test;   // ascending
};

/// |train| = round(ratio * n). With labels, every class keeps within one
/// sample of its proportional share.
Split train_test_split(std::size_t n, double ratio, const std::optional<Labels>& stratify, std::uint64_t seed);

/// Fold id for every sample. Stratified when every class has at least
/// `folds` members, otherwise a plain shuffled deal (with a warning).
std::vector<std::size_t> assign_folds(const Labels& y, std::size_t folds, std::uint64_t seed);

struct EvalResult {
  std::vector<double> fold_f1;
  double mean = 0.0;
  double std = 0.0;  // sample (n - 1) standard deviation
};

EvalResult summarize_folds(std::vector<double> fold_f1);

EvalResult cross_validate(const FeatureMatrix& x, const Labels& y, const ClassifierSpec& spec, std::size_t folds,
                          std::uint64_t seed);

/// 80/20-style protocol: stratified split, cross-validation on the training
/// part, and one fit on the full training part scored on the held-out part.
struct ProtocolResult {
  EvalResult cv;
  double holdout_f1 = 0.0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
};

ProtocolResult evaluate_protocol(const FeatureMatrix& x, const Labels& y, const ClassifierSpec& spec,
                                 std::size_t folds, double split_ratio, std::uint64_t seed);

/// Rows of `x` (and matching labels) at `indices`.
FeatureMatrix take_rows(const FeatureMatrix& x, const std::vector<std::size_t>& indices);
Labels take_labels(const Labels& y, const std::vector<std::size_t>& indices);

/// Stance labels of every document; throws DataError naming the first
/// document without one.
Labels stance_labels(const Corpus& corpus);

}  // namespace topicmetrics
