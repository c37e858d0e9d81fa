#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "anxdep/errors.hpp"

namespace anxdep::ml {

// ---------------------------------------------------------------------------
// Data
// ---------------------------------------------------------------------------

// Column-major feature matrix; training scans per-feature columns.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    double at(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }
    double& at(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    std::span<const double> column(std::size_t c) const {
        return {data_.data() + c * rows_, rows_};
    }
    std::vector<double> row(std::size_t r) const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

enum class Criterion { gini, entropy };
enum class Splitter { best, random };
enum class MaxFeatures { all, sqrt_of_d, log2_of_d };

struct TreeParams {
    Criterion criterion = Criterion::gini;
    Splitter splitter = Splitter::best;
    MaxFeatures max_features = MaxFeatures::all;
    std::optional<int> max_depth;
    // Fractions in (0,1) resolve as ceil(f * n) against the training-set
    // size; 1 means the integer count 1 for min_samples_leaf and normalizes
    // to 2 (with a warning) for min_samples_split.
    double min_samples_split = 2.0;
    double min_samples_leaf = 1.0;
};

struct ForestParams {
    int n_estimators = 100;
    TreeParams tree{.max_features = MaxFeatures::sqrt_of_d};
};

struct NBParams {
    double var_smoothing = 1e-9;
};

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

struct TreeNode {
    int feature = -1;  // -1: leaf
    double threshold = 0.0;
    double impurity = 0.0;
    int n_samples = 0;            // weighted by bootstrap multiplicity
    int left = -1, right = -1;
    std::vector<int> counts;  // per-class sample counts
};

struct DecisionTreeModel {
    TreeParams params;
    std::vector<int> class_labels;     // original labels, ascending
    int n_features = 0;
    std::vector<TreeNode> nodes;       // breadth-first; root at 0
    std::vector<double> importances;   // MDI, normalized to sum 1 when any split

    bool trained() const { return !nodes.empty(); }
    bool has_split() const;
    int depth() const;
    std::vector<double> predict_proba(std::span<const double> x) const;
};

struct RandomForestModel {
    ForestParams params;
    std::vector<int> class_labels;
    int n_features = 0;
    std::vector<DecisionTreeModel> trees;
    std::vector<double> importances;  // mean of per-tree MDI over trees that split

    bool trained() const { return !trees.empty(); }
    std::vector<double> predict_proba(std::span<const double> x) const;
};

struct GaussianNBModel {
    NBParams params;
    std::vector<int> class_labels;
    int n_features = 0;
    double epsilon = 0.0;             // var_smoothing * max total feature variance
    std::vector<double> priors;       // per class
    std::vector<double> means;        // class-major, K * d
    std::vector<double> variances;    // smoothed, strictly positive

    bool trained() const { return !priors.empty(); }
    std::vector<double> predict_log_proba(std::span<const double> x) const;
    std::vector<double> predict_proba(std::span<const double> x) const;
};

DecisionTreeModel train_tree(const Matrix& x, std::span<const int> y, const TreeParams& params,
                             std::uint64_t seed);
RandomForestModel train_forest(const Matrix& x, std::span<const int> y, const ForestParams& params,
                               std::uint64_t seed, int parallelism = 1);
GaussianNBModel train_gnb(const Matrix& x, std::span<const int> y, double var_smoothing);

// mask[i] = importances[i] >= mean(importances)
std::vector<bool> mdi_select(std::span<const double> importances);

// ---------------------------------------------------------------------------
// Unified model handle
// ---------------------------------------------------------------------------

enum class ModelFamily { nb, dt, rf };

std::string_view family_name(ModelFamily f);
ModelFamily family_from_name(std::string_view name);

struct ModelSpec {
    ModelFamily family = ModelFamily::rf;
    NBParams nb;
    TreeParams tree;
    int n_estimators = 100;
};

struct Prediction {
    int label = 0;  // original class label
    double confidence = 0.0;
};

struct TrainedModel {
    ModelSpec spec;
    std::variant<GaussianNBModel, DecisionTreeModel, RandomForestModel> model;
    std::vector<std::string> active_columns;  // feature mask the model was trained on
    std::uint64_t seed = 0;

    bool trained() const;
    const std::vector<int>& class_labels() const;
    std::vector<double> predict_proba(std::span<const double> x) const;
    Prediction predict_with_confidence(std::span<const double> x) const;
    // Forest MDI; nullptr for other families.
    const std::vector<double>* importances() const;
};

TrainedModel fit_model(const ModelSpec& spec, const Matrix& x, std::span<const int> y,
                       std::uint64_t seed, int parallelism = 1);

// Versioned JSON document (format_version 1).
std::string model_to_json(const TrainedModel& model);
TrainedModel model_from_json(const std::string& text);
void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

// ---------------------------------------------------------------------------
// Grid search
// ---------------------------------------------------------------------------

struct GridValue {
    enum class Kind { none, number, text } kind = Kind::none;
    double number = 0.0;
    std::string text;

    static GridValue none() { return {}; }
    static GridValue num(double v) { return {Kind::number, v, {}}; }
    static GridValue str(std::string s) { return {Kind::text, 0.0, std::move(s)}; }
    std::string display() const;
};

using GridPoint = std::vector<std::pair<std::string, GridValue>>;

// Named parameter lists in declaration order; enumeration is lexicographic
// with the first declared parameter most significant.
struct GridSpec {
    std::vector<std::pair<std::string, std::vector<GridValue>>> params;

    std::size_t size() const;
    GridPoint point(std::size_t index) const;

    static GridSpec from_json_text(const std::string& text);
    static GridSpec load(const std::string& path);
    // The published hyperparameter grids for each family.
    static GridSpec builtin(ModelFamily family);
};

ModelSpec spec_from_grid_point(ModelFamily family, const GridPoint& point);

struct CVEntry {
    std::size_t config_index = 0;
    double mean_score = 0.0;
    std::vector<double> fold_scores;
};

struct CVResult {
    std::vector<CVEntry> entries;  // one per configuration, enumeration order
    std::size_t chosen_index = 0;
    GridPoint chosen_point;
    int folds_used = 0;

    const CVEntry& chosen() const { return entries[chosen_index]; }
};

// Deterministic stratified fold ids (0..folds-1) per sample; folds is reduced
// with a warning when the rarest class has fewer members.
std::vector<int> stratified_folds(std::span<const int> y, int& folds, std::uint64_t seed);

// Scores every configuration with k-fold cross-validation; the score is the
// sample-based multi-label accuracy of fold predictions. Ties keep the
// earliest enumeration position.
CVResult grid_search(ModelFamily family, const GridSpec& grid, const Matrix& x,
                     std::span<const int> y, int folds, std::uint64_t seed, int parallelism = 1);

}  // namespace anxdep::ml
