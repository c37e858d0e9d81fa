#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "anxdep/types.hpp"

namespace anxdep {

// Multi-label evaluation over the four-way categories / {anxiety, depression}
// label sets. Empty-set conventions: a term with both sets empty scores 1;
// precision with an empty prediction (recall with an empty actual) against a
// non-empty counterpart scores 0.

double exact_match(std::span<const Category> actual, std::span<const Category> predicted);
double sample_accuracy(std::span<const Category> actual, std::span<const Category> predicted);
double sample_precision(std::span<const Category> actual, std::span<const Category> predicted);
double sample_recall(std::span<const Category> actual, std::span<const Category> predicted);
// Defined as 1 - sample_accuracy, bit for bit.
double hamming_loss(std::span<const Category> actual, std::span<const Category> predicted);

struct LabelScores {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;

    friend bool operator==(const LabelScores&, const LabelScores&) = default;
};

struct MacroMicroScores {
    LabelScores macro;
    LabelScores micro;

    friend bool operator==(const MacroMicroScores&, const MacroMicroScores&) = default;
};

// Per-label (anxiety, depression) TP/FP/FN aggregation; zero-denominator
// per-label scores are 0, F is the harmonic mean (0 when p + r = 0).
MacroMicroScores label_macro_micro(std::span<const Category> actual,
                                   std::span<const Category> predicted);

struct MetricTriple {
    double sample = 0.0;  // mean of the per-sample set ratios
    double macro = 0.0;   // unweighted mean over the two labels
    double micro = 0.0;   // pooled TP/FP/FN

    friend bool operator==(const MetricTriple&, const MetricTriple&) = default;
};

struct EvaluationReport {
    double exact_match = 0.0;
    double accuracy = 0.0;      // sample-based, Jaccard form
    double hamming_loss = 0.0;  // 1 - accuracy
    MetricTriple precision;
    MetricTriple recall;
    MetricTriple f_measure;  // sample = mean per-sample harmonic mean
    std::array<std::array<long, kCategoryCount>, kCategoryCount> confusion{};  // [actual][predicted]

    // Key-value text, one metric per line; lossless round trip.
    std::string to_kv() const;
    static EvaluationReport from_kv(const std::string& text);

    // Two-line CSV laid out like the headline results table.
    std::string to_table_csv() const;

    friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

EvaluationReport evaluate(std::span<const Category> actual, std::span<const Category> predicted);

}  // namespace anxdep
