#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "anxdep/types.hpp"

namespace anxdep {

constexpr int kDefaultWindow = 30;
constexpr int kWindowedColumnCount = kFeatureCount * 4;  // 56

struct WindowStats {
    double avg = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
    double q3 = 0.0;
};

// Statistics of the trailing window (last min(window, size) values, current
// value included). Quartile k is the sorted window's element at index
// round-half-up(k*m/4), clamped to m-1.
WindowStats window_stats(std::span<const double> values, int window = kDefaultWindow);

// One 56-value row per session: avg, q1, q2, q3 for each base feature.
struct WindowedRow {
    std::string session_id;
    std::string user_id;
    std::array<double, kWindowedColumnCount> values{};
    std::optional<Category> category;
};

struct FeatureMatrix {
    std::vector<std::string> column_names;  // 56, "<feature>_{avg,q1,q2,q3}"
    std::vector<WindowedRow> rows;
    std::vector<bool> active_mask;  // per column; masked-out columns excluded from models

    std::size_t n_active() const;
    std::vector<std::size_t> active_indices() const;
    // Values of one row restricted to active columns.
    std::vector<double> active_values(const WindowedRow& row) const;

    void write_csv(std::ostream& os) const;
    static FeatureMatrix read_csv(std::istream& is);
    void write_mask(std::ostream& os) const;
    void read_mask(std::istream& is);
};

std::vector<std::string> windowed_column_names();

// Per-user trailing-window expansion over chronologically ordered sessions.
// Scores are looked up by session_id; a session without scores is an error.
FeatureMatrix expand_corpus(const Corpus& corpus,
                            const std::unordered_map<std::string, RawFeatureScores>& scores,
                            int window = kDefaultWindow);

// Round half away from zero to 2 decimal places.
double round2(double v);

// Rounds every value to 2 decimals and deactivates columns whose rounded
// values are constant across the reference rows.
void round_and_prune(FeatureMatrix& matrix, std::span<const std::size_t> reference_rows);

}  // namespace anxdep
