#include "anxdep/windowing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace anxdep {

WindowStats window_stats(std::span<const double> values, int window) {
    if (values.empty()) throw DataError("window_stats: empty sequence");
    if (window < 1) throw DataError("window_stats: window must be >= 1");
    const std::size_t m = std::min<std::size_t>(values.size(), static_cast<std::size_t>(window));
    std::vector<double> w(values.end() - static_cast<std::ptrdiff_t>(m), values.end());

    double sum = 0.0;
    for (const double v : w) sum += v;
    std::sort(w.begin(), w.end());

    // round-half-up(k*m/4) computed in integers, clamped to m-1
    auto quart = [&](std::size_t k) {
        std::size_t idx = (2 * k * m + 4) / 8;
        if (idx > m - 1) idx = m - 1;
        return w[idx];
    };
    return {sum / static_cast<double>(m), quart(1), quart(2), quart(3)};
}

std::vector<std::string> windowed_column_names() {
    static const char* stats[4] = {"avg", "q1", "q2", "q3"};
    std::vector<std::string> names;
    names.reserve(kWindowedColumnCount);
    for (const auto& feature : kFeatureNames)
        for (const auto* stat : stats) names.push_back(std::string(feature) + "_" + stat);
    return names;
}

FeatureMatrix expand_corpus(const Corpus& corpus,
                            const std::unordered_map<std::string, RawFeatureScores>& scores,
                            int window) {
    FeatureMatrix m;
    m.column_names = windowed_column_names();
    m.active_mask.assign(kWindowedColumnCount, true);
    m.rows.reserve(corpus.sessions.size());

    // Per-user feature histories, in the corpus's chronological per-user order.
    std::map<std::string, std::array<std::vector<double>, kFeatureCount>> histories;
    for (const auto& session : corpus.sessions) {
        const auto it = scores.find(session.session_id);
        if (it == scores.end())
            throw DataError("missing scores for session '" + session.session_id + "'");
        auto& history = histories[session.user_id];

        WindowedRow row;
        row.session_id = session.session_id;
        row.user_id = session.user_id;
        if (session.label) row.category = to_category(*session.label);
        for (int f = 0; f < kFeatureCount; ++f) {
            auto& seq = history[static_cast<std::size_t>(f)];
            seq.push_back(it->second[static_cast<std::size_t>(f)]);
            const WindowStats ws = window_stats(seq, window);
            row.values[static_cast<std::size_t>(f * 4 + 0)] = ws.avg;
            row.values[static_cast<std::size_t>(f * 4 + 1)] = ws.q1;
            row.values[static_cast<std::size_t>(f * 4 + 2)] = ws.q2;
            row.values[static_cast<std::size_t>(f * 4 + 3)] = ws.q3;
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

void round_and_prune(FeatureMatrix& matrix, std::span<const std::size_t> reference_rows) {
    if (reference_rows.empty()) throw DataError("round_and_prune: empty reference");
    for (auto& row : matrix.rows)
        for (auto& v : row.values) v = round2(v);

    for (int c = 0; c < kWindowedColumnCount; ++c) {
        const double first = matrix.rows[reference_rows.front()].values[static_cast<std::size_t>(c)];
        bool constant = true;
        for (const std::size_t r : reference_rows) {
            if (matrix.rows[r].values[static_cast<std::size_t>(c)] != first) {
                constant = false;
                break;
            }
        }
        if (constant) matrix.active_mask[static_cast<std::size_t>(c)] = false;
    }
}

std::size_t FeatureMatrix::n_active() const {
    std::size_t n = 0;
    for (const bool b : active_mask)
        if (b) ++n;
    return n;
}

std::vector<std::size_t> FeatureMatrix::active_indices() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < active_mask.size(); ++i)
        if (active_mask[i]) idx.push_back(i);
    return idx;
}

std::vector<double> FeatureMatrix::active_values(const WindowedRow& row) const {
    std::vector<double> out;
    out.reserve(n_active());
    for (std::size_t i = 0; i < active_mask.size(); ++i)
        if (active_mask[i]) out.push_back(row.values[i]);
    return out;
}

void FeatureMatrix::write_csv(std::ostream& os) const {
    os << "session_id,user_id,category";
    for (const auto& name : column_names) os << "," << name;
    os << "\n";
    char buf[32];
    for (const auto& row : rows) {
        os << row.session_id << "," << row.user_id << ","
           << (row.category ? category_name(*row.category) : std::string_view{});
        for (const double v : row.values) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            os << "," << buf;
        }
        os << "\n";
    }
}

FeatureMatrix FeatureMatrix::read_csv(std::istream& is) {
    FeatureMatrix m;
    std::string line;
    if (!std::getline(is, line)) throw DataError("feature matrix csv: empty file");

    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) header.push_back(cell);
    }
    if (header.size() != 3 + kWindowedColumnCount || header[0] != "session_id")
        throw DataError("feature matrix csv: unexpected header");
    m.column_names.assign(header.begin() + 3, header.end());
    m.active_mask.assign(kWindowedColumnCount, true);

    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        WindowedRow row;
        if (!std::getline(ss, row.session_id, ',') || !std::getline(ss, row.user_id, ','))
            throw DataError("feature matrix csv: bad row at line " + std::to_string(lineno));
        std::getline(ss, cell, ',');
        if (!cell.empty()) row.category = category_from_name(cell);
        for (int c = 0; c < kWindowedColumnCount; ++c) {
            if (!std::getline(ss, cell, ','))
                throw DataError("feature matrix csv: short row at line " + std::to_string(lineno));
            row.values[static_cast<std::size_t>(c)] = std::strtod(cell.c_str(), nullptr);
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

void FeatureMatrix::write_mask(std::ostream& os) const {
    for (std::size_t i = 0; i < column_names.size(); ++i)
        if (active_mask[i]) os << column_names[i] << "\n";
}

void FeatureMatrix::read_mask(std::istream& is) {
    std::vector<std::string> active;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) active.push_back(line);
    active_mask.assign(column_names.size(), false);
    for (const auto& name : active) {
        const auto it = std::find(column_names.begin(), column_names.end(), name);
        if (it == column_names.end()) throw DataError("mask names unknown column '" + name + "'");
        active_mask[static_cast<std::size_t>(it - column_names.begin())] = true;
    }
}

}  // namespace anxdep
