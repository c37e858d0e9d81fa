#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anxdep/errors.hpp"

namespace anxdep {

// ---------------------------------------------------------------------------
// Labels and the four-way multi-class transformation
// ---------------------------------------------------------------------------

// The {anxiety, depression} label subset.
struct LabelPair {
    bool anxiety = false;
    bool depression = false;

    friend bool operator==(const LabelPair&, const LabelPair&) = default;
};

// The multi-class transformation of the two binary labels.
enum class Category : int {
    none_none = 0,
    none_depression = 1,
    anxiety_none = 2,
    anxiety_depression = 3,
};

constexpr int kCategoryCount = 4;

constexpr Category to_category(LabelPair p) {
    if (p.anxiety) return p.depression ? Category::anxiety_depression : Category::anxiety_none;
    return p.depression ? Category::none_depression : Category::none_none;
}

constexpr LabelPair to_pair(Category c) {
    switch (c) {
        case Category::none_none: return {false, false};
        case Category::none_depression: return {false, true};
        case Category::anxiety_none: return {true, false};
        case Category::anxiety_depression: return {true, true};
    }
    return {};
}

std::string_view category_name(Category c);
Category category_from_name(std::string_view name);
Category category_from_index(int i);

// ---------------------------------------------------------------------------
// Sessions
// ---------------------------------------------------------------------------

enum class Speaker { human, bot };

struct Interaction {
    Speaker speaker = Speaker::human;
    std::string text;
    std::int64_t timestamp = 0;  // UTC epoch seconds
};

// One complete user-bot dialogue.
struct Session {
    std::string session_id;
    std::string user_id;
    std::vector<Interaction> interactions;
    std::optional<LabelPair> label;

    std::int64_t start_time() const {
        return interactions.empty() ? 0 : interactions.front().timestamp;
    }
    int human_turns() const {
        int n = 0;
        for (const auto& it : interactions)
            if (it.speaker == Speaker::human) ++n;
        return n;
    }
};

// Quarterly questionnaire outcome for a user, applied forward in time.
struct LabelRecord {
    std::string user_id;
    std::int64_t effective_date = 0;  // UTC midnight epoch seconds
    bool anxiety = false;
    bool depression = false;
};

struct Corpus {
    std::vector<Session> sessions;
    std::map<std::string, std::string> provenance;

    std::size_t size() const { return sessions.size(); }
};

// ---------------------------------------------------------------------------
// Per-session expert features
// ---------------------------------------------------------------------------

constexpr int kFeatureCount = 14;
constexpr int kPolarityIndex = 13;

// Internal field names, in canonical order. Feature 9 is "emphasized_terms"
// internally; its scoring-prompt wire key is "exaggerated_terms".
extern const std::array<std::string_view, kFeatureCount> kFeatureNames;
// Keys used by the scoring prompt / response object.
extern const std::array<std::string_view, kFeatureCount> kWireKeys;
// Human-readable display names.
extern const std::array<std::string_view, kFeatureCount> kDisplayNames;

int feature_index(std::string_view internal_name);

// 13 ratio scores in [0,1] plus polarity in {0,1,2}, stored uniformly as
// doubles so window statistics treat all 14 alike.
struct RawFeatureScores {
    std::array<double, kFeatureCount> values{};

    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }
    int polarity() const { return static_cast<int>(values[kPolarityIndex]); }

    // Throws DataError naming the offending field.
    void validate() const;

    friend bool operator==(const RawFeatureScores&, const RawFeatureScores&) = default;
};

}  // namespace anxdep
