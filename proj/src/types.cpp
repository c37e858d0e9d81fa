#include "anxdep/types.hpp"

#include <cmath>

namespace anxdep {

const std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "insecurity",     "loneliness",        "negative_emotion", "positive_emotion",
    "sadness",        "anguish",           "health_issues",    "catastrophic_terms",
    "emphasized_terms", "repeated_concepts", "interjections",  "negative_adverbs",
    "negatives_terms", "polarity",
};

const std::array<std::string_view, kFeatureCount> kWireKeys = {
    "insecurity",       "loneliness",        "negative_emotion", "positive_emotion",
    "sadness",          "anguish",           "health_issues",    "catastrophic_terms",
    "exaggerated_terms", "repeated_concepts", "interjections",   "negative_adverbs",
    "negatives_terms",  "polarity",
};

const std::array<std::string_view, kFeatureCount> kDisplayNames = {
    "Insecurity",       "Loneliness",        "Negative emotion", "Positive emotion",
    "Sadness",          "Anguish",           "Health issues",    "Catastrophic terms",
    "Emphasized terms", "Repeated concepts", "Interjections",    "Negative adverbs",
    "Negatives terms",  "Polarity",
};

int feature_index(std::string_view internal_name) {
    for (int i = 0; i < kFeatureCount; ++i)
        if (kFeatureNames[i] == internal_name) return i;
    throw DataError("unknown feature: '" + std::string(internal_name) + "'");
}

namespace {
const std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "none_none",
    "none_depression",
    "anxiety_none",
    "anxiety_depression",
};
}

std::string_view category_name(Category c) {
    return kCategoryNames[static_cast<std::size_t>(c)];
}

Category category_from_name(std::string_view name) {
    for (int i = 0; i < kCategoryCount; ++i)
        if (kCategoryNames[static_cast<std::size_t>(i)] == name) return static_cast<Category>(i);
    throw DataError("unknown category: '" + std::string(name) + "'");
}

Category category_from_index(int i) {
    if (i < 0 || i >= kCategoryCount) throw DataError("category index out of range");
    return static_cast<Category>(i);
}

void RawFeatureScores::validate() const {
    for (int i = 0; i < kPolarityIndex; ++i) {
        const double v = values[static_cast<std::size_t>(i)];
        if (!(v >= 0.0 && v <= 1.0) || !std::isfinite(v))
            throw DataError("score out of range: " + std::string(kFeatureNames[static_cast<std::size_t>(i)]) +
                            " = " + std::to_string(v));
    }
    const double p = values[kPolarityIndex];
    if (p != 0.0 && p != 1.0 && p != 2.0)
        throw DataError("score out of range: polarity = " + std::to_string(p));
}

}  // namespace anxdep
