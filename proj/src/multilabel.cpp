#include "anxdep/multilabel.hpp"

#include <cstdio>
#include <sstream>

namespace anxdep {
namespace {

void check_lengths(std::span<const Category> a, std::span<const Category> p) {
    if (a.empty()) throw DataError("metrics need at least one sample");
    if (a.size() != p.size())
        throw DataError("actual/predicted length mismatch: " + std::to_string(a.size()) + " vs " +
                        std::to_string(p.size()));
}

int set_size(LabelPair s) { return (s.anxiety ? 1 : 0) + (s.depression ? 1 : 0); }

int intersection_size(LabelPair a, LabelPair b) {
    return ((a.anxiety && b.anxiety) ? 1 : 0) + ((a.depression && b.depression) ? 1 : 0);
}

int union_size(LabelPair a, LabelPair b) {
    return ((a.anxiety || b.anxiety) ? 1 : 0) + ((a.depression || b.depression) ? 1 : 0);
}

// |A∩P| / |denominator set|, with the empty conventions.
double set_ratio(int inter, int denom, int other) {
    if (denom == 0) return other == 0 ? 1.0 : 0.0;
    return static_cast<double>(inter) / denom;
}

double fmt_parse(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

double exact_match(std::span<const Category> actual, std::span<const Category> predicted) {
    check_lengths(actual, predicted);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < actual.size(); ++i)
        if (actual[i] == predicted[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(actual.size());
}

double sample_accuracy(std::span<const Category> actual, std::span<const Category> predicted) {
    check_lengths(actual, predicted);
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const LabelPair a = to_pair(actual[i]);
        const LabelPair p = to_pair(predicted[i]);
        const int u = union_size(a, p);
        sum += u == 0 ? 1.0 : static_cast<double>(intersection_size(a, p)) / u;
    }
    return sum / static_cast<double>(actual.size());
}

double sample_precision(std::span<const Category> actual, std::span<const Category> predicted) {
    check_lengths(actual, predicted);
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const LabelPair a = to_pair(actual[i]);
        const LabelPair p = to_pair(predicted[i]);
        sum += set_ratio(intersection_size(a, p), set_size(p), set_size(a));
    }
    return sum / static_cast<double>(actual.size());
}

double sample_recall(std::span<const Category> actual, std::span<const Category> predicted) {
    check_lengths(actual, predicted);
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const LabelPair a = to_pair(actual[i]);
        const LabelPair p = to_pair(predicted[i]);
        sum += set_ratio(intersection_size(a, p), set_size(a), set_size(p));
    }
    return sum / static_cast<double>(actual.size());
}

double hamming_loss(std::span<const Category> actual, std::span<const Category> predicted) {
    return 1.0 - sample_accuracy(actual, predicted);
}

MacroMicroScores label_macro_micro(std::span<const Category> actual,
                                   std::span<const Category> predicted) {
    check_lengths(actual, predicted);
    long tp[2] = {0, 0}, fp[2] = {0, 0}, fn[2] = {0, 0};
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const LabelPair a = to_pair(actual[i]);
        const LabelPair p = to_pair(predicted[i]);
        const bool av[2] = {a.anxiety, a.depression};
        const bool pv[2] = {p.anxiety, p.depression};
        for (int l = 0; l < 2; ++l) {
            if (av[l] && pv[l]) ++tp[l];
            else if (!av[l] && pv[l]) ++fp[l];
            else if (av[l] && !pv[l]) ++fn[l];
        }
    }
    auto prf = [](long t, long f_pos, long f_neg) {
        LabelScores s;
        s.precision = (t + f_pos) == 0 ? 0.0 : static_cast<double>(t) / (t + f_pos);
        s.recall = (t + f_neg) == 0 ? 0.0 : static_cast<double>(t) / (t + f_neg);
        s.f_measure = (s.precision + s.recall) == 0.0
                          ? 0.0
                          : 2.0 * s.precision * s.recall / (s.precision + s.recall);
        return s;
    };
    const LabelScores anx = prf(tp[0], fp[0], fn[0]);
    const LabelScores dep = prf(tp[1], fp[1], fn[1]);
    MacroMicroScores out;
    out.macro.precision = (anx.precision + dep.precision) / 2.0;
    out.macro.recall = (anx.recall + dep.recall) / 2.0;
    out.macro.f_measure = (anx.f_measure + dep.f_measure) / 2.0;
    out.micro = prf(tp[0] + tp[1], fp[0] + fp[1], fn[0] + fn[1]);
    return out;
}

EvaluationReport evaluate(std::span<const Category> actual, std::span<const Category> predicted) {
    check_lengths(actual, predicted);
    EvaluationReport r;
    r.exact_match = exact_match(actual, predicted);
    r.accuracy = sample_accuracy(actual, predicted);
    r.hamming_loss = 1.0 - r.accuracy;
    r.precision.sample = sample_precision(actual, predicted);
    r.recall.sample = sample_recall(actual, predicted);

    double fsum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const LabelPair a = to_pair(actual[i]);
        const LabelPair p = to_pair(predicted[i]);
        const int inter = intersection_size(a, p);
        const double prec = set_ratio(inter, set_size(p), set_size(a));
        const double rec = set_ratio(inter, set_size(a), set_size(p));
        fsum += (prec + rec) == 0.0 ? 0.0 : 2.0 * prec * rec / (prec + rec);
    }
    r.f_measure.sample = fsum / static_cast<double>(actual.size());

    const MacroMicroScores mm = label_macro_micro(actual, predicted);
    r.precision.macro = mm.macro.precision;
    r.precision.micro = mm.micro.precision;
    r.recall.macro = mm.macro.recall;
    r.recall.micro = mm.micro.recall;
    r.f_measure.macro = mm.macro.f_measure;
    r.f_measure.micro = mm.micro.f_measure;

    for (std::size_t i = 0; i < actual.size(); ++i)
        ++r.confusion[static_cast<std::size_t>(actual[i])][static_cast<std::size_t>(predicted[i])];
    return r;
}

std::string EvaluationReport::to_kv() const {
    std::ostringstream os;
    os << "exact_match " << fmt(exact_match) << "\n";
    os << "accuracy " << fmt(accuracy) << "\n";
    os << "hamming_loss " << fmt(hamming_loss) << "\n";
    os << "precision_sample " << fmt(precision.sample) << "\n";
    os << "precision_macro " << fmt(precision.macro) << "\n";
    os << "precision_micro " << fmt(precision.micro) << "\n";
    os << "recall_sample " << fmt(recall.sample) << "\n";
    os << "recall_macro " << fmt(recall.macro) << "\n";
    os << "recall_micro " << fmt(recall.micro) << "\n";
    os << "f_measure_sample " << fmt(f_measure.sample) << "\n";
    os << "f_measure_macro " << fmt(f_measure.macro) << "\n";
    os << "f_measure_micro " << fmt(f_measure.micro) << "\n";
    for (int a = 0; a < kCategoryCount; ++a)
        for (int p = 0; p < kCategoryCount; ++p)
            os << "confusion " << category_name(static_cast<Category>(a)) << " "
               << category_name(static_cast<Category>(p)) << " "
               << confusion[static_cast<std::size_t>(a)][static_cast<std::size_t>(p)] << "\n";
    return os.str();
}

EvaluationReport EvaluationReport::from_kv(const std::string& text) {
    EvaluationReport r;
    std::istringstream is(text);
    std::string key;
    while (is >> key) {
        if (key == "confusion") {
            std::string a, p;
            long count = 0;
            if (!(is >> a >> p >> count)) throw DataError("bad confusion line in report");
            r.confusion[static_cast<std::size_t>(category_from_name(a))]
                       [static_cast<std::size_t>(category_from_name(p))] = count;
            continue;
        }
        std::string value;
        if (!(is >> value)) throw DataError("missing value for report key '" + key + "'");
        const double v = fmt_parse(value);
        if (key == "exact_match") r.exact_match = v;
        else if (key == "accuracy") r.accuracy = v;
        else if (key == "hamming_loss") r.hamming_loss = v;
        else if (key == "precision_sample") r.precision.sample = v;
        else if (key == "precision_macro") r.precision.macro = v;
        else if (key == "precision_micro") r.precision.micro = v;
        else if (key == "recall_sample") r.recall.sample = v;
        else if (key == "recall_macro") r.recall.macro = v;
        else if (key == "recall_micro") r.recall.micro = v;
        else if (key == "f_measure_sample") r.f_measure.sample = v;
        else if (key == "f_measure_macro") r.f_measure.macro = v;
        else if (key == "f_measure_micro") r.f_measure.micro = v;
        else throw DataError("unknown report key '" + key + "'");
    }
    return r;
}

std::string EvaluationReport::to_table_csv() const {
    auto pct = [](double v) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%.2f", v * 100.0);
        return std::string(buf);
    };
    std::string out =
        "Acc.,Exact match,Precision macro,Precision micro,Recall macro,Recall micro,"
        "F-measure macro,F-measure micro,HL\n";
    out += pct(accuracy) + "," + pct(exact_match) + "," + pct(precision.macro) + "," +
           pct(precision.micro) + "," + pct(recall.macro) + "," + pct(recall.micro) + "," +
           pct(f_measure.macro) + "," + pct(f_measure.micro) + "," + pct(hamming_loss) + "\n";
    return out;
}

}  // namespace anxdep
