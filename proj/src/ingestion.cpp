#include "anxdep/ingestion.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "anxdep/rng.hpp"
#include "anxdep/text.hpp"
#include "anxdep/timeutil.hpp"

namespace anxdep {
namespace {

using nlohmann::json;

Session session_from_json(const json& j) {
    Session s;
    if (!j.is_object()) throw DataError("record is not an object");
    s.session_id = j.at("session_id").get<std::string>();
    s.user_id = j.at("user_id").get<std::string>();
    if (s.session_id.empty()) throw DataError("empty session_id");
    if (s.user_id.empty()) throw DataError("empty user_id");
    const auto& arr = j.at("interactions");
    if (!arr.is_array() || arr.empty())
        throw DataError("session '" + s.session_id + "' has no interactions");
    std::int64_t prev = 0;
    for (const auto& ij : arr) {
        Interaction it;
        const auto speaker = ij.at("speaker").get<std::string>();
        if (speaker == "human") it.speaker = Speaker::human;
        else if (speaker == "bot") it.speaker = Speaker::bot;
        else throw DataError("unknown speaker '" + speaker + "'");
        it.text = ij.at("text").get<std::string>();
        if (trim(it.text).empty()) throw DataError("empty interaction text");
        it.timestamp = parse_rfc3339(ij.at("timestamp").get<std::string>());
        if (!s.interactions.empty() && it.timestamp < prev)
            throw DataError("timestamps decrease within session '" + s.session_id + "'");
        prev = it.timestamp;
        s.interactions.push_back(std::move(it));
    }
    return s;
}

json session_to_json(const Session& s) {
    json arr = json::array();
    for (const auto& it : s.interactions) {
        arr.push_back({{"speaker", it.speaker == Speaker::human ? "human" : "bot"},
                       {"text", it.text},
                       {"timestamp", format_rfc3339(it.timestamp)}});
    }
    return json{{"session_id", s.session_id}, {"user_id", s.user_id}, {"interactions", arr}};
}

void normalize_order(Corpus& corpus) {
    std::stable_sort(corpus.sessions.begin(), corpus.sessions.end(),
                     [](const Session& a, const Session& b) {
                         if (a.user_id != b.user_id) return a.user_id < b.user_id;
                         return a.start_time() < b.start_time();
                     });
}

}  // namespace

Corpus parse_corpus(std::istream& is) {
    Corpus corpus;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        Session s;
        try {
            s = session_from_json(json::parse(line));
        } catch (const json::exception& e) {
            throw DataError("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const DataError& e) {
            throw DataError("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!seen.insert(s.session_id).second)
            throw DataError("line " + std::to_string(lineno) + ": duplicate session_id '" +
                            s.session_id + "'");
        corpus.sessions.push_back(std::move(s));
    }
    normalize_order(corpus);
    return corpus;
}

Corpus parse_corpus_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open corpus file '" + path + "'");
    return parse_corpus(f);
}

void write_corpus(std::ostream& os, const Corpus& corpus) {
    for (const auto& s : corpus.sessions) os << session_to_json(s).dump() << "\n";
}

std::vector<LabelRecord> parse_labels(std::istream& is) {
    std::vector<LabelRecord> records;
    std::set<std::pair<std::string, std::int64_t>> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        try {
            const json j = json::parse(line);
            LabelRecord r;
            r.user_id = j.at("user_id").get<std::string>();
            r.effective_date = parse_date(j.at("effective_date").get<std::string>());
            r.anxiety = j.at("anxiety").get<bool>();
            r.depression = j.at("depression").get<bool>();
            if (!seen.insert({r.user_id, r.effective_date}).second)
                throw DataError("duplicate label record for user '" + r.user_id + "'");
            records.push_back(std::move(r));
        } catch (const json::exception& e) {
            throw DataError("labels line " + std::to_string(lineno) + ": " + e.what());
        } catch (const DataError& e) {
            throw DataError("labels line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return records;
}

std::vector<LabelRecord> parse_labels_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open labels file '" + path + "'");
    return parse_labels(f);
}

void write_labels(std::ostream& os, const std::vector<LabelRecord>& records) {
    for (const auto& r : records) {
        os << json{{"user_id", r.user_id},
                   {"effective_date", format_date(r.effective_date)},
                   {"anxiety", r.anxiety},
                   {"depression", r.depression}}
                  .dump()
           << "\n";
    }
}

Corpus filter_sessions(Corpus corpus, int min_human) {
    std::erase_if(corpus.sessions,
                  [min_human](const Session& s) { return s.human_turns() < min_human; });
    return corpus;
}

Corpus attach_labels(Corpus corpus, std::vector<LabelRecord> records) {
    std::unordered_map<std::string, std::vector<LabelRecord>> by_user;
    for (auto& r : records) by_user[r.user_id].push_back(std::move(r));
    for (auto& [user, recs] : by_user)
        std::sort(recs.begin(), recs.end(),
                  [](const LabelRecord& a, const LabelRecord& b) {
                      return a.effective_date < b.effective_date;
                  });

    for (auto& session : corpus.sessions) {
        session.label.reset();
        const auto it = by_user.find(session.user_id);
        if (it == by_user.end()) continue;
        const std::int64_t start = session.start_time();
        const LabelRecord* applicable = nullptr;
        for (const auto& r : it->second) {
            if (r.effective_date <= start) applicable = &r;
            else break;
        }
        if (applicable) session.label = LabelPair{applicable->anxiety, applicable->depression};
    }
    return corpus;
}

Corpus decimate(Corpus corpus, int keep, int of) {
    if (keep < 1 || of < keep) throw DataError("decimate: need of >= keep >= 1");
    std::unordered_map<std::string, int> position;
    std::erase_if(corpus.sessions, [&](const Session& s) {
        const int i = position[s.user_id]++;
        return (i % of) >= keep;
    });
    return corpus;
}

ColdstartSplit split_coldstart(const Corpus& corpus, double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction < 1.0))
        throw DataError("coldstart fraction must be in (0, 1)");
    const std::size_t n = corpus.sessions.size();
    const auto total =
        static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));

    // Labeled session indices per category, in corpus order.
    std::array<std::vector<std::size_t>, kCategoryCount> by_category;
    std::size_t labeled = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (const auto& label = corpus.sessions[i].label) {
            by_category[static_cast<std::size_t>(to_category(*label))].push_back(i);
            ++labeled;
        }
    }
    if (total > labeled)
        throw DataError("coldstart needs " + std::to_string(total) + " labeled sessions, have " +
                        std::to_string(labeled));

    // Largest-remainder allocation proportional to category counts.
    std::array<std::size_t, kCategoryCount> alloc{};
    std::vector<std::pair<double, int>> remainders;
    std::size_t assigned = 0;
    for (int c = 0; c < kCategoryCount; ++c) {
        const auto count = by_category[static_cast<std::size_t>(c)].size();
        if (count == 0) continue;
        const double quota =
            static_cast<double>(total) * static_cast<double>(count) / static_cast<double>(labeled);
        alloc[static_cast<std::size_t>(c)] = static_cast<std::size_t>(std::floor(quota));
        assigned += alloc[static_cast<std::size_t>(c)];
        remainders.push_back({quota - std::floor(quota), c});
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [rem, c] : remainders) {
        if (assigned >= total) break;
        if (alloc[static_cast<std::size_t>(c)] < by_category[static_cast<std::size_t>(c)].size()) {
            ++alloc[static_cast<std::size_t>(c)];
            ++assigned;
        }
    }
    // Every present category contributes at least one session.
    for (int c = 0; c < kCategoryCount; ++c) {
        const auto count = by_category[static_cast<std::size_t>(c)].size();
        if (count == 0 || alloc[static_cast<std::size_t>(c)] >= 1) continue;
        int donor = -1;
        for (int d = 0; d < kCategoryCount; ++d)
            if (donor < 0 || alloc[static_cast<std::size_t>(d)] > alloc[static_cast<std::size_t>(donor)])
                donor = d;
        if (donor < 0 || alloc[static_cast<std::size_t>(donor)] <= 1)
            throw DataError("coldstart split cannot cover sparse category '" +
                            std::string(category_name(static_cast<Category>(c))) + "'");
        --alloc[static_cast<std::size_t>(donor)];
        ++alloc[static_cast<std::size_t>(c)];
    }

    std::vector<bool> in_coldstart(n, false);
    for (int c = 0; c < kCategoryCount; ++c) {
        auto& ids = by_category[static_cast<std::size_t>(c)];
        if (ids.empty()) continue;
        Rng rng(derive_seed(seed, "coldstart", static_cast<std::uint64_t>(c)));
        const auto picks = rng.sample_without_replacement(ids.size(), alloc[static_cast<std::size_t>(c)]);
        for (const std::size_t p : picks) in_coldstart[ids[p]] = true;
    }

    ColdstartSplit split;
    split.coldstart.provenance = corpus.provenance;
    split.main.provenance = corpus.provenance;
    for (std::size_t i = 0; i < n; ++i) {
        if (in_coldstart[i]) split.coldstart.sessions.push_back(corpus.sessions[i]);
        else split.main.sessions.push_back(corpus.sessions[i]);
    }
    return split;
}

}  // namespace anxdep
