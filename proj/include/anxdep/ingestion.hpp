#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "anxdep/types.hpp"

namespace anxdep {

constexpr int kDefaultMinHuman = 6;

// Line-delimited session records, one JSON object per line. Sessions are
// returned ordered by (user_id, first timestamp); duplicate session ids and
// structurally invalid lines are errors carrying the line number.
Corpus parse_corpus(std::istream& is);
Corpus parse_corpus_file(const std::string& path);
void write_corpus(std::ostream& os, const Corpus& corpus);

std::vector<LabelRecord> parse_labels(std::istream& is);
std::vector<LabelRecord> parse_labels_file(const std::string& path);
void write_labels(std::ostream& os, const std::vector<LabelRecord>& records);

// Keeps sessions with at least min_human human interactions.
Corpus filter_sessions(Corpus corpus, int min_human = kDefaultMinHuman);

// Latest record per user with effective_date <= session start; sessions with
// no applicable record stay unlabeled.
Corpus attach_labels(Corpus corpus, std::vector<LabelRecord> records);

// Per user, keeps sessions at positions i with (i mod of) < keep.
Corpus decimate(Corpus corpus, int keep = 2, int of = 3);

struct ColdstartSplit {
    Corpus coldstart;
    Corpus main;
};

// ceil(fraction * N) sessions sampled without replacement, stratified by
// category over the labeled sessions; every present category contributes at
// least one session or the sparse category is reported.
ColdstartSplit split_coldstart(const Corpus& corpus, double fraction, std::uint64_t seed);

}  // namespace anxdep
