#pragma once

#include "docext/corpus.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace docext {

enum class Provenance { Main, Fallback };

using SentenceKey = std::pair<std::string, long>; // (doc_id, sent_idx)

// Per-sentence pseudo labels after main+fallback combination. A sentence is
// present only if it received at least one tuple; provenance records which
// system supplied them. Iteration order is sentence key order.
struct CombinedLabels {
    struct Entry {
        std::vector<Extraction> tuples;
        Provenance provenance = Provenance::Main;
    };
    std::map<SentenceKey, Entry> sentences;
};

struct LabelStats {
    std::size_t n_sent = 0;   // sentences with >= 1 tuple
    std::size_t n_tuple = 0;
    std::size_t n_sent_main = 0;
    std::size_t n_sent_fallback = 0;
};

// For each sentence of the universe: the main system's tuples if any exist,
// else the fallback's, else the sentence is omitted. Tuples referencing
// sentences outside the universe are an error.
CombinedLabels combine(const std::vector<Extraction>& main,
                       const std::vector<Extraction>& fallback,
                       const std::vector<SentenceKey>& universe);

LabelStats label_stats(const CombinedLabels& labels);

std::vector<SentenceKey> universe_of(const std::vector<Document>& docs);

// TSV with a trailing provenance column ("main" | "fallback").
void save_combined(const CombinedLabels& labels, const std::string& path);
CombinedLabels load_combined(const std::string& path);

// Groups plain extractions per sentence, all provenance main; used when a
// labels file comes from a single system.
CombinedLabels group_extractions(const std::vector<Extraction>& extractions);

} // namespace docext
