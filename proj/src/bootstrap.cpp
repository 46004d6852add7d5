#include "docext/bootstrap.hpp"

#include "docext/util.hpp"

#include <fstream>
#include <set>

namespace docext {

namespace {

std::map<SentenceKey, std::vector<Extraction>> group_by_sentence(
    const std::vector<Extraction>& extractions) {
    std::map<SentenceKey, std::vector<Extraction>> out;
    for (const Extraction& e : extractions) out[{e.doc_id, e.sent_idx}].push_back(e);
    return out;
}

} // namespace

CombinedLabels combine(const std::vector<Extraction>& main,
                       const std::vector<Extraction>& fallback,
                       const std::vector<SentenceKey>& universe) {
    std::set<SentenceKey> known(universe.begin(), universe.end());
    auto check = [&](const std::vector<Extraction>& es, const char* which) {
        for (const Extraction& e : es)
            if (!known.count({e.doc_id, e.sent_idx}))
                throw DataError(std::string(which) + " extraction refers to sentence outside " +
                                "the universe: " + e.doc_id + ":" + std::to_string(e.sent_idx));
    };
    check(main, "main");
    check(fallback, "fallback");

    auto main_by_sent = group_by_sentence(main);
    auto fallback_by_sent = group_by_sentence(fallback);

    CombinedLabels out;
    for (const SentenceKey& key : known) {
        auto m = main_by_sent.find(key);
        if (m != main_by_sent.end() && !m->second.empty()) {
            out.sentences[key] = {m->second, Provenance::Main};
            continue;
        }
        auto f = fallback_by_sent.find(key);
        if (f != fallback_by_sent.end() && !f->second.empty())
            out.sentences[key] = {f->second, Provenance::Fallback};
    }
    return out;
}

LabelStats label_stats(const CombinedLabels& labels) {
    LabelStats stats;
    for (const auto& [key, entry] : labels.sentences) {
        (void)key;
        if (entry.tuples.empty()) continue;
        ++stats.n_sent;
        stats.n_tuple += entry.tuples.size();
        if (entry.provenance == Provenance::Main)
            ++stats.n_sent_main;
        else
            ++stats.n_sent_fallback;
    }
    return stats;
}

std::vector<SentenceKey> universe_of(const std::vector<Document>& docs) {
    std::vector<SentenceKey> out;
    for (const Document& d : docs)
        for (const Sentence& s : d.sentences) out.emplace_back(d.doc_id, long(s.index));
    return out;
}

void save_combined(const CombinedLabels& labels, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open file for writing: " + path);
    for (const auto& [key, entry] : labels.sentences) {
        (void)key;
        const char* prov = entry.provenance == Provenance::Main ? "main" : "fallback";
        for (const Extraction& e : entry.tuples) {
            out << e.doc_id << '\t' << e.sent_idx << '\t' << format_double(e.confidence) << '\t'
                << join(e.subject) << '\t' << join(e.relation) << '\t' << join(e.object) << '\t'
                << prov << "\n";
        }
    }
}

CombinedLabels load_combined(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    in.close();

    std::vector<Extraction> extractions = load_extractions(path);

    // Re-read provenance column if present; default main.
    std::ifstream again(path, std::ios::binary);
    CombinedLabels out;
    std::string line;
    std::size_t i = 0;
    while (std::getline(again, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cols = split(line, '\t');
        const Extraction& e = extractions.at(i++);
        SentenceKey key{e.doc_id, e.sent_idx};
        auto& entry = out.sentences[key];
        entry.tuples.push_back(e);
        if (cols.size() == 7) entry.provenance =
            cols[6] == "fallback" ? Provenance::Fallback : Provenance::Main;
    }
    return out;
}

CombinedLabels group_extractions(const std::vector<Extraction>& extractions) {
    CombinedLabels out;
    for (const Extraction& e : extractions)
        out.sentences[{e.doc_id, e.sent_idx}].tuples.push_back(e);
    return out;
}

} // namespace docext
