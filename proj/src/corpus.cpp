#include "docext/corpus.hpp"

#include "docext/text.hpp"
#include "docext/util.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

namespace docext {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open file for writing: " + path);
    return out;
}

std::vector<std::string> normalize_tokens(std::vector<std::string> tokens) {
    for (auto& t : tokens) t = normalize_nfc(t);
    return tokens;
}

void validate_document(const Document& doc, const std::string& where) {
    if (doc.sentences.empty()) throw DataError(where + ": empty document '" + doc.doc_id + "'");
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
        const Sentence& s = doc.sentences[i];
        if (s.index != i)
            throw DataError(where + ": non-contiguous sentence index in '" + doc.doc_id + "'");
        if (s.tokens.empty())
            throw DataError(where + ": empty sentence " + std::to_string(i) + " in '" +
                            doc.doc_id + "'");
        for (const auto& t : s.tokens)
            if (t.empty())
                throw DataError(where + ": empty token in '" + doc.doc_id + "' sentence " +
                                std::to_string(i));
        if (s.tags && s.tags->size() != s.tokens.size())
            throw DataError(where + ": tag/token length mismatch in '" + doc.doc_id +
                            "' sentence " + std::to_string(i));
    }
}

std::vector<Document> load_documents_jsonl(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<Document> docs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw DataError(path + ":" + std::to_string(lineno) + ": bad JSON: " + e.what());
        }
        const std::string where = path + ":" + std::to_string(lineno);
        if (!j.is_object() || !j.contains("doc_id") || !j.contains("sentences"))
            throw DataError(where + ": expected object with doc_id and sentences");
        Document doc;
        doc.doc_id = j.at("doc_id").get<std::string>();
        doc.domain = j.value("domain", std::string{});
        const auto& sents = j.at("sentences");
        if (!sents.is_array()) throw DataError(where + ": sentences must be an array");
        const nlohmann::json* tags = j.contains("tags") ? &j.at("tags") : nullptr;
        if (tags && (!tags->is_array() || tags->size() != sents.size()))
            throw DataError(where + ": tags must parallel sentences");
        for (std::size_t i = 0; i < sents.size(); ++i) {
            Sentence s;
            s.doc_id = doc.doc_id;
            s.index = i;
            s.tokens = normalize_tokens(sents[i].get<std::vector<std::string>>());
            if (tags) s.tags = (*tags)[i].get<std::vector<std::string>>();
            doc.sentences.push_back(std::move(s));
        }
        validate_document(doc, where);
        docs.push_back(std::move(doc));
    }
    return docs;
}

std::vector<Document> load_documents_plain(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<Document> docs;
    Document cur;
    std::string line;
    std::size_t lineno = 0;
    auto flush = [&]() {
        if (cur.sentences.empty()) return;
        cur.doc_id = "d" + std::to_string(docs.size() + 1);
        for (auto& s : cur.sentences) s.doc_id = cur.doc_id;
        validate_document(cur, path);
        docs.push_back(std::move(cur));
        cur = Document{};
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush();
            continue;
        }
        Sentence s;
        s.index = cur.sentences.size();
        s.tokens = normalize_tokens(split_ws(line));
        if (s.tokens.empty())
            throw DataError(path + ":" + std::to_string(lineno) + ": blank-looking sentence");
        cur.sentences.push_back(std::move(s));
    }
    flush();
    return docs;
}

MetricSummary summarize(const std::vector<double>& values) {
    MetricSummary m;
    m.count = values.size();
    if (values.empty()) return m;
    m.min = std::numeric_limits<double>::infinity();
    m.max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (double v : values) {
        sum += v;
        m.min = std::min(m.min, v);
        m.max = std::max(m.max, v);
    }
    m.average = sum / double(values.size());
    return m;
}

} // namespace

std::vector<Document> load_documents(const std::string& path, DocFormat format) {
    return format == DocFormat::Jsonl ? load_documents_jsonl(path) : load_documents_plain(path);
}

void save_documents(const std::vector<Document>& docs, const std::string& path) {
    std::ofstream out = open_output(path);
    for (const Document& doc : docs) {
        nlohmann::json j;
        j["doc_id"] = doc.doc_id;
        j["domain"] = doc.domain;
        auto sents = nlohmann::json::array();
        bool any_tags = false;
        for (const Sentence& s : doc.sentences) {
            sents.push_back(s.tokens);
            if (s.tags) any_tags = true;
        }
        j["sentences"] = std::move(sents);
        if (any_tags) {
            auto tags = nlohmann::json::array();
            for (const Sentence& s : doc.sentences)
                tags.push_back(s.tags ? *s.tags : std::vector<std::string>{});
            j["tags"] = std::move(tags);
        }
        out << j.dump() << "\n";
    }
}

std::vector<Extraction> load_extractions(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<Extraction> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() < 5 || cols.size() > 7)
            throw DataError(where + ": expected 5-7 tab-separated columns, got " +
                            std::to_string(cols.size()));
        Extraction e;
        e.doc_id = cols[0];
        e.sent_idx = parse_long(cols[1], where + " sent_idx");
        if (e.sent_idx < 0) throw DataError(where + ": negative sentence index");
        std::size_t slot0;
        if (cols.size() == 5) {
            e.confidence = 1.0;  // gold files omit the confidence column
            slot0 = 2;
        } else {
            e.confidence = parse_double(cols[2], where + " confidence");
            slot0 = 3;
        }
        if (e.confidence < 0.0 || e.confidence > 1.0)
            throw DataError(where + ": confidence " + format_double(e.confidence) +
                            " outside [0,1]");
        e.subject = normalize_tokens(split_ws(cols[slot0]));
        e.relation = normalize_tokens(split_ws(cols[slot0 + 1]));
        e.object = normalize_tokens(split_ws(cols[slot0 + 2]));
        if (e.subject.empty()) throw DataError(where + ": empty subject");
        if (e.relation.empty()) throw DataError(where + ": empty relation");
        out.push_back(std::move(e));
    }
    return out;
}

void save_extractions(const std::vector<Extraction>& extractions, const std::string& path) {
    std::ofstream out = open_output(path);
    for (const Extraction& e : extractions) {
        out << e.doc_id << '\t' << e.sent_idx << '\t' << format_double(e.confidence) << '\t'
            << join(e.subject) << '\t' << join(e.relation) << '\t' << join(e.object) << "\n";
    }
}

CorpusStats corpus_stats(const std::vector<Document>& docs, const std::vector<Extraction>& gold) {
    if (docs.empty()) throw DataError("no documents");

    std::map<std::pair<std::string, long>, std::size_t> tuples_per_sentence;
    std::map<std::string, std::size_t> doc_sizes;
    for (const Document& d : docs) doc_sizes[d.doc_id] = d.sentences.size();

    std::vector<double> sub_len, rel_len, obj_len;
    for (const Extraction& e : gold) {
        auto it = doc_sizes.find(e.doc_id);
        if (it == doc_sizes.end() || e.sent_idx < 0 || std::size_t(e.sent_idx) >= it->second)
            throw DataError("gold tuple refers to unknown sentence " + e.doc_id + ":" +
                            std::to_string(e.sent_idx));
        ++tuples_per_sentence[{e.doc_id, e.sent_idx}];
        sub_len.push_back(double(e.subject.size()));
        rel_len.push_back(double(e.relation.size()));
        obj_len.push_back(double(e.object.size()));
    }

    CorpusStats stats;
    stats.n_doc = docs.size();
    stats.n_tuple = gold.size();

    std::vector<double> sent_len, tuples_per_sent, sents_per_doc;
    for (const Document& d : docs) {
        sents_per_doc.push_back(double(d.sentences.size()));
        for (const Sentence& s : d.sentences) {
            auto it = tuples_per_sentence.find({d.doc_id, long(s.index)});
            if (it == tuples_per_sentence.end()) continue;
            sent_len.push_back(double(s.tokens.size()));
            tuples_per_sent.push_back(double(it->second));
        }
    }
    stats.n_sent = sent_len.size();
    stats.sent_len = summarize(sent_len);
    stats.tuples_per_sent = summarize(tuples_per_sent);
    stats.subject_len = summarize(sub_len);
    stats.relation_len = summarize(rel_len);
    stats.object_len = summarize(obj_len);
    stats.sents_per_doc = summarize(sents_per_doc);
    return stats;
}

} // namespace docext
