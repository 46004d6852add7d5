#include "docext/context.hpp"

#include "docext/util.hpp"

#include <fstream>
#include <map>

#include <json.hpp>

namespace docext {

ContextWindow build_window(const Document& doc, std::size_t i, std::size_t t) {
    const std::size_t n = doc.sentences.size();
    if (i >= n)
        throw DataError("sentence index " + std::to_string(i) + " out of range for document '" +
                        doc.doc_id + "' with " + std::to_string(n) + " sentences");
    ContextWindow w;
    w.doc_id = doc.doc_id;
    w.source_index = i;
    w.window_size = t;
    const std::size_t lo = i >= t ? i - t : 0;
    for (std::size_t k = lo; k < i; ++k) w.context_indices.push_back(k);
    const std::size_t hi = std::min(n - 1, i + t);
    for (std::size_t k = i + 1; k <= hi; ++k) w.context_indices.push_back(k);
    return w;
}

namespace {

struct ContextSentence {
    std::size_t index;
    std::vector<std::string> tokens; // possibly tail-truncated
    bool kept = true;
};

std::size_t layout_length(std::size_t source_len, const std::vector<ContextSentence>& ctx) {
    std::size_t len = source_len + 2; // <bos> source <sep>
    for (const auto& c : ctx)
        if (c.kept) len += c.tokens.size() + 1; // tokens + trailing <sep>
    return len;
}

} // namespace

TrainingExample build_input(const Document& doc, const ContextWindow& window,
                            const LayoutConfig& cfg) {
    const Sentence& src = doc.sentences.at(window.source_index);
    if (src.tokens.size() + 2 > cfg.max_len)
        throw DataError("source too long: " + std::to_string(src.tokens.size()) + " tokens in " +
                        doc.doc_id + ":" + std::to_string(window.source_index) +
                        " exceed max length " + std::to_string(cfg.max_len));

    std::vector<ContextSentence> ctx;
    for (std::size_t idx : window.context_indices)
        ctx.push_back({idx, doc.sentences.at(idx).tokens, true});

    // Drop whole context sentences outermost-first while over budget; the
    // final over-budget sentence loses tail tokens instead of everything.
    const std::size_t i = window.source_index;
    std::size_t left = 0;                         // leftmost surviving preceding sentence
    std::size_t right = ctx.size();               // one past rightmost surviving following
    auto dist = [&](std::size_t pos) {
        std::size_t idx = ctx[pos].index;
        return idx < i ? i - idx : idx - i;
    };
    while (layout_length(src.tokens.size(), ctx) > cfg.max_len) {
        // Locate the current extremes among surviving sentences.
        std::size_t lpos = left, rpos = right;
        while (lpos < right && (!ctx[lpos].kept || ctx[lpos].index > i)) ++lpos;
        while (rpos > left && (rpos - 1 >= ctx.size() || !ctx[rpos - 1].kept ||
                               ctx[rpos - 1].index < i))
            --rpos;
        bool have_left = lpos < right && ctx[lpos].kept && ctx[lpos].index < i;
        bool have_right = rpos > left && ctx[rpos - 1].kept && ctx[rpos - 1].index > i;
        std::size_t victim;
        if (have_left && have_right)
            victim = dist(lpos) >= dist(rpos - 1) ? lpos : rpos - 1;
        else if (have_left)
            victim = lpos;
        else if (have_right)
            victim = rpos - 1;
        else
            break; // no context left; source alone fits by precondition
        std::size_t overage = layout_length(src.tokens.size(), ctx) - cfg.max_len;
        ContextSentence& s = ctx[victim];
        if (overage < s.tokens.size()) {
            s.tokens.resize(s.tokens.size() - overage); // tail truncation
        } else {
            s.kept = false;
        }
    }

    TrainingExample ex;
    ex.doc_id = doc.doc_id;
    ex.source_index = window.source_index;
    ex.input.push_back(tok::bos);
    for (const auto& t : src.tokens) ex.input.push_back(t);
    ex.input.push_back(tok::sep);
    ex.source_block_len = ex.input.size();
    ex.segment_ids.assign(ex.input.size(), 0);
    for (const auto& c : ctx) {
        if (!c.kept) continue;
        for (const auto& t : c.tokens) {
            ex.input.push_back(t);
            ex.segment_ids.push_back(1);
        }
        ex.input.push_back(tok::sep);
        ex.segment_ids.push_back(1);
    }
    return ex;
}

TrainingExample build_example(const Document& doc, const ContextWindow& window,
                              const Extraction& tuple, const LayoutConfig& cfg) {
    if (tuple.doc_id != doc.doc_id || tuple.sent_idx != long(window.source_index))
        throw DataError("tuple " + tuple.doc_id + ":" + std::to_string(tuple.sent_idx) +
                        " does not belong to sentence " + doc.doc_id + ":" +
                        std::to_string(window.source_index));
    TrainingExample ex = build_input(doc, window, cfg);

    ex.target.push_back(tok::sub);
    for (const auto& t : tuple.subject) ex.target.push_back(t);
    ex.target.push_back(tok::rel);
    for (const auto& t : tuple.relation) ex.target.push_back(t);
    ex.target.push_back(tok::obj);
    for (const auto& t : tuple.object) ex.target.push_back(t);
    ex.target.push_back(tok::eot);

    const Sentence& src = doc.sentences.at(window.source_index);
    for (const auto& t : ex.target) {
        std::optional<std::size_t> pos;
        if (t != tok::sub && t != tok::rel && t != tok::obj && t != tok::eot) {
            for (std::size_t k = 0; k < src.tokens.size(); ++k)
                if (src.tokens[k] == t) {
                    pos = k + 1; // +1 for the leading <bos>
                    break;
                }
        }
        ex.copy.push_back(pos);
    }
    return ex;
}

std::vector<TrainingExample> build_dataset(const std::vector<Document>& docs,
                                           const CombinedLabels& labels, std::size_t t,
                                           const LayoutConfig& cfg) {
    std::map<std::string, const Document*> by_id;
    for (const Document& d : docs) by_id[d.doc_id] = &d;

    std::vector<TrainingExample> out;
    for (const auto& [key, entry] : labels.sentences) {
        const auto& [doc_id, sent_idx] = key;
        auto it = by_id.find(doc_id);
        if (it == by_id.end()) throw DataError("labels reference unknown document '" + doc_id + "'");
        const Document& doc = *it->second;
        if (sent_idx < 0 || std::size_t(sent_idx) >= doc.sentences.size())
            throw DataError("labels reference unknown sentence " + doc_id + ":" +
                            std::to_string(sent_idx));
        ContextWindow w = build_window(doc, std::size_t(sent_idx), t);
        for (const Extraction& tuple : entry.tuples) {
            try {
                out.push_back(build_example(doc, w, tuple, cfg));
            } catch (const DataError& e) {
                throw DataError(std::string(e.what()) + " (while building " + doc_id + ":" +
                                std::to_string(sent_idx) + ")");
            }
        }
    }
    return out;
}

void save_examples(const std::vector<TrainingExample>& examples, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open file for writing: " + path);
    for (const TrainingExample& ex : examples) {
        nlohmann::json j;
        j["doc_id"] = ex.doc_id;
        j["sent_idx"] = ex.source_index;
        j["input"] = ex.input;
        j["segment_ids"] = ex.segment_ids;
        j["source_block_len"] = ex.source_block_len;
        j["target"] = ex.target;
        auto copy = nlohmann::json::array();
        for (const auto& c : ex.copy) {
            if (c)
                copy.push_back(*c);
            else
                copy.push_back(nullptr);
        }
        j["copy"] = std::move(copy);
        out << j.dump() << "\n";
    }
}

std::vector<TrainingExample> load_examples(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::vector<TrainingExample> out;
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
        TrainingExample ex;
        ex.doc_id = j.value("doc_id", std::string{});
        ex.source_index = j.value("sent_idx", std::size_t{0});
        ex.input = j.at("input").get<std::vector<std::string>>();
        ex.segment_ids = j.at("segment_ids").get<std::vector<int>>();
        ex.target = j.at("target").get<std::vector<std::string>>();
        if (j.contains("source_block_len")) {
            ex.source_block_len = j.at("source_block_len").get<std::size_t>();
        } else {
            // First run of segment id 0.
            std::size_t n = 0;
            while (n < ex.segment_ids.size() && ex.segment_ids[n] == 0) ++n;
            ex.source_block_len = n;
        }
        if (j.contains("copy"))
            for (const auto& c : j.at("copy"))
                ex.copy.push_back(c.is_null() ? std::optional<std::size_t>{}
                                              : std::optional<std::size_t>{c.get<std::size_t>()});
        if (ex.input.size() != ex.segment_ids.size())
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": input/segment_ids length mismatch");
        if (!ex.copy.empty() && ex.copy.size() != ex.target.size())
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": copy/target length mismatch");
        out.push_back(std::move(ex));
    }
    return out;
}

} // namespace docext
