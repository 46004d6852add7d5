#include "docext/extractor.hpp"

#include "docext/text.hpp"
#include "docext/util.hpp"

#include <fstream>

namespace docext {

Coarse coarse_tag_one(const std::string& tag) {
    auto starts = [&](const char* prefix) { return tag.rfind(prefix, 0) == 0; };
    if (starts("VB")) return Coarse::V;
    if (tag == "IN" || tag == "TO" || tag == "RP") return Coarse::P;
    if (starts("NN") || starts("PRP") || tag == "CD") return Coarse::N;
    if (tag == "DT") return Coarse::Det;
    if (starts("JJ")) return Coarse::Adj;
    if (starts("RB") || tag == "MD") return Coarse::W;
    return Coarse::Other;
}

std::vector<Coarse> coarse_tag(const std::vector<std::string>& tags) {
    std::vector<Coarse> out;
    out.reserve(tags.size());
    for (const auto& t : tags) out.push_back(coarse_tag_one(t));
    return out;
}

namespace {

// Longest match of W* V (W* P)? starting at `begin`, or 0 if none.
std::size_t match_len(const std::vector<Coarse>& c, std::size_t begin) {
    std::size_t i = begin;
    while (i < c.size() && c[i] == Coarse::W) ++i;
    if (i >= c.size() || c[i] != Coarse::V) return 0;
    ++i;
    std::size_t best = i - begin; // ... W* V
    std::size_t j = i;
    while (j < c.size() && c[j] == Coarse::W) ++j;
    if (j < c.size() && c[j] == Coarse::P) best = j + 1 - begin; // ... V W* P
    return best;
}

} // namespace

std::vector<Span> relation_spans(const std::vector<Coarse>& classes) {
    std::vector<Span> spans;
    std::size_t i = 0;
    while (i < classes.size()) {
        std::size_t len = match_len(classes, i);
        if (len == 0) {
            ++i;
            continue;
        }
        if (!spans.empty() && spans.back().end == i)
            spans.back().end = i + len; // merge adjacent matches
        else
            spans.push_back({i, i + len});
        i += len;
    }
    return spans;
}

std::vector<Span> noun_phrase_spans(const std::vector<Coarse>& classes) {
    std::vector<Span> spans;
    std::size_t i = 0;
    while (i < classes.size()) {
        std::size_t j = i;
        if (j < classes.size() && classes[j] == Coarse::Det) ++j;
        while (j < classes.size() && classes[j] == Coarse::Adj) ++j;
        std::size_t nouns_begin = j;
        while (j < classes.size() && classes[j] == Coarse::N) ++j;
        if (j > nouns_begin) {
            spans.push_back({i, j});
            i = j;
        } else {
            ++i;
        }
    }
    return spans;
}

std::vector<Extraction> extract_sentence(const Sentence& sentence) {
    if (!sentence.tags)
        throw DataError("sentence " + sentence.doc_id + ":" + std::to_string(sentence.index) +
                        " has no POS tags");
    const std::vector<Coarse> classes = coarse_tag(*sentence.tags);
    const std::vector<Span> relations = relation_spans(classes);
    const std::vector<Span> nps = noun_phrase_spans(classes);

    auto slice = [&](const Span& s) {
        return std::vector<std::string>(sentence.tokens.begin() + long(s.begin),
                                        sentence.tokens.begin() + long(s.end));
    };

    std::vector<Extraction> out;
    for (const Span& rel : relations) {
        const Span* subject = nullptr;
        const Span* object = nullptr;
        for (const Span& np : nps) {
            if (np.end <= rel.begin) subject = &np; // rightmost NP left of the relation
            if (np.begin >= rel.end && !object) object = &np;
        }
        if (!subject) continue; // a tuple needs a subject
        Extraction e;
        e.doc_id = sentence.doc_id;
        e.sent_idx = long(sentence.index);
        e.subject = slice(*subject);
        e.relation = slice(rel);
        if (object) e.object = slice(*object);
        e.confidence = object ? 0.6 : 0.5;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Sentence> load_tagged(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::vector<Sentence> out;
    Sentence cur;
    bool have_header = false;
    std::string line;
    std::size_t lineno = 0;
    auto flush = [&]() {
        if (cur.tokens.empty()) {
            have_header = false;
            return;
        }
        if (!have_header)
            throw DataError(path + ": sentence without '# doc=... sent=...' header near line " +
                            std::to_string(lineno));
        out.push_back(std::move(cur));
        cur = Sentence{};
        cur.tags.emplace();
        have_header = false;
    };
    cur.tags.emplace();
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] == '#') {
            std::vector<std::string> fields = split_ws(line.substr(1));
            for (const auto& f : fields) {
                if (f.rfind("doc=", 0) == 0) cur.doc_id = f.substr(4);
                if (f.rfind("sent=", 0) == 0)
                    cur.index = std::size_t(parse_long(f.substr(5), path + " sent index"));
            }
            if (cur.doc_id.empty())
                throw DataError(path + ":" + std::to_string(lineno) + ": header missing doc id");
            have_header = true;
            continue;
        }
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2 || cols[0].empty() || cols[1].empty())
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": expected 'token<TAB>tag', got '" + line + "'");
        cur.tokens.push_back(normalize_nfc(cols[0]));
        cur.tags->push_back(cols[1]);
    }
    flush();
    return out;
}

} // namespace docext
