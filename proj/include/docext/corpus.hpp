#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace docext {

struct Sentence {
    std::string doc_id;
    std::size_t index = 0;                       // 0-based position in the document
    std::vector<std::string> tokens;             // non-empty, whitespace-delimited units
    std::optional<std::vector<std::string>> tags; // parallel POS tags when present
};

struct Document {
    std::string doc_id;
    std::string domain;
    std::vector<Sentence> sentences;             // indices 0..N-1, contiguous
};

// A (subject, relation, object) token-span triple bound to one sentence.
// Subject and relation are non-empty; the object may be empty.
struct Extraction {
    std::string doc_id;
    long sent_idx = 0;
    std::vector<std::string> subject;
    std::vector<std::string> relation;
    std::vector<std::string> object;
    double confidence = 1.0;
};

struct MetricSummary {
    double average = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;
};

// n_sent and the sentence-level metrics cover sentences carrying at least
// one gold tuple; sents_per_doc covers every sentence of every document.
struct CorpusStats {
    std::size_t n_doc = 0;
    std::size_t n_sent = 0;
    std::size_t n_tuple = 0;
    MetricSummary sent_len;        // tokens per sentence with >= 1 tuple
    MetricSummary tuples_per_sent; // tuples per sentence with >= 1 tuple
    MetricSummary subject_len;
    MetricSummary relation_len;
    MetricSummary object_len;
    MetricSummary sents_per_doc;
};

enum class DocFormat { Jsonl, Plain };

// documents.jsonl: one object per line with doc_id, domain, sentences and
// optional tags. Plain: one sentence per line, blank line ends a document;
// plain documents are assigned ids d1, d2, ... in file order. Tokens are
// NFC-normalized on load and otherwise preserved verbatim.
std::vector<Document> load_documents(const std::string& path, DocFormat format);
void save_documents(const std::vector<Document>& docs, const std::string& path);

// TSV columns: doc_id, sent_idx, confidence, subject, relation, object with
// slots space-joined. Five columns means a gold file without confidence
// (read back as 1.0); a seventh provenance column is tolerated and ignored.
std::vector<Extraction> load_extractions(const std::string& path);
void save_extractions(const std::vector<Extraction>& extractions, const std::string& path);

CorpusStats corpus_stats(const std::vector<Document>& docs,
                         const std::vector<Extraction>& gold);

} // namespace docext
