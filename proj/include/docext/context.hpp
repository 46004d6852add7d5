#pragma once

#include "docext/bootstrap.hpp"
#include "docext/corpus.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace docext {

// Special surface tokens of the encoder/decoder layout.
namespace tok {
inline constexpr const char* pad = "<pad>";
inline constexpr const char* unk = "<unk>";
inline constexpr const char* bos = "<bos>";
inline constexpr const char* sep = "<sep>";
inline constexpr const char* sub = "<sub>";
inline constexpr const char* rel = "<rel>";
inline constexpr const char* obj = "<obj>";
inline constexpr const char* eot = "<eot>";
} // namespace tok

struct ContextWindow {
    std::string doc_id;
    std::size_t source_index = 0;
    std::size_t window_size = 0;
    // In-bounds surrounding sentence indices: preceding block ascending,
    // then following block ascending. Never crosses document bounds.
    std::vector<std::size_t> context_indices;
};

struct LayoutConfig {
    std::size_t max_len = 128; // whole encoder input, special tokens included
};

// Encoder input is <bos> source <sep> ctx1 <sep> ctx2 <sep> ...; segment id
// 0 covers the source block including its markers, 1 all context positions.
// Target is <sub> subject <rel> relation <obj> object <eot>. copy[k] is the
// input position (within the source block) the k-th target token copies
// from, if any.
struct TrainingExample {
    std::string doc_id;
    std::size_t source_index = 0;
    std::vector<std::string> input;
    std::vector<int> segment_ids;
    std::size_t source_block_len = 0; // positions with segment id 0
    std::vector<std::string> target;
    std::vector<std::optional<std::size_t>> copy;
};

ContextWindow build_window(const Document& doc, std::size_t i, std::size_t t);

// Encoder input only (no target); shared by training and inference. When
// the layout exceeds max_len, whole context sentences are dropped
// outermost-first, alternating between the far-left and far-right ends
// starting from the farther one (ties: left); the sentence whose removal
// would overshoot is tail-truncated instead.
TrainingExample build_input(const Document& doc, const ContextWindow& window,
                            const LayoutConfig& cfg);

TrainingExample build_example(const Document& doc, const ContextWindow& window,
                              const Extraction& tuple, const LayoutConfig& cfg);

// One example per (sentence, tuple) pair, emitted in label key order then
// tuple order.
std::vector<TrainingExample> build_dataset(const std::vector<Document>& docs,
                                           const CombinedLabels& labels, std::size_t t,
                                           const LayoutConfig& cfg);

void save_examples(const std::vector<TrainingExample>& examples, const std::string& path);
std::vector<TrainingExample> load_examples(const std::string& path);

} // namespace docext
