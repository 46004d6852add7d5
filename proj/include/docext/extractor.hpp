#pragma once

#include "docext/corpus.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace docext {

// Coarse word classes the relation pattern runs over.
enum class Coarse { V, W, P, N, Det, Adj, Other };

// Penn-Treebank-style tag -> coarse class. VB* -> V; IN, TO, RP -> P;
// NN*, PRP, CD -> N; DT -> DET; JJ* -> ADJ; RB*, MD -> W; anything
// unrecognized -> OTHER.
Coarse coarse_tag_one(const std::string& tag);
std::vector<Coarse> coarse_tag(const std::vector<std::string>& tags);

struct Span {
    std::size_t begin = 0; // inclusive
    std::size_t end = 0;   // exclusive
    std::size_t size() const { return end - begin; }
};

// Relation spans: maximal-munch left-to-right matches of W* V (W* P)? over
// the coarse classes, adjacent matches merged. The leading W* admits
// auxiliaries and adverbs ("can be", "might not be") ahead of the verb.
std::vector<Span> relation_spans(const std::vector<Coarse>& classes);

// Maximal noun-phrase spans (DET? ADJ* N+), greedy left to right.
std::vector<Span> noun_phrase_spans(const std::vector<Coarse>& classes);

// One extraction per relation span that has a noun phrase strictly to its
// left: subject = nearest NP left, object = nearest NP right (may be
// absent -> empty object). Confidence 0.5, +0.1 when both arguments found.
std::vector<Extraction> extract_sentence(const Sentence& sentence);

// tagged.conll: "# doc=<id> sent=<idx>" header, then "token<TAB>tag" lines,
// blank line ends the sentence.
std::vector<Sentence> load_tagged(const std::string& path);

} // namespace docext
