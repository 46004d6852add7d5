#pragma once

#include "docext/corpus.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace docext {

enum class MatchMode { TokenGraded, BinaryLenient };

struct PairScore {
    double precision_match = 0.0;
    double recall_match = 0.0;
    double f1_match = 0.0;
};

struct Assignment {
    std::size_t pred_idx = 0;
    std::size_t gold_idx = 0;
    PairScore score;
};

struct CurvePoint {
    double precision = 0.0;
    double recall = 0.0;
    double threshold = 0.0;
};

struct ScoreReport {
    std::vector<CurvePoint> curve; // descending threshold
    double auc = 0.0;
    double best_f1 = 0.0;
    double precision_at_best = 0.0;
    double recall_at_best = 0.0;
};

struct DirectionScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct ConsistencyReport {
    DirectionScore a_from_b; // A's tuples scored with B as gold
    DirectionScore b_from_a;
    DirectionScore average;
};

double f1_of(double precision, double recall);

// Multiset token overlap of one slot pair under case-insensitive NFC-folded
// comparison. Both slots empty counts as a full match; exactly one empty as
// a miss on the relevant side.
std::pair<double, double> slot_score(const std::vector<std::string>& pred_slot,
                                     const std::vector<std::string>& gold_slot);

// TokenGraded pools matched-token counts across the three slots;
// BinaryLenient is all-or-nothing: every slot that is non-empty in gold
// must share at least one token with the corresponding pred slot.
PairScore tuple_match(const Extraction& pred, const Extraction& gold, MatchMode mode);

// Greedy one-to-one assignment in descending f1 order (ties: lower pred
// index, then lower gold index); zero-f1 pairs are never assigned. All
// extractions must belong to one sentence.
std::vector<Assignment> assign_matches(const std::vector<Extraction>& preds,
                                       const std::vector<Extraction>& golds, MatchMode mode);

// PR curve over the distinct prediction confidences (descending), with
// per-sentence assignment at each threshold. AUC is the trapezoidal area
// over recall after prepending (recall 0, precision of the lowest-recall
// point).
ScoreReport score_extractions(const std::vector<Extraction>& preds,
                              const std::vector<Extraction>& golds, MatchMode mode);

// Dual-annotator protocol: each side scored against the other as gold under
// BinaryLenient at a single threshold, plus the per-metric arithmetic mean.
// The two sets must cover the same sentences.
ConsistencyReport consistency(const std::vector<Extraction>& annot_a,
                              const std::vector<Extraction>& annot_b);

} // namespace docext
