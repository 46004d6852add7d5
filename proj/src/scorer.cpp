#include "docext/scorer.hpp"

#include "docext/text.hpp"
#include "docext/util.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace docext {

namespace {

using TokenCounts = std::map<std::string, std::size_t>;

TokenCounts fold_counts(const std::vector<std::string>& slot) {
    TokenCounts out;
    for (const auto& t : slot) ++out[fold_token(t)];
    return out;
}

std::size_t intersection_size(const TokenCounts& a, const TokenCounts& b) {
    std::size_t n = 0;
    for (const auto& [tok, cnt] : a) {
        auto it = b.find(tok);
        if (it != b.end()) n += std::min(cnt, it->second);
    }
    return n;
}

struct FoldedExtraction {
    TokenCounts slots[3];
    std::size_t total = 0;
};

FoldedExtraction fold_extraction(const Extraction& e) {
    FoldedExtraction f;
    f.slots[0] = fold_counts(e.subject);
    f.slots[1] = fold_counts(e.relation);
    f.slots[2] = fold_counts(e.object);
    f.total = e.subject.size() + e.relation.size() + e.object.size();
    return f;
}

PairScore match_folded(const FoldedExtraction& pred, const FoldedExtraction& gold,
                       MatchMode mode) {
    PairScore s;
    if (mode == MatchMode::TokenGraded) {
        std::size_t matched = 0;
        for (int k = 0; k < 3; ++k) matched += intersection_size(pred.slots[k], gold.slots[k]);
        s.precision_match = pred.total ? double(matched) / double(pred.total) : 0.0;
        s.recall_match = gold.total ? double(matched) / double(gold.total) : 0.0;
    } else {
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k) {
            if (gold.slots[k].empty()) continue; // empty gold slot imposes nothing
            if (intersection_size(pred.slots[k], gold.slots[k]) == 0) ok = false;
        }
        if (intersection_size(pred.slots[1], gold.slots[1]) == 0) ok = false;
        s.precision_match = s.recall_match = ok ? 1.0 : 0.0;
    }
    s.f1_match = f1_of(s.precision_match, s.recall_match);
    return s;
}

std::vector<Assignment> assign_folded(const std::vector<FoldedExtraction>& preds,
                                      const std::vector<FoldedExtraction>& golds,
                                      MatchMode mode) {
    std::vector<Assignment> pairs;
    pairs.reserve(preds.size() * golds.size());
    for (std::size_t p = 0; p < preds.size(); ++p)
        for (std::size_t g = 0; g < golds.size(); ++g) {
            PairScore s = match_folded(preds[p], golds[g], mode);
            if (s.f1_match > 0.0) pairs.push_back({p, g, s});
        }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Assignment& a, const Assignment& b) {
        if (a.score.f1_match != b.score.f1_match) return a.score.f1_match > b.score.f1_match;
        if (a.pred_idx != b.pred_idx) return a.pred_idx < b.pred_idx;
        return a.gold_idx < b.gold_idx;
    });
    std::vector<bool> pred_used(preds.size(), false), gold_used(golds.size(), false);
    std::vector<Assignment> out;
    for (const Assignment& cand : pairs) {
        if (pred_used[cand.pred_idx] || gold_used[cand.gold_idx]) continue;
        pred_used[cand.pred_idx] = true;
        gold_used[cand.gold_idx] = true;
        out.push_back(cand);
    }
    return out;
}

using SentKey = std::pair<std::string, long>;

std::map<SentKey, std::vector<std::size_t>> index_by_sentence(
    const std::vector<Extraction>& extractions) {
    std::map<SentKey, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < extractions.size(); ++i)
        out[{extractions[i].doc_id, extractions[i].sent_idx}].push_back(i);
    return out;
}

// Single-threshold system scores: assignment per sentence, precision over
// all preds, recall over all golds.
DirectionScore score_once(const std::vector<Extraction>& preds,
                          const std::vector<Extraction>& golds, MatchMode mode) {
    auto preds_by_sent = index_by_sentence(preds);
    auto golds_by_sent = index_by_sentence(golds);

    std::vector<FoldedExtraction> folded_preds, folded_golds;
    folded_preds.reserve(preds.size());
    folded_golds.reserve(golds.size());
    for (const auto& e : preds) folded_preds.push_back(fold_extraction(e));
    for (const auto& e : golds) folded_golds.push_back(fold_extraction(e));

    double precision_sum = 0.0, recall_sum = 0.0;
    for (const auto& [key, pidx] : preds_by_sent) {
        auto git = golds_by_sent.find(key);
        if (git == golds_by_sent.end()) continue;
        std::vector<FoldedExtraction> ps, gs;
        for (std::size_t i : pidx) ps.push_back(folded_preds[i]);
        for (std::size_t i : git->second) gs.push_back(folded_golds[i]);
        for (const Assignment& a : assign_folded(ps, gs, mode)) {
            precision_sum += a.score.precision_match;
            recall_sum += a.score.recall_match;
        }
    }
    DirectionScore s;
    s.precision = preds.empty() ? 0.0 : precision_sum / double(preds.size());
    s.recall = golds.empty() ? 0.0 : recall_sum / double(golds.size());
    s.f1 = f1_of(s.precision, s.recall);
    return s;
}

} // namespace

double f1_of(double precision, double recall) {
    double denom = precision + recall;
    return denom > 0.0 ? 2.0 * precision * recall / denom : 0.0;
}

std::pair<double, double> slot_score(const std::vector<std::string>& pred_slot,
                                     const std::vector<std::string>& gold_slot) {
    if (pred_slot.empty() && gold_slot.empty()) return {1.0, 1.0};
    std::size_t inter = intersection_size(fold_counts(pred_slot), fold_counts(gold_slot));
    double precision = pred_slot.empty() ? 0.0 : double(inter) / double(pred_slot.size());
    double recall = gold_slot.empty() ? 0.0 : double(inter) / double(gold_slot.size());
    return {precision, recall};
}

PairScore tuple_match(const Extraction& pred, const Extraction& gold, MatchMode mode) {
    return match_folded(fold_extraction(pred), fold_extraction(gold), mode);
}

std::vector<Assignment> assign_matches(const std::vector<Extraction>& preds,
                                       const std::vector<Extraction>& golds, MatchMode mode) {
    std::vector<FoldedExtraction> fp, fg;
    fp.reserve(preds.size());
    fg.reserve(golds.size());
    for (const auto& e : preds) fp.push_back(fold_extraction(e));
    for (const auto& e : golds) fg.push_back(fold_extraction(e));
    return assign_folded(fp, fg, mode);
}

ScoreReport score_extractions(const std::vector<Extraction>& preds,
                              const std::vector<Extraction>& golds, MatchMode mode) {
    if (golds.empty()) throw DataError("no gold tuples");

    std::set<double, std::greater<double>> thresholds;
    for (const auto& e : preds) thresholds.insert(e.confidence);

    ScoreReport report;
    for (double theta : thresholds) {
        std::vector<Extraction> kept;
        for (const auto& e : preds)
            if (e.confidence >= theta) kept.push_back(e);
        DirectionScore s = score_once(kept, golds, mode);
        report.curve.push_back({s.precision, s.recall, theta});
    }

    for (const CurvePoint& pt : report.curve) {
        double f1 = f1_of(pt.precision, pt.recall);
        if (f1 > report.best_f1) {
            report.best_f1 = f1;
            report.precision_at_best = pt.precision;
            report.recall_at_best = pt.recall;
        }
    }

    if (!report.curve.empty()) {
        // Integrate over recall; extend to recall 0 at the precision of the
        // lowest-recall point.
        std::vector<CurvePoint> pts = report.curve;
        std::stable_sort(pts.begin(), pts.end(),
                         [](const CurvePoint& a, const CurvePoint& b) { return a.recall < b.recall; });
        double prev_r = 0.0, prev_p = pts.front().precision;
        double area = 0.0;
        for (const CurvePoint& pt : pts) {
            area += (pt.recall - prev_r) * 0.5 * (pt.precision + prev_p);
            prev_r = pt.recall;
            prev_p = pt.precision;
        }
        report.auc = area;
    }
    return report;
}

ConsistencyReport consistency(const std::vector<Extraction>& annot_a,
                              const std::vector<Extraction>& annot_b) {
    std::set<SentKey> keys_a, keys_b;
    for (const auto& e : annot_a) keys_a.insert({e.doc_id, e.sent_idx});
    for (const auto& e : annot_b) keys_b.insert({e.doc_id, e.sent_idx});
    if (keys_a != keys_b)
        throw DataError("annotation sets cover different sentence universes");

    ConsistencyReport r;
    r.a_from_b = score_once(annot_a, annot_b, MatchMode::BinaryLenient);
    r.b_from_a = score_once(annot_b, annot_a, MatchMode::BinaryLenient);
    r.average.precision = 0.5 * (r.a_from_b.precision + r.b_from_a.precision);
    r.average.recall = 0.5 * (r.a_from_b.recall + r.b_from_a.recall);
    r.average.f1 = 0.5 * (r.a_from_b.f1 + r.b_from_a.f1);
    return r;
}

} // namespace docext
