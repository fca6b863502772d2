#include "sqmap/evaluation/metrics.hpp"

#include <algorithm>
#include <set>

namespace sqmap {
namespace eval {

ClassMetrics metrics_from_tally(const Tally& t) {
  ClassMetrics m;
  m.counts = t;
  const int pred_count = t.tp + t.fp;
  const int gt_count = t.tp + t.fn;
  m.precision = pred_count > 0 ? static_cast<double>(t.tp) / pred_count : 0.0;
  m.recall = gt_count > 0 ? static_cast<double>(t.tp) / gt_count : 0.0;
  m.f1 = (m.precision + m.recall) > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

std::map<int, Tally> match_predictions(const std::vector<LabeledBox>& preds,
                                       const std::vector<LabeledBox>& gts,
                                       double threshold) {
  std::map<int, Tally> out;
  std::set<int> classes;
  for (const auto& p : preds) classes.insert(p.class_id);
  for (const auto& g : gts) classes.insert(g.class_id);

  for (int cls : classes) {
    struct Candidate {
      double iou;
      int pred_id;
      int gt_id;
      std::size_t pred_idx;
      std::size_t gt_idx;
    };
    std::vector<std::size_t> pidx, gidx;
    for (std::size_t i = 0; i < preds.size(); ++i) {
      if (preds[i].class_id == cls) pidx.push_back(i);
    }
    for (std::size_t j = 0; j < gts.size(); ++j) {
      if (gts[j].class_id == cls) gidx.push_back(j);
    }
    std::vector<Candidate> cands;
    for (std::size_t i : pidx) {
      for (std::size_t j : gidx) {
        const double iou = iou3d(preds[i].box, gts[j].box);
        if (iou >= threshold) {
          cands.push_back({iou, preds[i].id, gts[j].id, i, j});
        }
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.iou != b.iou) return a.iou > b.iou;
      if (a.pred_id != b.pred_id) return a.pred_id < b.pred_id;
      return a.gt_id < b.gt_id;
    });
    std::set<std::size_t> used_pred, used_gt;
    Tally& t = out[cls];
    for (const auto& c : cands) {
      if (used_pred.count(c.pred_idx) || used_gt.count(c.gt_idx)) continue;
      used_pred.insert(c.pred_idx);
      used_gt.insert(c.gt_idx);
      ++t.tp;
    }
    t.fp = static_cast<int>(pidx.size()) - t.tp;
    t.fn = static_cast<int>(gidx.size()) - t.tp;
  }
  return out;
}

EvalReport evaluate_boxes(const std::vector<LabeledBox>& preds,
                          const std::vector<LabeledBox>& gts,
                          const std::vector<int>& class_ids,
                          std::optional<double> matching_accuracy) {
  EvalReport report;
  report.matching_accuracy = matching_accuracy;
  for (double thr : kIouThresholds) {
    ThresholdResult res;
    res.threshold = thr;
    const auto tallies = match_predictions(preds, gts, thr);
    Tally overall;
    for (int cls : class_ids) {
      Tally t;
      if (auto it = tallies.find(cls); it != tallies.end()) {
        t = it->second;
      }
      res.per_class[cls] = metrics_from_tally(t);
      overall.tp += t.tp;
      overall.fp += t.fp;
      overall.fn += t.fn;
    }
    res.overall = metrics_from_tally(overall);
    report.results.push_back(std::move(res));
  }
  return report;
}

}  // namespace eval
}  // namespace sqmap
