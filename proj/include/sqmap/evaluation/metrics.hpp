#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqmap/evaluation/iou3d.hpp"
#include "sqmap/geometry/superquadric.hpp"

namespace sqmap {
namespace eval {

struct LabeledBox {
  geom::OrientedBox3D box;
  int class_id = 0;
  int id = 0;  // prediction/ground-truth identity for deterministic ordering
};

struct Tally {
  int tp = 0;
  int fp = 0;
  int fn = 0;
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  Tally counts;
};

ClassMetrics metrics_from_tally(const Tally& t);

// Greedy one-to-one matching within each class: candidate pairs ordered by
// descending IoU (ties by lower prediction id, then lower ground-truth id),
// accepted when IoU >= threshold and both sides are unused. A ground-truth
// box can be matched at most once, so duplicates count as false positives.
std::map<int, Tally> match_predictions(const std::vector<LabeledBox>& preds,
                                       const std::vector<LabeledBox>& gts,
                                       double threshold);

struct ThresholdResult {
  double threshold = 0.0;
  std::map<int, ClassMetrics> per_class;
  ClassMetrics overall;
};

struct EvalReport {
  std::vector<ThresholdResult> results;  // one per threshold, ascending
  std::optional<double> matching_accuracy;
};

inline constexpr double kIouThresholds[] = {0.25, 0.5};

EvalReport evaluate_boxes(const std::vector<LabeledBox>& preds,
                          const std::vector<LabeledBox>& gts,
                          const std::vector<int>& class_ids,
                          std::optional<double> matching_accuracy);

}  // namespace eval
}  // namespace sqmap
