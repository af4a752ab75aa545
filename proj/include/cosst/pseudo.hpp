#pragma once

#include <string>
#include <vector>

#include "cosst/core.hpp"
#include "cosst/model.hpp"

namespace cosst {

/// One training sample of the pseudo multi-organ dataset D'_t: ground-truth
/// labels for the sample's annotated classes, model predictions elsewhere.
struct PseudoSample {
  std::string id;
  const Sample* source = nullptr;  // borrowed from the owning PartialDataset
  LabelMap merged;                 // y'
  std::vector<int> gt_classes;     // the sample's annotated set
  std::vector<int> pseudo_classes; // complement within [1, C]
  int source_iteration = 0;
};

/// Per-pixel argmax over all probability planes; ties break to the lowest
/// class index.
LabelMap predict_labels(const ProbMap& probs);
LabelMap predict_labels(const SegModel& model, const GridImage& image);

/// Merge rule: ground truth wins; pseudo predictions survive only for
/// unannotated classes; everything else falls back to background.
LabelMap merge_with_gt(const LabelMap& pseudo, const LabelMap& gt,
                       const std::vector<int>& annotated, int total_classes);

/// D'_t over the train-split samples of every dataset.
std::vector<PseudoSample> build_pseudo_dataset(const SegModel& model,
                                               const std::vector<PartialDataset>& datasets,
                                               int iteration);

/// Same merge rule applied to an externally supplied pseudo label map
/// (used when pseudo labels come from files instead of a model).
PseudoSample make_pseudo_sample(const Sample& sample, const LabelMap& pseudo,
                                const std::vector<int>& annotated, int total_classes,
                                int iteration);

}  // namespace cosst
