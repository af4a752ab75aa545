#pragma once

#include <span>
#include <vector>

#include "cosst/core.hpp"

namespace cosst {

inline constexpr double kDiceEps = 1e-5;
inline constexpr double kCeClamp = 1e-12;

struct LossReport {
  double total = 0.0;
  double marginal_term = 0.0;   // mean per-channel Dice loss + cross-entropy
  double exclusion_term = 0.0;  // sum of forbidden-overlap Dice similarities
  double ce_term = 0.0;
  std::vector<double> per_class_dice_terms;
  bool saturated = false;
};

/// Sums the planes of unannotated classes into the background plane. Output
/// planes: [new background, annotated classes in ascending index order].
ProbMap merge_channels(const ProbMap& probs, const std::vector<int>& annotated);

/// Merged-space plane index for each original label value: remap[0] = 0,
/// remap[k] = 1 + rank of k within `annotated`; unannotated classes map to -1.
std::vector<int> merged_label_remap(const std::vector<int>& annotated, int total_classes);

struct PlaneLoss {
  double value = 0.0;
  std::vector<double> grad;
};

/// 1 - (2*sum(p*t) + eps) / (sum(p) + sum(t) + eps), with exact gradient.
PlaneLoss soft_dice_loss(std::span<const double> probs_k, std::span<const double> target_k);

struct CeLoss {
  double value = 0.0;
  GridImage grad;  // one channel per plane of `probs`
  bool saturated = false;
};

/// Mean over pixels of -log p_target, where target plane = class_remap[label].
CeLoss cross_entropy_loss(const ProbMap& probs, const LabelMap& target,
                          const std::vector<int>& class_remap);

struct ExclusionLoss {
  double value = 0.0;
  GridImage grad;
};

/// Sum over unannotated classes u of the soft-Dice similarity between plane u
/// and the labeled-union mask M. Equals zero when every class is annotated.
ExclusionLoss exclusion_loss(const ProbMap& probs, const std::vector<int>& annotated,
                             const Mask& mask_m);

struct StageLoss {
  LossReport report;
  GridImage grad;  // w.r.t. the full (unmerged) probability planes
};

/// Marginal (Dice+CE over merged channels) plus exclusion supervision for one
/// partially labeled sample. Term weights support the single-loss ablations.
StageLoss stage1_loss(const ProbMap& probs, const LabelMap& label,
                      const std::vector<int>& annotated, double marginal_weight = 1.0,
                      double exclusion_weight = 1.0);

/// Standard Dice+CE over all channels against a fully merged label map.
StageLoss fulllabel_loss(const ProbMap& probs, const LabelMap& merged_label);

}  // namespace cosst
