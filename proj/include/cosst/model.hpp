#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cosst/core.hpp"

namespace cosst {

/// Geometry of the segmentation network: `feat_layers` same-size convolutions
/// with tanh nonlinearity (first one in_channels -> feat_planes, then
/// feat_planes -> feat_planes), followed by a 1x1 classifier into n_classes
/// channels and a per-pixel softmax.
struct ModelArch {
  int in_channels = 1;
  int feat_planes = 8;  // m
  int feat_layers = 2;
  int kernel = 3;  // odd
  int n_classes = 0;  // 1 + C_PL

  long conv_weights(int layer) const {
    const long in = (layer == 0) ? in_channels : feat_planes;
    return static_cast<long>(feat_planes) * in * kernel * kernel;
  }
  long conv_params(int layer) const { return conv_weights(layer) + feat_planes; }
  long cls_params() const { return static_cast<long>(n_classes) * feat_planes + n_classes; }
  long param_count() const {
    long n = 0;
    for (int l = 0; l < feat_layers; ++l) n += conv_params(l);
    return n + cls_params();
  }
  long conv_offset(int layer) const {
    long off = 0;
    for (int l = 0; l < layer; ++l) off += conv_params(l);
    return off;
  }
  long cls_offset() const { return conv_offset(feat_layers); }

  void validate() const;

  bool operator==(const ModelArch&) const = default;
};

struct SegModel {
  ModelArch arch;
  std::vector<double> params;  // conv layers in order (weights then bias), then classifier
};

/// Xavier-uniform weights, zero biases, deterministic in the seed.
SegModel init_model(const ModelArch& arch, std::uint64_t seed);

struct ForwardResult {
  GridImage features;  // m planes, output of the last feature layer
  ProbMap probs;
};

/// Activations kept for the backward pass.
struct ForwardTrace {
  GridImage input;
  std::vector<GridImage> post;  // post[l] = tanh output of feature layer l
  ProbMap probs;
};

ForwardResult forward(const SegModel& model, const GridImage& image);
ForwardTrace forward_traced(const SegModel& model, const GridImage& image);

/// Exact parameter gradients by the chain rule. `loss_grad_wrt_probs` has one
/// channel per class plane of the ProbMap.
std::vector<double> backward(const SegModel& model, const ForwardTrace& trace,
                             const GridImage& loss_grad_wrt_probs);
std::vector<double> backward(const SegModel& model, const GridImage& image,
                             const GridImage& loss_grad_wrt_probs);

/// dL/dlogits for one pixel: out_j = p_j * (up_j - sum_k up_k p_k).
void softmax_vjp(std::span<const double> probs, std::span<const double> upstream,
                 std::span<double> out);

enum class Stage { initial, finetune };
std::string to_string(Stage s);

struct TrainState {
  SegModel model;
  std::vector<double> velocity;
  int epoch = 0;
  double base_lr = 0.01;
  int max_epochs = 1;
  Stage stage = Stage::initial;
  std::uint64_t rng_seed = 0;
};

TrainState make_train_state(SegModel model, double base_lr, int max_epochs, Stage stage,
                            std::uint64_t seed);

/// base_lr * (1 - epoch/max_epochs)^0.9
double poly_lr(double base_lr, int epoch, int max_epochs);

enum class StepStatus { ok, diverged };

/// Nesterov momentum SGD at the state's scheduled rate:
///   v <- mu*v + g;  p <- p - lr*(g + mu*v)
/// Non-finite gradients abort the step (parameters untouched).
StepStatus sgd_step(TrainState& state, const std::vector<double>& grads, double momentum = 0.99);

// --- checkpoints (CKPTv1) ---

struct CheckpointMeta {
  std::string stage = "initial";
  int iteration = 0;        // self-training iteration (0 for theta0)
  std::string parent;       // checkpoint this was fine-tuned from; empty for theta0
  std::uint64_t seed = 0;
  double val_dice = -1.0;
  int epoch = -1;
  std::string timestamp;    // only non-deterministic field; informational
};

void save_checkpoint(const std::filesystem::path& path, const SegModel& model,
                     const ClassCatalog& catalog, const CheckpointMeta& meta);

struct LoadedCheckpoint {
  SegModel model;
  ClassCatalog catalog;
  CheckpointMeta meta;
};

/// Throws io_error on format problems; if `expected` is given, a catalog
/// mismatch is rejected the same way.
LoadedCheckpoint load_checkpoint(const std::filesystem::path& path,
                                 const ClassCatalog* expected = nullptr);

}  // namespace cosst
