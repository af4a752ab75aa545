#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosst {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense 2D raster: channel-major planes, row-major within a plane.
struct GridImage {
  int height = 0;
  int width = 0;
  int channels = 1;
  std::vector<double> values;

  GridImage() = default;
  GridImage(int channels_, int height_, int width_, double fill = 0.0)
      : height(height_),
        width(width_),
        channels(channels_),
        values(static_cast<std::size_t>(channels_) * height_ * width_, fill) {}

  std::size_t plane_size() const { return static_cast<std::size_t>(height) * width; }

  double& at(int c, int y, int x) {
    return values[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  double at(int c, int y, int x) const {
    return values[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  std::span<double> plane(int c) {
    return {values.data() + static_cast<std::size_t>(c) * plane_size(), plane_size()};
  }
  std::span<const double> plane(int c) const {
    return {values.data() + static_cast<std::size_t>(c) * plane_size(), plane_size()};
  }

  // Throws config_error on size mismatch or non-finite values.
  void validate() const;
};

/// Integer class labels; 0 is background.
struct LabelMap {
  int height = 0;
  int width = 0;
  std::vector<std::int32_t> labels;

  LabelMap() = default;
  LabelMap(int height_, int width_, std::int32_t fill = 0)
      : height(height_), width(width_), labels(static_cast<std::size_t>(height_) * width_, fill) {}

  std::size_t size() const { return static_cast<std::size_t>(height) * width; }
  std::int32_t& at(int y, int x) { return labels[static_cast<std::size_t>(y) * width + x]; }
  std::int32_t at(int y, int x) const { return labels[static_cast<std::size_t>(y) * width + x]; }

  // Throws config_error if any label falls outside [0, total_classes].
  void validate(int total_classes) const;

  bool operator==(const LabelMap&) const = default;
};

/// Class index space: 0 = background, k in [1, total_classes()] = organ k.
struct ClassCatalog {
  std::vector<std::string> names;  // names[k-1] names class k

  int total_classes() const { return static_cast<int>(names.size()); }
  const std::string& name(int k) const { return names.at(k - 1); }
  void validate() const;  // at least one class, unique names

  bool operator==(const ClassCatalog&) const = default;
};

enum class Split { train, valid, test };
std::string to_string(Split s);
Split split_from_string(const std::string& s);

struct Sample {
  std::string id;
  GridImage image;
  LabelMap label;
};

/// One partially labeled dataset: only the classes in `annotated` carry labels.
struct PartialDataset {
  std::string name;
  std::vector<int> annotated;  // ascending, nonempty, subset of [1, C]
  Split split = Split::train;
  std::vector<Sample> samples;

  void validate(int total_classes) const;
};

/// Per-pixel class probabilities; plane 0 is background.
struct ProbMap {
  int height = 0;
  int width = 0;
  int classes = 0;  // 1 + C_PL (or 1 + |annotated| after channel merging)
  std::vector<double> probs;

  ProbMap() = default;
  ProbMap(int classes_, int height_, int width_, double fill = 0.0)
      : height(height_),
        width(width_),
        classes(classes_),
        probs(static_cast<std::size_t>(classes_) * height_ * width_, fill) {}

  std::size_t plane_size() const { return static_cast<std::size_t>(height) * width; }
  double& at(int c, int y, int x) {
    return probs[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  double at(int c, int y, int x) const {
    return probs[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  std::span<double> plane(int c) {
    return {probs.data() + static_cast<std::size_t>(c) * plane_size(), plane_size()};
  }
  std::span<const double> plane(int c) const {
    return {probs.data() + static_cast<std::size_t>(c) * plane_size(), plane_size()};
  }

  bool is_simplex(double tol = 1e-6) const;
};

struct Mask {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> on;

  Mask() = default;
  Mask(int height_, int width_, std::uint8_t fill = 0)
      : height(height_), width(width_), on(static_cast<std::size_t>(height_) * width_, fill) {}

  std::size_t size() const { return on.size(); }
  std::uint8_t& at(int y, int x) { return on[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int y, int x) const { return on[static_cast<std::size_t>(y) * width + x]; }
  std::size_t count() const;
  bool empty_mask() const { return count() == 0; }

  bool operator==(const Mask&) const = default;
};

/// Binary mask of all labeled pixels (label != 0).
Mask union_mask(const LabelMap& label);

/// Binary mask of pixels with label == k.
Mask class_mask(const LabelMap& label, int k);

/// Number of pixels carrying class k (1 <= k).
long class_pixel_count(const LabelMap& label, int k);

/// One-hot probability planes for a label map over 1 + total_classes channels.
ProbMap one_hot(const LabelMap& label, int total_classes);

}  // namespace cosst
