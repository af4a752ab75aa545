#pragma once

#include <filesystem>

#include "cosst/core.hpp"

namespace cosst {

// GRIDv1 raster files: one text header line
//   GRIDv1 <channels> <height> <width> <dtype:f32|i32>
// followed by little-endian binary values, row-major, channel-major.

void write_grid(const std::filesystem::path& path, const GridImage& image);
void write_grid(const std::filesystem::path& path, const LabelMap& label);

GridImage read_grid_image(const std::filesystem::path& path);
LabelMap read_grid_label(const std::filesystem::path& path);

struct GridHeader {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::string dtype;
};

/// Parses the header only; throws io_error on malformed input.
GridHeader read_grid_header(const std::filesystem::path& path);

}  // namespace cosst
