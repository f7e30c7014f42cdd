#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace csg {

using PixelGrid = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// 64x64 (configurable) binary bitmap. px(y, x), y = row from the top.
struct BinaryImage {
  PixelGrid px;

  BinaryImage() : px(PixelGrid::Constant(64, 64, false)) {}
  BinaryImage(int width, int height) : px(PixelGrid::Constant(height, width, false)) {}

  int width() const { return static_cast<int>(px.cols()); }
  int height() const { return static_cast<int>(px.rows()); }
  bool at(int x, int y) const { return px(y, x); }
  void set(int x, int y, bool v = true) { px(y, x) = v; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width() && y >= 0 && y < height(); }

  long pixel_count() const { return static_cast<long>(px.count()); }
  bool empty() const { return !px.any(); }
  /// Image diagonal in pixels (the rho that scales Chamfer distances).
  double diagonal() const { return std::hypot(static_cast<double>(width()), static_cast<double>(height())); }

  bool operator==(const BinaryImage& o) const {
    return px.rows() == o.px.rows() && px.cols() == o.px.cols() && (px == o.px).all();
  }
  bool operator!=(const BinaryImage& o) const { return !(*this == o); }

  /// Content hash, row-major scan; used for dedup caches and reproducibility checks.
  uint64_t content_hash() const;
};

long intersection_count(const BinaryImage& a, const BinaryImage& b);
long union_count(const BinaryImage& a, const BinaryImage& b);
long xor_count(const BinaryImage& a, const BinaryImage& b);

/// PBM I/O. P4 (packed binary) by default, P1 (plain) also supported on read
/// and via write_pbm_plain. A set pixel is written as PBM black (1).
void write_pbm(const BinaryImage& img, const std::string& path);
void write_pbm_plain(const BinaryImage& img, const std::string& path);
BinaryImage read_pbm(const std::string& path);

}  // namespace csg
