#ifndef BUNDLESEG_CORE_HPP
#define BUNDLESEG_CORE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bundleseg/errors.hpp"

namespace bundleseg {

using StreamlineId = std::uint32_t;

// A point in world/scanner space, millimetres.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

inline Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator*(double s, const Point3& p) { return {s * p.x, s * p.y, s * p.z}; }
inline bool operator==(const Point3& a, const Point3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

inline double squared_distance(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz;
}

inline double distance(const Point3& a, const Point3& b) {
  return std::sqrt(squared_distance(a, b));
}

inline double norm(const Point3& p) {
  return std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
}

// An ordered 3D polyline. Point count varies per streamline and is never
// implicitly resampled; see resample() for the explicit utility.
struct Streamline {
  std::vector<Point3> points;

  std::size_t size() const { return points.size(); }
  const Point3& front() const { return points.front(); }
  const Point3& back() const { return points.back(); }
};

// The full set of streamlines of one brain (or one synthetic subject).
// Streamline ids are dense: id == index into `streamlines`.
struct Tractogram {
  std::vector<Streamline> streamlines;
  std::string source;

  std::size_t size() const { return streamlines.size(); }
  const Streamline& at(StreamlineId id) const;
};

// A named group of streamlines. Either a set of ids into a tractogram
// (segmentation outputs, ground-truth labels) or owned geometry
// (example bundles loaded from another subject).
struct Bundle {
  std::string name;
  std::vector<StreamlineId> member_ids;  // sorted ascending, distinct
  std::vector<Streamline> geometry;      // non-empty for owned bundles

  bool owns_geometry() const { return !geometry.empty(); }
  std::size_t size() const { return owns_geometry() ? geometry.size() : member_ids.size(); }
};

// Copies the member streamlines of an id-based bundle out of its tractogram.
// Owned bundles are returned as-is.
std::vector<Streamline> bundle_streamlines(const Bundle& b, const Tractogram& t);

using VoxelIndex = std::array<int, 3>;

// Row-major homogeneous 4x4 transform mapping voxel indices to millimetres.
struct Affine4 {
  std::array<double, 16> m{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};

  static Affine4 identity() { return {}; }
  static Affine4 scaling(double sx, double sy, double sz);

  double at(int r, int c) const { return m[std::size_t(r) * 4 + c]; }
  double& at(int r, int c) { return m[std::size_t(r) * 4 + c]; }

  Point3 apply(double x, double y, double z) const;
  Point3 apply(const Point3& p) const { return apply(p.x, p.y, p.z); }

  bool invertible() const;
  Affine4 inverse() const;  // throws Error if singular
};

inline bool operator==(const Affine4& a, const Affine4& b) { return a.m == b.m; }

// A set of voxels on a grid, with the affine mapping indices to mm.
// The convention throughout: the affine maps integer indices to voxel
// corners, so the centre of voxel (i,j,k) is affine * (i+.5, j+.5, k+.5).
struct RoiMask {
  std::array<int, 3> shape{0, 0, 0};
  Affine4 affine;
  std::vector<VoxelIndex> voxels;  // sorted lexicographically, distinct

  bool contains(const VoxelIndex& v) const;
};

// A voxel grid without any selected voxels; the raster for voxelization.
struct VoxelGrid {
  std::array<int, 3> shape{0, 0, 0};
  Affine4 affine;

  std::array<double, 3> edge_lengths() const;
  double min_edge() const;
  bool in_shape(const VoxelIndex& v) const {
    return v[0] >= 0 && v[1] >= 0 && v[2] >= 0 && v[0] < shape[0] && v[1] < shape[1] && v[2] < shape[2];
  }
};

// Centre of voxel v in mm. v must be a member of the mask.
Point3 voxel_center(const RoiMask& mask, const VoxelIndex& v);

// Checks the streamline invariants. Throws InvalidStreamline when the
// streamline has fewer than two points or any non-finite coordinate;
// returns one warning per zero-length segment otherwise.
std::vector<std::string> validate_streamline(const Streamline& s);

// Arclength-uniform resampling to exactly n points. A performance
// utility only; nothing in the segmentation pipeline calls it.
Streamline resample(const Streamline& s, std::size_t n);

}  // namespace bundleseg

#endif
