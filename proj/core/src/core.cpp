#include "bundleseg/core.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdio>

namespace bundleseg {

const Streamline& Tractogram::at(StreamlineId id) const {
  if (id >= streamlines.size())
    throw InvalidBundle("streamline id " + std::to_string(id) + " out of range (tractogram has " +
                        std::to_string(streamlines.size()) + " streamlines)");
  return streamlines[id];
}

std::vector<Streamline> bundle_streamlines(const Bundle& b, const Tractogram& t) {
  if (b.owns_geometry()) return b.geometry;
  if (b.member_ids.empty()) throw InvalidBundle("bundle '" + b.name + "' is empty");
  std::vector<Streamline> out;
  out.reserve(b.member_ids.size());
  for (StreamlineId id : b.member_ids) out.push_back(t.at(id));
  return out;
}

Affine4 Affine4::scaling(double sx, double sy, double sz) {
  Affine4 a;
  a.at(0, 0) = sx;
  a.at(1, 1) = sy;
  a.at(2, 2) = sz;
  return a;
}

Point3 Affine4::apply(double x, double y, double z) const {
  const auto& a = m;
  return {a[0] * x + a[1] * y + a[2] * z + a[3],
          a[4] * x + a[5] * y + a[6] * z + a[7],
          a[8] * x + a[9] * y + a[10] * z + a[11]};
}

namespace {

Eigen::Matrix4d to_eigen(const Affine4& a) {
  Eigen::Matrix4d e;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) e(r, c) = a.at(r, c);
  return e;
}

}  // namespace

bool Affine4::invertible() const {
  const Eigen::Matrix4d e = to_eigen(*this);
  if (!e.allFinite()) return false;
  Eigen::FullPivLU<Eigen::Matrix4d> lu(e);
  return lu.isInvertible();
}

Affine4 Affine4::inverse() const {
  const Eigen::Matrix4d e = to_eigen(*this);
  Eigen::FullPivLU<Eigen::Matrix4d> lu(e);
  if (!e.allFinite() || !lu.isInvertible()) throw Error("affine not invertible");
  const Eigen::Matrix4d inv = lu.inverse();
  Affine4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out.at(r, c) = inv(r, c);
  return out;
}

bool RoiMask::contains(const VoxelIndex& v) const {
  return std::binary_search(voxels.begin(), voxels.end(), v);
}

std::array<double, 3> VoxelGrid::edge_lengths() const {
  std::array<double, 3> e{};
  for (int c = 0; c < 3; ++c) {
    const double dx = affine.at(0, c), dy = affine.at(1, c), dz = affine.at(2, c);
    e[c] = std::sqrt(dx * dx + dy * dy + dz * dz);
  }
  return e;
}

double VoxelGrid::min_edge() const {
  const auto e = edge_lengths();
  return std::min({e[0], e[1], e[2]});
}

Point3 voxel_center(const RoiMask& mask, const VoxelIndex& v) {
  if (!mask.contains(v))
    throw VoxelOutOfMask("voxel (" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                         std::to_string(v[2]) + ") is not part of the mask");
  return mask.affine.apply(v[0] + 0.5, v[1] + 0.5, v[2] + 0.5);
}

std::vector<std::string> validate_streamline(const Streamline& s) {
  if (s.points.size() < 2)
    throw InvalidStreamline("streamline has " + std::to_string(s.points.size()) +
                            " point(s), need at least 2");
  for (std::size_t i = 0; i < s.points.size(); ++i)
    if (!s.points[i].finite())
      throw InvalidStreamline("non-finite coordinate at point " + std::to_string(i));
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i + 1 < s.points.size(); ++i)
    if (s.points[i] == s.points[i + 1])
      warnings.push_back("zero-length segment between points " + std::to_string(i) + " and " +
                         std::to_string(i + 1));
  return warnings;
}

Streamline resample(const Streamline& s, std::size_t n) {
  validate_streamline(s);
  if (n < 2) throw InvalidStreamline("cannot resample to fewer than 2 points");

  std::vector<double> cum(s.points.size(), 0.0);
  for (std::size_t i = 1; i < s.points.size(); ++i)
    cum[i] = cum[i - 1] + distance(s.points[i - 1], s.points[i]);
  const double total = cum.back();

  Streamline out;
  out.points.reserve(n);
  if (total == 0.0) {  // fully degenerate: all points coincide
    out.points.assign(n, s.points.front());
    return out;
  }
  std::size_t seg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double target = total * double(i) / double(n - 1);
    while (seg + 2 < s.points.size() && cum[seg + 1] < target) ++seg;
    const double len = cum[seg + 1] - cum[seg];
    const double u = len > 0.0 ? (target - cum[seg]) / len : 0.0;
    out.points.push_back(s.points[seg] + u * (s.points[seg + 1] - s.points[seg]));
  }
  return out;
}

}  // namespace bundleseg
