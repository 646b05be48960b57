#include "bundleseg/metrics.hpp"

#include <limits>

namespace bundleseg {

namespace {

void require_valid(const Streamline& s) {
  if (s.points.size() < 2) throw InvalidStreamline("streamline has fewer than 2 points");
  for (const auto& p : s.points)
    if (!p.finite()) throw InvalidStreamline("streamline has a non-finite coordinate");
}

// Nearer of the two endpoints of s to p.
double min_endpoint_distance(const Point3& p, const Streamline& s) {
  return std::min(distance(p, s.front()), distance(p, s.back()));
}

}  // namespace

double directed_mean_closest(const Streamline& sa, const Streamline& sb) {
  require_valid(sa);
  require_valid(sb);
  double acc = 0.0;
  for (const auto& a : sa.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& b : sb.points) {
      const double d2 = squared_distance(a, b);
      if (d2 < best) best = d2;
    }
    acc += std::sqrt(best);
  }
  return acc / double(sa.points.size());
}

double mean_closest_distance(const Streamline& sa, const Streamline& sb) {
  return 0.5 * (directed_mean_closest(sa, sb) + directed_mean_closest(sb, sa));
}

double endpoint_distance(const Streamline& sa, const Streamline& sb) {
  require_valid(sa);
  require_valid(sb);
  const double ab = 0.5 * (min_endpoint_distance(sa.front(), sb) + min_endpoint_distance(sa.back(), sb));
  const double ba = 0.5 * (min_endpoint_distance(sb.front(), sa) + min_endpoint_distance(sb.back(), sa));
  return 0.5 * (ab + ba);
}

double min_roi_distance(const Streamline& s, const RoiMask& roi) {
  require_valid(s);
  if (roi.voxels.empty()) throw EmptyRoi("ROI mask has no voxels");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : roi.voxels) {
    const Point3 c = roi.affine.apply(v[0] + 0.5, v[1] + 0.5, v[2] + 0.5);
    for (const auto& p : s.points) {
      const double d2 = squared_distance(p, c);
      if (d2 < best) best = d2;
    }
  }
  return std::sqrt(best);
}

double mean_roi_distance(const Streamline& s, const RoiSet& rois) {
  if (rois.rois.empty()) throw EmptyRoi("ROI set is empty");
  double acc = 0.0;
  for (const auto& roi : rois.rois) acc += min_roi_distance(s, roi);
  return acc / double(rois.rois.size());
}

double roi_distance(const Streamline& sa, const Streamline& sb, const RoiSet& rois) {
  return std::abs(mean_roi_distance(sa, rois) - mean_roi_distance(sb, rois));
}

}  // namespace bundleseg
