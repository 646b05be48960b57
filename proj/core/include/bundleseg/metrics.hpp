#ifndef BUNDLESEG_METRICS_HPP
#define BUNDLESEG_METRICS_HPP

#include "bundleseg/core.hpp"

namespace bundleseg {

// An ordered set of ROI masks jointly defining a bundle's trajectory.
// The masks may live on different grids.
struct RoiSet {
  std::vector<RoiMask> rois;

  std::size_t size() const { return rois.size(); }
};

// Mean over the points of `sa` of the distance to the closest point of
// `sb`. Not symmetric in its arguments.
double directed_mean_closest(const Streamline& sa, const Streamline& sb);

// Mean-of-closest distance: the symmetrised mean of the two directed
// terms. Zero when the two point sets coincide.
double mean_closest_distance(const Streamline& sa, const Streamline& sb);

// Endpoint distance: each endpoint is matched to the nearer endpoint of
// the other streamline independently (two endpoints per direction, the
// two minima may pick the same endpoint), averaged per direction and
// symmetrised across the two directions. Invariant under reversal of
// either streamline's point order.
double endpoint_distance(const Streamline& sa, const Streamline& sb);

// Minimum distance between any streamline point and any voxel centre of
// the mask. Zero iff a point coincides with a centre.
double min_roi_distance(const Streamline& s, const RoiMask& roi);

// Mean of min_roi_distance over all masks of the set.
double mean_roi_distance(const Streamline& s, const RoiSet& rois);

// ROI distance: absolute difference of the two streamlines' mean ROI
// distances. A pseudo-metric (zero does not imply equality).
double roi_distance(const Streamline& sa, const Streamline& sb, const RoiSet& rois);

}  // namespace bundleseg

#endif
