#pragma once

#include <cstdint>
#include <vector>

#include "bevdistill/pointcloud.hpp"

namespace bevdistill {

// 1-D k-means over per-point inclination angles. Centers are sorted
// ascending and `assignment` indexes into them.
struct BeamModel {
    std::vector<double> centers;
    std::vector<int> assignment;
    double inertia = 0.0;
    int k = 0;
};

// Subset of an input cloud: whole points kept or dropped, original order and
// coordinates untouched. beam_labels carry the source beam index of each
// surviving point.
struct PseudoCloud {
    PointCloud cloud;
    std::vector<int> kept_beams;
};

// Lloyd's algorithm on the inclination values, initialized at the k midpoint
// quantiles of the sorted values (falling back to quantiles of the distinct
// values if that produces coincident centers). Deterministic for a given
// input; `seed` is accepted for interface symmetry but the quantile
// initialization never consumes it.
//
// Requires a non-empty cloud and 1 <= k <= number of distinct inclinations.
BeamModel cluster_beams(const PointCloud& cloud, int k, std::uint64_t seed = 0, int max_iter = 100,
                        double tol = 1e-6);

// Uniform beam selection over phi-sorted centers: keeps floor(j * k / target)
// for j = 0..target-1. Always `target` distinct ascending indices, first 0.
std::vector<int> select_beams(const BeamModel& model, int target);

// Keeps exactly the points whose beam falls in select_beams(model, target).
PseudoCloud downsample(const PointCloud& cloud, const BeamModel& model, int target);

// to_spherical -> cluster_beams(source_beams) -> downsample(target_beams).
PseudoCloud generate_pseudo_low_beam(const PointCloud& cloud, int source_beams, int target_beams,
                                     std::uint64_t seed = 0);

}  // namespace bevdistill
