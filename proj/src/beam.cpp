#include "bevdistill/beam.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bevdistill/common.hpp"

namespace bevdistill {

namespace {

// Midpoint quantiles: index floor((2j+1) * n / (2k)) into the sorted values.
std::vector<double> quantile_init(const std::vector<double>& sorted_values, int k) {
    std::vector<double> centers(static_cast<std::size_t>(k));
    std::size_t n = sorted_values.size();
    for (int j = 0; j < k; ++j) {
        std::size_t idx = (2 * static_cast<std::size_t>(j) + 1) * n / (2 * static_cast<std::size_t>(k));
        centers[static_cast<std::size_t>(j)] = sorted_values[std::min(idx, n - 1)];
    }
    return centers;
}

int nearest_center(const std::vector<double>& centers, double value) {
    // Centers stay sorted throughout Lloyd iterations on 1-D data, so a
    // binary search plus neighbor comparison finds the closest one. Ties go
    // to the lower index.
    auto it = std::lower_bound(centers.begin(), centers.end(), value);
    if (it == centers.begin()) return 0;
    if (it == centers.end()) return static_cast<int>(centers.size()) - 1;
    int hi = static_cast<int>(it - centers.begin());
    int lo = hi - 1;
    double d_lo = value - centers[static_cast<std::size_t>(lo)];
    double d_hi = centers[static_cast<std::size_t>(hi)] - value;
    return (d_lo <= d_hi) ? lo : hi;
}

}  // namespace

BeamModel cluster_beams(const PointCloud& cloud, int k, std::uint64_t /*seed*/, int max_iter, double tol) {
    require(!cloud.points.empty(), "cluster_beams: empty cloud");
    require(k >= 1, "cluster_beams: k must be >= 1");
    require(max_iter >= 1, "cluster_beams: max_iter must be >= 1");
    require(tol >= 0.0, "cluster_beams: tol must be >= 0");

    std::size_t n = cloud.points.size();
    std::vector<double> phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = to_spherical(cloud.points[i]).phi;

    std::vector<double> sorted_phi = phi;
    std::sort(sorted_phi.begin(), sorted_phi.end());
    std::vector<double> distinct = sorted_phi;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    require(static_cast<std::size_t>(k) <= distinct.size(),
            "cluster_beams: k exceeds the number of distinct inclination values");

    std::vector<double> centers = quantile_init(sorted_phi, k);
    if (std::adjacent_find(centers.begin(), centers.end()) != centers.end())
        centers = quantile_init(distinct, k);

    std::vector<int> assignment(n, 0);
    std::vector<double> sums(static_cast<std::size_t>(k));
    std::vector<std::size_t> counts(static_cast<std::size_t>(k));
    for (int iter = 0; iter < max_iter; ++iter) {
        std::fill(sums.begin(), sums.end(), 0.0);
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            int a = nearest_center(centers, phi[i]);
            assignment[i] = a;
            sums[static_cast<std::size_t>(a)] += phi[i];
            counts[static_cast<std::size_t>(a)] += 1;
        }
        double movement = 0.0;
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] == 0) continue;  // keep the previous center
            double updated = sums[static_cast<std::size_t>(c)] / static_cast<double>(counts[static_cast<std::size_t>(c)]);
            movement = std::max(movement, std::abs(updated - centers[static_cast<std::size_t>(c)]));
            centers[static_cast<std::size_t>(c)] = updated;
        }
        // Means of interval cells cannot reorder in 1-D, but make it explicit.
        std::sort(centers.begin(), centers.end());
        if (movement < tol) break;
    }

    BeamModel model;
    model.k = k;
    model.centers = centers;
    model.assignment.resize(n);
    model.inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        int a = nearest_center(centers, phi[i]);
        model.assignment[i] = a;
        double d = phi[i] - centers[static_cast<std::size_t>(a)];
        model.inertia += d * d;
    }
    return model;
}

std::vector<int> select_beams(const BeamModel& model, int target) {
    require(target >= 1 && target <= model.k, "select_beams: target out of range [1, k]");
    std::vector<int> kept(static_cast<std::size_t>(target));
    for (int j = 0; j < target; ++j)
        kept[static_cast<std::size_t>(j)] =
            static_cast<int>(static_cast<std::int64_t>(j) * model.k / target);
    return kept;
}

PseudoCloud downsample(const PointCloud& cloud, const BeamModel& model, int target) {
    require(model.assignment.size() == cloud.points.size(), "downsample: model does not cover the cloud");
    std::vector<int> kept = select_beams(model, target);
    std::vector<char> keep_beam(static_cast<std::size_t>(model.k), 0);
    for (int b : kept) keep_beam[static_cast<std::size_t>(b)] = 1;

    PseudoCloud out;
    out.kept_beams = kept;
    out.cloud.frame_id = cloud.frame_id;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        int beam = model.assignment[i];
        if (!keep_beam[static_cast<std::size_t>(beam)]) continue;
        out.cloud.points.push_back(cloud.points[i]);
        out.cloud.beam_labels.push_back(beam);
    }
    return out;
}

PseudoCloud generate_pseudo_low_beam(const PointCloud& cloud, int source_beams, int target_beams,
                                     std::uint64_t seed) {
    require(target_beams >= 1, "generate_pseudo_low_beam: target_beams must be >= 1");
    require(source_beams >= target_beams, "generate_pseudo_low_beam: source_beams must be >= target_beams");
    BeamModel model = cluster_beams(cloud, source_beams, seed);
    return downsample(cloud, model, target_beams);
}

}  // namespace bevdistill
