#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "bevdistill/labels.hpp"
#include "bevdistill/pointcloud.hpp"

namespace bevdistill {

// Flat-ground-plus-yawed-cuboid world, described in world coordinates: the
// ground plane sits at z = ground_z and the sensor at (0, 0, ground_z +
// sensor_height). Emitted clouds and labels are translated into the sensor
// frame (sensor at the origin), matching the convention of real LiDAR dumps,
// so beam inclinations measured about the cloud origin equal the ray angles
// exactly.
struct SceneSpec {
    double sensor_height = 1.73;
    double ground_z = 0.0;
    std::vector<BoxLabel> boxes;  // world frame
    int beams = 64;
    double phi_min = -0.40;  // radians, inclusive linspace over [phi_min, phi_max]
    double phi_max = -0.02;
    double azimuth_step = 0.0175;  // full sweep over [-pi, pi)
    double noise_sigma = 0.0;      // range noise, truncated at +-3 sigma
    std::uint64_t seed = 0;
};

void validate_scene(const SceneSpec& spec);

struct SimulatedFrame {
    PointCloud cloud;              // sensor frame, ground-truth beam labels
    std::vector<BoxLabel> labels;  // sensor frame
};

// Casts one ray per (beam, azimuth), beam-major. Each ray returns the nearest
// intersection with a box or the ground plane, or nothing. Range noise is one
// truncated normal draw per hit, in emission order. Intensity is 0.5 for
// ground and 0.9 for box hits; the beam label is the beam index.
SimulatedFrame simulate(const SceneSpec& spec);

struct DatasetTemplate {
    SceneSpec scene;  // scene.boxes ignored; boxes are randomized per frame
    int min_boxes = 1;
    int max_boxes = 6;
};

// Writes frames/<id>.bin, labels/<id>.json and manifest.json under out_dir.
// Frame seeds derive from `seed` via mix64(seed, frame_index); box counts,
// classes and poses are uniform draws documented in the manifest.
void make_dataset(const DatasetTemplate& tmpl, int n_frames, std::uint64_t seed,
                  const std::filesystem::path& out_dir);

}  // namespace bevdistill
