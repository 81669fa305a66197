#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace bevdistill {

// Sensor-centered Cartesian LiDAR return. Coordinates in meters, intensity in [0, 1].
struct Point {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double intensity = 0.0;
};

// r >= 0; phi (inclination above the sensor's horizontal plane) and theta
// (azimuth) both in [-pi/2, pi/2].
//
// Note on theta: the azimuth is arcsin(y / sqrt(x^2 + y^2)), which folds the
// forward and backward hemispheres together. Nothing downstream consumes
// theta (beam clustering uses phi only, and downsampling keeps or drops whole
// points rather than reconstructing them from angles), so the restricted
// range is harmless.
struct SphericalCoord {
    double r = 0.0;
    double phi = 0.0;
    double theta = 0.0;
};

struct PointCloud {
    std::vector<Point> points;
    // Empty, or one beam index per point.
    std::vector<int> beam_labels;
    std::string frame_id;

    bool has_beam_labels() const { return !beam_labels.empty(); }
    std::size_t size() const { return points.size(); }
};

// Cartesian -> spherical. Total on finite inputs:
//   r = sqrt(x^2+y^2+z^2), phi = arctan(z / sqrt(x^2+y^2)), theta = arcsin(y / sqrt(x^2+y^2))
// On the vertical axis (x^2+y^2 = 0): phi = sign(z) * pi/2 and theta = 0, so
// the origin maps to (0, 0, 0).
SphericalCoord to_spherical(const Point& p);

// Throws std::invalid_argument naming the first violation: non-finite
// coordinate, intensity outside [0,1], or misaligned/out-of-range beam labels.
void validate_cloud(const PointCloud& cloud, int beam_count = -1);

// Binary frame format: consecutive 16-byte records, each four little-endian
// float32 values (x, y, z, intensity), no header. Order is preserved.
PointCloud load_frame(const std::filesystem::path& path);
void write_frame(const PointCloud& cloud, const std::filesystem::path& path);

}  // namespace bevdistill
