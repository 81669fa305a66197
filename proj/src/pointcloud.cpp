#include "bevdistill/pointcloud.hpp"

#include <algorithm>
#include <cmath>

#include "bevdistill/common.hpp"
#include "bevdistill/fileio.hpp"

namespace bevdistill {

SphericalCoord to_spherical(const Point& p) {
    SphericalCoord s;
    double rho = std::sqrt(p.x * p.x + p.y * p.y);
    s.r = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
    if (rho == 0.0) {
        s.phi = (p.z > 0.0) ? M_PI / 2 : (p.z < 0.0) ? -M_PI / 2 : 0.0;
        s.theta = 0.0;
        return s;
    }
    s.phi = std::atan2(p.z, rho);
    s.theta = std::asin(std::clamp(p.y / rho, -1.0, 1.0));
    return s;
}

void validate_cloud(const PointCloud& cloud, int beam_count) {
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        const Point& p = cloud.points[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z) || !std::isfinite(p.intensity))
            throw std::invalid_argument("point " + std::to_string(i) + ": non-finite value");
        if (p.intensity < 0.0 || p.intensity > 1.0)
            throw std::invalid_argument("point " + std::to_string(i) + ": intensity outside [0,1]");
    }
    if (!cloud.beam_labels.empty()) {
        if (cloud.beam_labels.size() != cloud.points.size())
            throw std::invalid_argument("beam label count does not match point count");
        for (std::size_t i = 0; i < cloud.beam_labels.size(); ++i) {
            int label = cloud.beam_labels[i];
            if (label < 0 || (beam_count >= 0 && label >= beam_count))
                throw std::invalid_argument("point " + std::to_string(i) + ": beam label out of range");
        }
    }
}

PointCloud load_frame(const std::filesystem::path& path) {
    std::string bytes = read_file_bytes(path);
    if (bytes.size() % 16 != 0)
        throw IoError(path.string() + ": length " + std::to_string(bytes.size()) + " is not a multiple of 16");
    PointCloud cloud;
    cloud.frame_id = path.stem().string();
    std::size_t n = bytes.size() / 16;
    cloud.points.reserve(n);
    const auto* raw = reinterpret_cast<const unsigned char*>(bytes.data());
    for (std::size_t i = 0; i < n; ++i) {
        Point p;
        p.x = get_f32_le(raw + 16 * i);
        p.y = get_f32_le(raw + 16 * i + 4);
        p.z = get_f32_le(raw + 16 * i + 8);
        p.intensity = get_f32_le(raw + 16 * i + 12);
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z) || !std::isfinite(p.intensity))
            throw IoError(path.string() + ": non-finite value in record " + std::to_string(i));
        cloud.points.push_back(p);
    }
    return cloud;
}

void write_frame(const PointCloud& cloud, const std::filesystem::path& path) {
    validate_cloud(cloud);
    std::string bytes;
    bytes.reserve(cloud.points.size() * 16);
    for (const Point& p : cloud.points) {
        put_f32_le(bytes, static_cast<float>(p.x));
        put_f32_le(bytes, static_cast<float>(p.y));
        put_f32_le(bytes, static_cast<float>(p.z));
        put_f32_le(bytes, static_cast<float>(p.intensity));
    }
    write_file_atomic(path, bytes);
}

}  // namespace bevdistill
