#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace bevdistill {

inline constexpr std::array<std::string_view, 3> kClassNames{"vehicle", "pedestrian", "cyclist"};

int class_id_from_name(std::string_view name);
std::string_view class_name(int class_id);

// Yaw-rotated 3D box. `l` is the extent along the heading direction, `w`
// across it, `h` vertical. heading in (-pi, pi].
struct BoxLabel {
    int class_id = 0;
    double cx = 0.0, cy = 0.0, cz = 0.0;
    double l = 0.0, w = 0.0, h = 0.0;
    double heading = 0.0;
};

void validate_box(const BoxLabel& box);

// BEV footprint corners, counterclockwise.
std::array<std::array<double, 2>, 4> bev_corners(const BoxLabel& box);

// Closed point-in-footprint test: |u| <= l/2 and |v| <= w/2 in the box frame.
bool bev_contains(const BoxLabel& box, double x, double y);

// Label sidecar format: JSON array of objects
//   {"class": <name>, "cx","cy","cz","l","w","h","heading"}
// in meters / radians, same frame as the point cloud.
std::vector<BoxLabel> load_labels(const std::filesystem::path& path);
void write_labels(const std::vector<BoxLabel>& boxes, const std::filesystem::path& path);

}  // namespace bevdistill
