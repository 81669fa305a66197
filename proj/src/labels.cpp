#include "bevdistill/labels.hpp"

#include <cmath>

#include <json.hpp>

#include "bevdistill/common.hpp"
#include "bevdistill/fileio.hpp"

namespace bevdistill {

int class_id_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kClassNames.size(); ++i)
        if (kClassNames[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown class name: " + std::string(name));
}

std::string_view class_name(int class_id) {
    require(class_id >= 0 && class_id < static_cast<int>(kClassNames.size()),
            "class id out of range: " + std::to_string(class_id));
    return kClassNames[static_cast<std::size_t>(class_id)];
}

void validate_box(const BoxLabel& box) {
    for (double v : {box.cx, box.cy, box.cz, box.l, box.w, box.h, box.heading})
        require(std::isfinite(v), "box has non-finite field");
    require(box.l > 0.0 && box.w > 0.0 && box.h > 0.0, "box dimensions must be strictly positive");
    require(box.heading > -M_PI - 1e-12 && box.heading <= M_PI + 1e-12, "heading outside (-pi, pi]");
    class_name(box.class_id);
}

std::array<std::array<double, 2>, 4> bev_corners(const BoxLabel& box) {
    double c = std::cos(box.heading), s = std::sin(box.heading);
    double hl = box.l / 2.0, hw = box.w / 2.0;
    // Box-frame corners (+l/2,+w/2), (-l/2,+w/2), (-l/2,-w/2), (+l/2,-w/2).
    std::array<std::array<double, 2>, 4> local{{{hl, hw}, {-hl, hw}, {-hl, -hw}, {hl, -hw}}};
    std::array<std::array<double, 2>, 4> out{};
    for (int i = 0; i < 4; ++i) {
        out[i][0] = box.cx + c * local[i][0] - s * local[i][1];
        out[i][1] = box.cy + s * local[i][0] + c * local[i][1];
    }
    return out;
}

bool bev_contains(const BoxLabel& box, double x, double y) {
    double c = std::cos(box.heading), s = std::sin(box.heading);
    double dx = x - box.cx, dy = y - box.cy;
    double u = c * dx + s * dy;
    double v = -s * dx + c * dy;
    return std::abs(u) <= box.l / 2.0 && std::abs(v) <= box.w / 2.0;
}

std::vector<BoxLabel> load_labels(const std::filesystem::path& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file_bytes(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(path.string() + ": " + e.what());
    }
    if (!doc.is_array()) throw IoError(path.string() + ": label sidecar must be a JSON array");
    std::vector<BoxLabel> boxes;
    boxes.reserve(doc.size());
    for (const auto& item : doc) {
        BoxLabel box;
        box.class_id = class_id_from_name(item.at("class").get<std::string>());
        box.cx = item.at("cx").get<double>();
        box.cy = item.at("cy").get<double>();
        box.cz = item.at("cz").get<double>();
        box.l = item.at("l").get<double>();
        box.w = item.at("w").get<double>();
        box.h = item.at("h").get<double>();
        box.heading = item.at("heading").get<double>();
        validate_box(box);
        boxes.push_back(box);
    }
    return boxes;
}

void write_labels(const std::vector<BoxLabel>& boxes, const std::filesystem::path& path) {
    nlohmann::json doc = nlohmann::json::array();
    for (const BoxLabel& box : boxes) {
        validate_box(box);
        doc.push_back({{"class", std::string(class_name(box.class_id))},
                       {"cx", box.cx},
                       {"cy", box.cy},
                       {"cz", box.cz},
                       {"l", box.l},
                       {"w", box.w},
                       {"h", box.h},
                       {"heading", box.heading}});
    }
    write_file_atomic(path, doc.dump(2) + "\n");
}

}  // namespace bevdistill
