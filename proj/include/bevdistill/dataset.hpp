#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bevdistill/labels.hpp"
#include "bevdistill/pointcloud.hpp"

namespace bevdistill {

// On-disk layout: <root>/frames/<id>.bin, <root>/labels/<id>.json,
// <root>/manifest.json.
struct DatasetIndex {
    struct FrameEntry {
        std::string id;
        int beams = 0;
        std::uint64_t seed = 0;
    };

    std::filesystem::path root;
    std::uint64_t seed = 0;
    int beams = 0;
    std::vector<FrameEntry> frames;

    std::filesystem::path frame_path(const std::string& id) const { return root / "frames" / (id + ".bin"); }
    std::filesystem::path label_path(const std::string& id) const { return root / "labels" / (id + ".json"); }
};

DatasetIndex load_dataset(const std::filesystem::path& root);

}  // namespace bevdistill
