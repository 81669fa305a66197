#include "bevdistill/dataset.hpp"

#include <json.hpp>

#include "bevdistill/common.hpp"
#include "bevdistill/fileio.hpp"

namespace bevdistill {

DatasetIndex load_dataset(const std::filesystem::path& root) {
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(read_file_bytes(root / "manifest.json"));
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError((root / "manifest.json").string() + ": " + e.what());
    }
    int version = manifest.value("schema_version", 0);
    if (version != 1)
        throw std::invalid_argument("unsupported dataset schema_version " + std::to_string(version));

    DatasetIndex index;
    index.root = root;
    index.seed = manifest.value("seed", std::uint64_t{0});
    index.beams = manifest.value("beams", 0);
    for (const auto& entry : manifest.at("frames")) {
        DatasetIndex::FrameEntry frame;
        frame.id = entry.at("id").get<std::string>();
        frame.beams = entry.value("beams", index.beams);
        frame.seed = entry.value("seed", std::uint64_t{0});
        index.frames.push_back(frame);
    }
    require(!index.frames.empty(), "dataset has no frames");
    return index;
}

}  // namespace bevdistill
