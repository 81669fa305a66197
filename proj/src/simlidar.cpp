#include "bevdistill/simlidar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "bevdistill/common.hpp"
#include "bevdistill/dataset.hpp"
#include "bevdistill/fileio.hpp"

namespace bevdistill {

namespace {

// Per-class BEV size priors in meters (l, w, h); poses and counts are drawn
// uniformly from the ranges below and echoed into the manifest.
constexpr double kSizePriors[3][3] = {
    {4.5, 1.9, 1.6},  // vehicle
    {0.8, 0.8, 1.7},  // pedestrian
    {1.8, 0.8, 1.7},  // cyclist
};
constexpr double kSizeJitter = 0.10;       // each dimension scaled by U[0.9, 1.1]
constexpr double kBoxCxRange[2] = {8.0, 45.0};
constexpr double kBoxCyRange[2] = {-18.0, 18.0};
constexpr double kMinBoxSpacing = 5.0;     // BEV center distance between boxes

struct Ray {
    double ox, oy, oz;
    double dx, dy, dz;
};

// Slab test in the box's yaw-rotated frame. Returns the smallest positive
// hit parameter, or +inf on miss.
double intersect_box(const Ray& ray, const BoxLabel& box) {
    double c = std::cos(box.heading), s = std::sin(box.heading);
    double ox = ray.ox - box.cx, oy = ray.oy - box.cy, oz = ray.oz - box.cz;
    double o[3] = {c * ox + s * oy, -s * ox + c * oy, oz};
    double d[3] = {c * ray.dx + s * ray.dy, -s * ray.dx + c * ray.dy, ray.dz};
    double half[3] = {box.l / 2.0, box.w / 2.0, box.h / 2.0};

    double t_enter = -std::numeric_limits<double>::infinity();
    double t_exit = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 3; ++a) {
        if (std::abs(d[a]) < 1e-12) {
            if (std::abs(o[a]) > half[a]) return std::numeric_limits<double>::infinity();
            continue;
        }
        double t1 = (-half[a] - o[a]) / d[a];
        double t2 = (half[a] - o[a]) / d[a];
        if (t1 > t2) std::swap(t1, t2);
        t_enter = std::max(t_enter, t1);
        t_exit = std::min(t_exit, t2);
    }
    if (t_exit < t_enter || t_exit < 1e-9) return std::numeric_limits<double>::infinity();
    return (t_enter > 1e-9) ? t_enter : std::numeric_limits<double>::infinity();
}

}  // namespace

void validate_scene(const SceneSpec& spec) {
    require(std::isfinite(spec.sensor_height) && std::isfinite(spec.ground_z), "scene: non-finite geometry");
    require(spec.beams >= 1, "scene: beams must be >= 1");
    require(spec.phi_min < spec.phi_max, "scene: phi_min must be < phi_max");
    require(spec.azimuth_step > 0.0, "scene: azimuth_step must be > 0");
    require(spec.noise_sigma >= 0.0, "scene: noise_sigma must be >= 0");
    for (const BoxLabel& box : spec.boxes) validate_box(box);
}

SimulatedFrame simulate(const SceneSpec& spec) {
    validate_scene(spec);
    Rng rng(spec.seed);

    double sensor_z = spec.ground_z + spec.sensor_height;
    int azimuth_count = static_cast<int>(std::floor(2.0 * M_PI / spec.azimuth_step));

    SimulatedFrame frame;
    for (int b = 0; b < spec.beams; ++b) {
        double phi = (spec.beams == 1)
                         ? 0.5 * (spec.phi_min + spec.phi_max)
                         : spec.phi_min + (spec.phi_max - spec.phi_min) * b / (spec.beams - 1);
        double cp = std::cos(phi), sp = std::sin(phi);
        for (int a = 0; a < azimuth_count; ++a) {
            double theta = -M_PI + a * spec.azimuth_step;
            Ray ray{0.0, 0.0, sensor_z, cp * std::cos(theta), cp * std::sin(theta), sp};

            double best_t = std::numeric_limits<double>::infinity();
            bool hit_box = false;
            for (const BoxLabel& box : spec.boxes) {
                double t = intersect_box(ray, box);
                if (t < best_t) {
                    best_t = t;
                    hit_box = true;
                }
            }
            if (ray.dz < 0.0) {
                double t_ground = (spec.ground_z - ray.oz) / ray.dz;
                if (t_ground > 1e-9 && t_ground < best_t) {
                    best_t = t_ground;
                    hit_box = false;
                }
            }
            if (!std::isfinite(best_t)) continue;

            if (spec.noise_sigma > 0.0) {
                double noise = std::clamp(rng.next_normal(), -3.0, 3.0) * spec.noise_sigma;
                best_t = std::max(best_t + noise, 1e-6);
            }
            Point p;
            p.x = ray.ox + best_t * ray.dx;
            p.y = ray.oy + best_t * ray.dy;
            p.z = ray.oz + best_t * ray.dz - sensor_z;  // world -> sensor frame
            p.intensity = hit_box ? 0.9 : 0.5;
            frame.cloud.points.push_back(p);
            frame.cloud.beam_labels.push_back(b);
        }
    }

    frame.labels = spec.boxes;
    for (BoxLabel& box : frame.labels) box.cz -= sensor_z;
    return frame;
}

void make_dataset(const DatasetTemplate& tmpl, int n_frames, std::uint64_t seed,
                  const std::filesystem::path& out_dir) {
    require(n_frames >= 1, "make_dataset: n_frames must be >= 1");
    require(tmpl.min_boxes >= 0 && tmpl.max_boxes >= tmpl.min_boxes, "make_dataset: bad box count range");
    validate_scene(tmpl.scene);

    std::error_code ec;
    std::filesystem::create_directories(out_dir / "frames", ec);
    std::filesystem::create_directories(out_dir / "labels", ec);
    if (ec) throw IoError("cannot create dataset directories under " + out_dir.string());

    nlohmann::json frames_meta = nlohmann::json::array();
    for (int i = 0; i < n_frames; ++i) {
        std::uint64_t frame_seed = mix64(seed, static_cast<std::uint64_t>(i));
        Rng rng(frame_seed);

        SceneSpec scene = tmpl.scene;
        scene.seed = mix64(frame_seed, 0);
        scene.boxes.clear();
        int n_boxes = tmpl.min_boxes +
                      static_cast<int>(rng.next_below(static_cast<std::uint64_t>(tmpl.max_boxes - tmpl.min_boxes + 1)));
        for (int bi = 0; bi < n_boxes; ++bi) {
            BoxLabel box;
            // Up to 16 attempts to respect the minimum spacing, then give up
            // on this box; keeps generation total and deterministic.
            bool placed = false;
            for (int attempt = 0; attempt < 16 && !placed; ++attempt) {
                box.class_id = static_cast<int>(rng.next_below(3));
                const double* prior = kSizePriors[box.class_id];
                box.l = prior[0] * rng.uniform(1.0 - kSizeJitter, 1.0 + kSizeJitter);
                box.w = prior[1] * rng.uniform(1.0 - kSizeJitter, 1.0 + kSizeJitter);
                box.h = prior[2] * rng.uniform(1.0 - kSizeJitter, 1.0 + kSizeJitter);
                box.cx = rng.uniform(kBoxCxRange[0], kBoxCxRange[1]);
                box.cy = rng.uniform(kBoxCyRange[0], kBoxCyRange[1]);
                box.cz = tmpl.scene.ground_z + box.h / 2.0;
                double u = rng.next_double();
                box.heading = -M_PI + 2.0 * M_PI * (1.0 - u);  // (-pi, pi]
                placed = true;
                for (const BoxLabel& other : scene.boxes) {
                    double dx = box.cx - other.cx, dy = box.cy - other.cy;
                    if (dx * dx + dy * dy < kMinBoxSpacing * kMinBoxSpacing) {
                        placed = false;
                        break;
                    }
                }
            }
            if (placed) scene.boxes.push_back(box);
        }

        SimulatedFrame frame = simulate(scene);
        char id[16];
        std::snprintf(id, sizeof(id), "%06d", i);
        frame.cloud.frame_id = id;
        write_frame(frame.cloud, out_dir / "frames" / (std::string(id) + ".bin"));
        write_labels(frame.labels, out_dir / "labels" / (std::string(id) + ".json"));
        frames_meta.push_back({{"id", id}, {"beams", scene.beams}, {"seed", frame_seed}});
    }

    nlohmann::json manifest = {
        {"schema_version", 1},
        {"seed", seed},
        {"n_frames", n_frames},
        {"beams", tmpl.scene.beams},
        {"seed_split", "frame_seed = splitmix64_finalize(seed + (index + 1) * 0x9E3779B97F4A7C15)"},
        {"scene",
         {{"sensor_height", tmpl.scene.sensor_height},
          {"ground_z", tmpl.scene.ground_z},
          {"beams", tmpl.scene.beams},
          {"phi_min", tmpl.scene.phi_min},
          {"phi_max", tmpl.scene.phi_max},
          {"azimuth_step", tmpl.scene.azimuth_step},
          {"noise_sigma", tmpl.scene.noise_sigma}}},
        {"box_generation",
         {{"min_boxes", tmpl.min_boxes},
          {"max_boxes", tmpl.max_boxes},
          {"cx_range", {kBoxCxRange[0], kBoxCxRange[1]}},
          {"cy_range", {kBoxCyRange[0], kBoxCyRange[1]}},
          {"size_jitter", kSizeJitter},
          {"min_spacing", kMinBoxSpacing},
          {"size_priors",
           {{"vehicle", {kSizePriors[0][0], kSizePriors[0][1], kSizePriors[0][2]}},
            {"pedestrian", {kSizePriors[1][0], kSizePriors[1][1], kSizePriors[1][2]}},
            {"cyclist", {kSizePriors[2][0], kSizePriors[2][1], kSizePriors[2][2]}}}}}},
        {"class_names", {"vehicle", "pedestrian", "cyclist"}},
        {"frames", frames_meta},
    };
    write_file_atomic(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace bevdistill
