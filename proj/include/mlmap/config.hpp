#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "mlmap/elevation_map.hpp"
#include "mlmap/gaussian_layer.hpp"
#include "mlmap/semantic_layer.hpp"
#include "mlmap/sparse_kernel.hpp"
#include "mlmap/traversability_layer.hpp"

namespace mlmap {

// Every hyperparameter of the pipeline in one place. Defaults follow the
// shipped configuration; see README for the key reference.
struct RunConfig {
    KernelParams kernel{};

    double map_resolution = 0.1;
    Point3 map_origin{};

    SemanticConfig semantic = SemanticConfig::uniform(4, 0.001, {0});
    TravConfig trav{};
    double trav_threshold = 0.5;        // binarization threshold on the posterior
    bool eval_use_map_estimate = false; // threshold the MAP where defined instead of the mean

    bool gaussian_enabled = false;
    GaussianLayerConfig gaussian{};

    TraversabilityLabelConfig labeling{};

    int pixel_stride = 2;      // raster subsampling when turning pixels into training points
    double max_depth = 0.0;    // meters; 0 disables the cap

    std::uint64_t seed = 1;

    std::string dataset_root;  // optional; CLI arguments take precedence

    GridGeometry map_geometry() const { return {map_resolution, map_origin}; }

    void validate() const;  // throws ConfigError
};

// Plain-text "key = value" file with dotted section keys and '#' comments.
RunConfig load_config(const std::filesystem::path& path);

// Parses config text (exposed for tests).
RunConfig parse_config(const std::string& text, const std::string& source_name = "<string>");

// Writes the full key set; load_config(save_config(cfg)) == cfg.
void save_config(const RunConfig& cfg, const std::filesystem::path& path);

std::string config_to_string(const RunConfig& cfg);

}  // namespace mlmap
