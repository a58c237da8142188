#include "mlmap/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mlmap/errors.hpp"
#include "mlmap/map_io.hpp"
#include "mlmap/pipeline.hpp"
#include "mlmap/synth.hpp"

namespace mlmap {

namespace fs = std::filesystem;

namespace {

RunConfig resolve_config(const std::string& config_path, const std::string& dataset) {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (!dataset.empty()) cfg.dataset_root = dataset;
    if (cfg.dataset_root.empty()) throw ConfigError("no dataset root given (--dataset or config)");
    cfg.validate();
    return cfg;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write file: " + path.string());
    out << text;
    if (!out) throw IoError("failed writing file: " + path.string());
}

int cmd_label(const std::string& config_path, const std::string& dataset,
              const std::string& out_dir) {
    const RunConfig cfg = resolve_config(config_path, dataset);
    const std::vector<ScanRecord> records = load_dataset(cfg.dataset_root, cfg);
    const auto labels = run_labeling(records, cfg);
    fs::create_directories(fs::path(out_dir) / "labels");
    std::size_t written = 0;
    for (std::size_t f = 0; f < records.size(); ++f) {
        if (!labels[f]) continue;
        save_pgm(*labels[f],
                 fs::path(out_dir) / "labels" / (frame_name(records[f].frame_id) + ".pgm"));
        ++written;
    }
    std::cout << "labeled " << written << " of " << records.size() << " frames -> " << out_dir
              << "/labels\n";
    return 0;
}

int cmd_map(const std::string& config_path, const std::string& dataset,
            const std::string& out_dir) {
    const RunConfig cfg = resolve_config(config_path, dataset);
    const std::vector<ScanRecord> records = load_dataset(cfg.dataset_root, cfg);
    const MappingResult result = run_mapping(records, cfg, &std::cout);

    fs::create_directories(out_dir);
    save_grid(result.semantic.grid(), fs::path(out_dir) / "semantic.mlmap");
    save_grid(result.trav.grid(), fs::path(out_dir) / "traversability.mlmap");
    if (result.gaussian) save_grid(result.gaussian->grid(), fs::path(out_dir) / "gaussian.mlmap");
    write_text(fs::path(out_dir) / "mapping_summary.txt", result.summary_text());
    std::cout << result.summary_text();
    return 0;
}

int cmd_eval(const std::string& config_path, const std::string& dataset,
             const std::string& map_path, const std::string& pred_labels_dir,
             const std::string& out_dir) {
    const RunConfig cfg = resolve_config(config_path, dataset);
    const std::vector<ScanRecord> records = load_dataset(cfg.dataset_root, cfg);

    std::vector<std::optional<Raster>> gt(records.size());
    for (std::size_t f = 0; f < records.size(); ++f)
        gt[f] = load_gt_labels(cfg.dataset_root, records[f].frame_id);

    EvalReport report;
    if (!map_path.empty()) {
        const LoadedGrid loaded = load_grid(map_path);
        if (loaded.kind != LayerKind::traversability)
            throw ConfigError("eval: " + map_path + " is not a traversability map");
        TraversabilityLayer trav(cfg.trav, loaded.traversability().geometry());
        trav.grid() = loaded.traversability();
        report = evaluate_map_projection(trav, records, gt, cfg);
    } else if (!pred_labels_dir.empty()) {
        std::vector<std::optional<Raster>> pred(records.size());
        for (std::size_t f = 0; f < records.size(); ++f) {
            const fs::path p =
                fs::path(pred_labels_dir) / (frame_name(records[f].frame_id) + ".pgm");
            if (fs::exists(p)) pred[f] = load_pgm(p, RasterKind::binary);
        }
        report = evaluate_rasters(pred, gt, 2);
    } else {
        throw ConfigError("eval: need --map or --pred-labels");
    }

    std::cout << report.to_text();
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_text(fs::path(out_dir) / "metrics.txt", report.to_text());
        write_text(fs::path(out_dir) / "metrics.csv", report.to_csv());
    }
    return 0;
}

// exports "x y z value variance" rows for external visualization
int cmd_export(const std::string& map_path, const std::string& out_path,
               const std::string& config_path) {
    const RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    const LoadedGrid loaded = load_grid(map_path);
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write file: " + out_path);
    out.precision(10);
    out << "x y z value variance\n";

    auto emit = [&](const auto& grid, auto&& value_variance) {
        for (const CellCoord& c : grid.sorted_coords()) {
            const Point3 p = grid.center_of(c);
            const auto [value, variance] = value_variance(*grid.find(c));
            out << p.x << ' ' << p.y << ' ' << p.z << ' ' << value << ' ' << variance << '\n';
        }
    };

    switch (loaded.kind) {
        case LayerKind::semantic: {
            SemanticConfig sem_cfg = cfg.semantic;
            const auto& grid = loaded.semantic();
            SemanticLayer layer(
                [&] {
                    for (const auto& [c, cell] : grid) {
                        if (static_cast<int>(cell.alpha.size()) != sem_cfg.num_classes)
                            return SemanticConfig::uniform(static_cast<int>(cell.alpha.size()),
                                                           0.001, {0});
                        break;
                    }
                    return sem_cfg;
                }(),
                grid.geometry());
            emit(grid, [&](const DirichletCell& cell) {
                const SemanticEstimate est = layer.query(cell);
                return std::pair<double, double>(
                    est.map_class, est.variance[static_cast<std::size_t>(est.map_class)]);
            });
            break;
        }
        case LayerKind::traversability:
            emit(loaded.traversability(), [](const BetaCell& cell) {
                const BetaEstimate est = TraversabilityLayer::query(cell);
                return std::pair<double, double>(est.mean, est.variance);
            });
            break;
        case LayerKind::gaussian: {
            GaussianLayer layer(cfg.gaussian, loaded.gaussian().geometry());
            emit(loaded.gaussian(), [&](const GaussianCell& cell) {
                const GaussianEstimate est = layer.query(cell);
                return std::pair<double, double>(est.mean, est.variance);
            });
            break;
        }
    }
    if (!out) throw IoError("failed writing file: " + out_path);
    std::cout << "exported " << map_path << " -> " << out_path << "\n";
    return 0;
}

int cmd_synth(const std::string& out_dir, int frames, int width, int height, double sem_acc,
              double trav_acc, std::uint64_t seed, bool no_scalars) {
    SynthConfig cfg;
    cfg.frames = frames;
    cfg.width = width;
    cfg.height = height;
    cfg.semantic_accuracy = sem_acc;
    cfg.trav_accuracy = trav_acc;
    cfg.seed = seed;
    cfg.with_scalars = !no_scalars;
    write_synth_dataset(cfg, out_dir);
    std::cout << "wrote synthetic sequence (" << frames << " frames) -> " << out_dir << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"mlmap: multi-layer Bayesian traversability mapping"};
    app.require_subcommand(1);

    std::string config_path, dataset, out_dir, map_path, pred_labels_dir, out_path;

    auto* label = app.add_subcommand("label", "generate traversability labels from geometry");
    label->add_option("--config", config_path, "run configuration file");
    label->add_option("--dataset", dataset, "dataset root directory");
    label->add_option("--out", out_dir, "output directory")->required();

    auto* map = app.add_subcommand("map", "build the multi-layer map from a sequence");
    map->add_option("--config", config_path, "run configuration file");
    map->add_option("--dataset", dataset, "dataset root directory");
    map->add_option("--out", out_dir, "output directory")->required();

    auto* eval = app.add_subcommand("eval", "evaluate against ground-truth label rasters");
    eval->add_option("--config", config_path, "run configuration file");
    eval->add_option("--dataset", dataset, "dataset root directory");
    eval->add_option("--map", map_path, "traversability map file to project");
    eval->add_option("--pred-labels", pred_labels_dir, "directory of predicted label rasters");
    eval->add_option("--out", out_dir, "report output directory");

    auto* exp = app.add_subcommand("export", "export a map file to CSV (x y z value variance)");
    exp->add_option("--map", map_path, "map file")->required();
    exp->add_option("--out", out_path, "output CSV path")->required();
    exp->add_option("--config", config_path, "run configuration file");

    int frames = 30, width = 64, height = 48;
    double sem_acc = 0.95, trav_acc = 0.75;
    std::uint64_t seed = 1;
    bool no_scalars = false;
    auto* synth = app.add_subcommand("synth", "generate a synthetic corridor sequence");
    synth->add_option("--out", out_dir, "output dataset directory")->required();
    synth->add_option("--frames", frames, "number of frames");
    synth->add_option("--width", width, "raster width");
    synth->add_option("--height", height, "raster height");
    synth->add_option("--semantic-accuracy", sem_acc, "semantic raster accuracy");
    synth->add_option("--trav-accuracy", trav_acc, "traversability raster accuracy");
    synth->add_option("--seed", seed, "random seed");
    synth->add_flag("--no-scalars", no_scalars, "skip scalar (friction) samples");

    try {
        app.parse(argc, argv);
        if (label->parsed()) return cmd_label(config_path, dataset, out_dir);
        if (map->parsed()) return cmd_map(config_path, dataset, out_dir);
        if (eval->parsed())
            return cmd_eval(config_path, dataset, map_path, pred_labels_dir, out_dir);
        if (exp->parsed()) return cmd_export(map_path, out_path, config_path);
        if (synth->parsed())
            return cmd_synth(out_dir, frames, width, height, sem_acc, trav_acc, seed, no_scalars);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // --help exits cleanly
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace mlmap
