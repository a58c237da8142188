#include "mlmap/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "mlmap/errors.hpp"

namespace mlmap {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

class KeyValueMap {
public:
    KeyValueMap(const std::string& text, const std::string& source) : source_(source) {
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError(source + ":" + std::to_string(line_no) + ": expected key = value");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty())
                throw ConfigError(source + ":" + std::to_string(line_no) + ": empty key");
            values_[key] = value;
        }
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    double get_double(const std::string& key, double fallback) const {
        auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        return parse_double(key, it->second);
    }

    std::int64_t get_int(const std::string& key, std::int64_t fallback) const {
        auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        std::int64_t out{};
        const auto& s = it->second;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            throw ConfigError(source_ + ": key '" + key + "': not an integer: '" + s + "'");
        return out;
    }

    bool get_bool(const std::string& key, bool fallback) const {
        auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        if (it->second == "true" || it->second == "1") return true;
        if (it->second == "false" || it->second == "0") return false;
        throw ConfigError(source_ + ": key '" + key + "': not a boolean: '" + it->second + "'");
    }

    std::string get_string(const std::string& key, const std::string& fallback) const {
        auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    std::vector<int> get_int_list(const std::string& key, std::vector<int> fallback) const {
        auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        std::vector<int> out;
        std::istringstream in(it->second);
        std::string item;
        while (std::getline(in, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            out.push_back(static_cast<int>(parse_double(key, item)));
        }
        return out;
    }

    std::vector<double> get_double_list(const std::string& key, std::vector<double> fallback) const {
        auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        std::vector<double> out;
        std::istringstream in(it->second);
        std::string item;
        while (std::getline(in, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            out.push_back(parse_double(key, item));
        }
        return out;
    }

private:
    double parse_double(const std::string& key, const std::string& s) const {
        try {
            std::size_t pos = 0;
            const double v = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw ConfigError(source_ + ": key '" + key + "': not a number: '" + s + "'");
        }
    }

    std::string source_;
    std::map<std::string, std::string> values_;
};

}  // namespace

void RunConfig::validate() const {
    try {
        kernel.validate();
        semantic.validate();
        trav.validate();
        labeling.validate();
        if (gaussian_enabled) gaussian.validate();
        if (!(map_resolution > 0.0)) throw std::invalid_argument("map resolution must be > 0");
        if (!map_origin.finite()) throw std::invalid_argument("map origin must be finite");
        if (!(trav_threshold > 0.0 && trav_threshold < 1.0))
            throw std::invalid_argument("traversability threshold must be in (0, 1)");
        if (pixel_stride < 1) throw std::invalid_argument("pixel stride must be >= 1");
        if (max_depth < 0.0) throw std::invalid_argument("max depth must be >= 0");
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

RunConfig parse_config(const std::string& text, const std::string& source_name) {
    const KeyValueMap kv(text, source_name);
    RunConfig cfg;

    cfg.kernel.length_scale = kv.get_double("kernel.length_scale", cfg.kernel.length_scale);
    cfg.kernel.scale = kv.get_double("kernel.scale", cfg.kernel.scale);

    cfg.map_resolution = kv.get_double("map.resolution", cfg.map_resolution);
    const auto origin = kv.get_double_list("map.origin", {cfg.map_origin.x, cfg.map_origin.y,
                                                          cfg.map_origin.z});
    if (origin.size() != 3) throw ConfigError(source_name + ": map.origin needs three values");
    cfg.map_origin = {origin[0], origin[1], origin[2]};

    const int num_classes =
        static_cast<int>(kv.get_int("semantic.num_classes", cfg.semantic.num_classes));
    const double prior = kv.get_double("semantic.prior_alpha", 0.001);
    const auto traversable =
        kv.get_int_list("semantic.traversable_classes", cfg.semantic.traversable_classes);
    cfg.semantic.num_classes = num_classes;
    cfg.semantic.prior_alpha.assign(static_cast<std::size_t>(std::max(num_classes, 0)), prior);
    cfg.semantic.traversable_classes = traversable;

    cfg.trav.prior_alpha = kv.get_double("trav.prior_alpha", cfg.trav.prior_alpha);
    cfg.trav.prior_beta = kv.get_double("trav.prior_beta", cfg.trav.prior_beta);
    cfg.trav.use_pseudo_measurements =
        kv.get_bool("trav.use_pseudo_measurements", cfg.trav.use_pseudo_measurements);
    cfg.trav_threshold = kv.get_double("trav.threshold", cfg.trav_threshold);
    cfg.eval_use_map_estimate = kv.get_bool("eval.use_map_estimate", cfg.eval_use_map_estimate);

    cfg.gaussian_enabled = kv.get_bool("gaussian.enabled", cfg.gaussian_enabled);
    cfg.gaussian.prior_mean = kv.get_double("gaussian.prior_mean", cfg.gaussian.prior_mean);
    cfg.gaussian.obs_variance = kv.get_double("gaussian.obs_variance", cfg.gaussian.obs_variance);
    cfg.gaussian.prior_confidence =
        kv.get_double("gaussian.prior_confidence", cfg.gaussian.prior_confidence);
    cfg.gaussian.d_low = kv.get_double("gaussian.d_low", cfg.gaussian.d_low);
    cfg.gaussian.d_high = kv.get_double("gaussian.d_high", cfg.gaussian.d_high);

    cfg.labeling.w_slope = kv.get_double("labeling.w_slope", cfg.labeling.w_slope);
    cfg.labeling.w_roughness = kv.get_double("labeling.w_roughness", cfg.labeling.w_roughness);
    cfg.labeling.w_step = kv.get_double("labeling.w_step", cfg.labeling.w_step);
    cfg.labeling.slope_critical = kv.get_double("labeling.s_crit", cfg.labeling.slope_critical);
    cfg.labeling.roughness_critical =
        kv.get_double("labeling.r_crit", cfg.labeling.roughness_critical);
    cfg.labeling.step_critical = kv.get_double("labeling.h_crit", cfg.labeling.step_critical);
    cfg.labeling.score_threshold = kv.get_double("labeling.tau", cfg.labeling.score_threshold);
    cfg.labeling.time_window =
        static_cast<int>(kv.get_int("labeling.time_window", cfg.labeling.time_window));
    cfg.labeling.feature_window_radius =
        kv.get_double("labeling.window_radius", cfg.labeling.feature_window_radius);
    cfg.labeling.untraversable_classes =
        kv.get_int_list("labeling.untraversable_classes", cfg.labeling.untraversable_classes);
    cfg.labeling.resolution = kv.get_double("labeling.resolution", cfg.labeling.resolution);

    cfg.pixel_stride = static_cast<int>(kv.get_int("mapping.pixel_stride", cfg.pixel_stride));
    cfg.max_depth = kv.get_double("mapping.max_depth", cfg.max_depth);
    cfg.seed = static_cast<std::uint64_t>(kv.get_int("run.seed", static_cast<std::int64_t>(cfg.seed)));
    cfg.dataset_root = kv.get_string("dataset.root", cfg.dataset_root);

    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path.string());
}

namespace {

void append_list(std::ostream& out, const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
}

}  // namespace

std::string config_to_string(const RunConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "kernel.length_scale = " << cfg.kernel.length_scale << "\n";
    out << "kernel.scale = " << cfg.kernel.scale << "\n";
    out << "map.resolution = " << cfg.map_resolution << "\n";
    out << "map.origin = " << cfg.map_origin.x << "," << cfg.map_origin.y << ","
        << cfg.map_origin.z << "\n";
    out << "semantic.num_classes = " << cfg.semantic.num_classes << "\n";
    out << "semantic.prior_alpha = "
        << (cfg.semantic.prior_alpha.empty() ? 0.001 : cfg.semantic.prior_alpha.front()) << "\n";
    out << "semantic.traversable_classes = ";
    append_list(out, cfg.semantic.traversable_classes);
    out << "\n";
    out << "trav.prior_alpha = " << cfg.trav.prior_alpha << "\n";
    out << "trav.prior_beta = " << cfg.trav.prior_beta << "\n";
    out << "trav.use_pseudo_measurements = "
        << (cfg.trav.use_pseudo_measurements ? "true" : "false") << "\n";
    out << "trav.threshold = " << cfg.trav_threshold << "\n";
    out << "eval.use_map_estimate = " << (cfg.eval_use_map_estimate ? "true" : "false") << "\n";
    out << "gaussian.enabled = " << (cfg.gaussian_enabled ? "true" : "false") << "\n";
    out << "gaussian.prior_mean = " << cfg.gaussian.prior_mean << "\n";
    out << "gaussian.obs_variance = " << cfg.gaussian.obs_variance << "\n";
    out << "gaussian.prior_confidence = " << cfg.gaussian.prior_confidence << "\n";
    out << "gaussian.d_low = " << cfg.gaussian.d_low << "\n";
    out << "gaussian.d_high = " << cfg.gaussian.d_high << "\n";
    out << "labeling.w_slope = " << cfg.labeling.w_slope << "\n";
    out << "labeling.w_roughness = " << cfg.labeling.w_roughness << "\n";
    out << "labeling.w_step = " << cfg.labeling.w_step << "\n";
    out << "labeling.s_crit = " << cfg.labeling.slope_critical << "\n";
    out << "labeling.r_crit = " << cfg.labeling.roughness_critical << "\n";
    out << "labeling.h_crit = " << cfg.labeling.step_critical << "\n";
    out << "labeling.tau = " << cfg.labeling.score_threshold << "\n";
    out << "labeling.time_window = " << cfg.labeling.time_window << "\n";
    out << "labeling.window_radius = " << cfg.labeling.feature_window_radius << "\n";
    out << "labeling.untraversable_classes = ";
    append_list(out, cfg.labeling.untraversable_classes);
    out << "\n";
    out << "labeling.resolution = " << cfg.labeling.resolution << "\n";
    out << "mapping.pixel_stride = " << cfg.pixel_stride << "\n";
    out << "mapping.max_depth = " << cfg.max_depth << "\n";
    out << "run.seed = " << cfg.seed << "\n";
    if (!cfg.dataset_root.empty()) out << "dataset.root = " << cfg.dataset_root << "\n";
    return out.str();
}

void save_config(const RunConfig& cfg, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write config file: " + path.string());
    out << config_to_string(cfg);
    if (!out) throw IoError("failed writing config file: " + path.string());
}

}  // namespace mlmap
