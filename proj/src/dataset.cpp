#include "mlmap/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "mlmap/errors.hpp"

namespace mlmap {

namespace fs = std::filesystem;

namespace {

constexpr char kCloudMagic[8] = {'M', 'L', 'C', 'L', 'O', 'U', 'D', '1'};
constexpr std::uint8_t kInvalidPgm = 255;

std::ifstream open_input(const fs::path& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in) throw IoError("cannot open file: " + path.string());
    return in;
}

std::ofstream open_output(const fs::path& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode);
    if (!out) throw IoError("cannot write file: " + path.string());
    return out;
}

[[noreturn]] void parse_error(const fs::path& path, int line, const std::string& what) {
    throw IoError(path.string() + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

std::string frame_name(int frame_id) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%06d", frame_id);
    return buf;
}

std::vector<Pose> load_poses(const fs::path& path) {
    auto in = open_input(path);
    std::vector<Pose> poses;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        double m[12];
        for (int v = 0; v < 12; ++v) {
            if (!(row >> m[v])) parse_error(path, line_no, "expected 12 numbers per pose row");
        }
        double extra;
        if (row >> extra) parse_error(path, line_no, "expected 12 numbers per pose row");
        Pose pose;
        pose.rotation << m[0], m[1], m[2], m[4], m[5], m[6], m[8], m[9], m[10];
        pose.translation << m[3], m[7], m[11];
        if (!pose.is_rigid())
            parse_error(path, line_no, "rotation is not orthonormal with determinant +1");
        poses.push_back(pose);
    }
    return poses;
}

void save_poses(const std::vector<Pose>& poses, const fs::path& path) {
    auto out = open_output(path);
    out.precision(17);
    for (const Pose& p : poses) {
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) out << p.rotation(r, c) << ' ';
            out << p.translation(r) << (r == 2 ? '\n' : ' ');
        }
    }
    if (!out) throw IoError("failed writing poses: " + path.string());
}

std::vector<Point3> load_cloud_xyz(const fs::path& path) {
    auto in = open_input(path);
    std::vector<Point3> cloud;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        Point3 p;
        if (!(row >> p.x >> p.y >> p.z)) parse_error(path, line_no, "expected 3 numbers per point");
        if (!p.finite()) parse_error(path, line_no, "non-finite coordinate");
        cloud.push_back(p);
    }
    return cloud;
}

void save_cloud_xyz(const std::vector<Point3>& cloud, const fs::path& path) {
    auto out = open_output(path);
    out.precision(17);
    for (const Point3& p : cloud) out << p.x << ' ' << p.y << ' ' << p.z << '\n';
    if (!out) throw IoError("failed writing cloud: " + path.string());
}

std::vector<Point3> load_cloud_xyzb(const fs::path& path) {
    auto in = open_input(path, std::ios::binary);
    char magic[8];
    std::uint32_t count = 0, reserved = 0;
    in.read(magic, 8);
    in.read(reinterpret_cast<char*>(&count), 4);
    in.read(reinterpret_cast<char*>(&reserved), 4);
    if (!in || std::memcmp(magic, kCloudMagic, 8) != 0)
        throw IoError(path.string() + ": bad cloud header");
    std::vector<float> raw(static_cast<std::size_t>(count) * 3);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size() * 4));
    if (!in) throw IoError(path.string() + ": truncated cloud payload");
    std::vector<Point3> cloud(count);
    for (std::uint32_t i = 0; i < count; ++i)
        cloud[i] = {raw[3 * i], raw[3 * i + 1], raw[3 * i + 2]};
    return cloud;
}

void save_cloud_xyzb(const std::vector<Point3>& cloud, const fs::path& path) {
    auto out = open_output(path, std::ios::binary);
    const auto count = static_cast<std::uint32_t>(cloud.size());
    const std::uint32_t reserved = 0;
    out.write(kCloudMagic, 8);
    out.write(reinterpret_cast<const char*>(&count), 4);
    out.write(reinterpret_cast<const char*>(&reserved), 4);
    std::vector<float> raw;
    raw.reserve(cloud.size() * 3);
    for (const Point3& p : cloud) {
        raw.push_back(static_cast<float>(p.x));
        raw.push_back(static_cast<float>(p.y));
        raw.push_back(static_cast<float>(p.z));
    }
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size() * 4));
    if (!out) throw IoError("failed writing cloud: " + path.string());
}

Raster load_pgm(const fs::path& path, RasterKind kind) {
    auto in = open_input(path, std::ios::binary);
    std::string magic;
    int width = 0, height = 0, maxval = 0;
    in >> magic >> width >> height >> maxval;
    if (!in || magic != "P5" || maxval != 255 || width <= 0 || height <= 0)
        throw IoError(path.string() + ": not an 8-bit binary PGM");
    in.get();  // single whitespace after the header
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(width) * height);
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!in) throw IoError(path.string() + ": truncated PGM payload");
    Raster raster(width, height, kind);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const std::uint8_t v = bytes[static_cast<std::size_t>(y) * width + x];
            if (v == kInvalidPgm) {
                raster.set_invalid(x, y);
            } else {
                raster.set(x, y, static_cast<float>(v));
            }
        }
    }
    return raster;
}

void save_pgm(const Raster& raster, const fs::path& path) {
    auto out = open_output(path, std::ios::binary);
    out << "P5\n" << raster.width() << ' ' << raster.height() << "\n255\n";
    std::vector<std::uint8_t> bytes(raster.pixel_count());
    for (int y = 0; y < raster.height(); ++y) {
        for (int x = 0; x < raster.width(); ++x) {
            const std::size_t p = static_cast<std::size_t>(y) * raster.width() + x;
            if (!raster.valid(x, y)) {
                bytes[p] = kInvalidPgm;
                continue;
            }
            const int v = raster.label_at(x, y);
            if (v < 0 || v >= kInvalidPgm)
                throw IoError(path.string() + ": label out of PGM range: " + std::to_string(v));
            bytes[p] = static_cast<std::uint8_t>(v);
        }
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing PGM: " + path.string());
}

Raster load_depth(const fs::path& path) {
    auto in = open_input(path, std::ios::binary);
    std::string header;
    std::getline(in, header);
    std::istringstream head(header);
    std::string magic;
    int width = 0, height = 0;
    head >> magic >> width >> height;
    if (!in || magic != "DEPTH" || width <= 0 || height <= 0)
        throw IoError(path.string() + ": bad depth header");
    std::vector<float> raw(static_cast<std::size_t>(width) * height);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size() * 4));
    if (!in) throw IoError(path.string() + ": truncated depth payload");
    Raster raster(width, height, RasterKind::depth);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const float v = raw[static_cast<std::size_t>(y) * width + x];
            if (v > 0.0f && std::isfinite(v)) {
                raster.set(x, y, v);
            } else {
                raster.set(x, y, 0.0f);
                raster.set_invalid(x, y);
            }
        }
    }
    return raster;
}

void save_depth(const Raster& raster, const fs::path& path) {
    auto out = open_output(path, std::ios::binary);
    out << "DEPTH " << raster.width() << ' ' << raster.height() << '\n';
    std::vector<float> raw(raster.pixel_count());
    for (int y = 0; y < raster.height(); ++y) {
        for (int x = 0; x < raster.width(); ++x) {
            const std::size_t p = static_cast<std::size_t>(y) * raster.width() + x;
            raw[p] = raster.valid(x, y) ? raster.at(x, y) : 0.0f;
        }
    }
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size() * 4));
    if (!out) throw IoError("failed writing depth: " + path.string());
}

std::vector<ScalarMeasurement> load_scalars(const fs::path& path) {
    auto in = open_input(path);
    std::vector<ScalarMeasurement> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        ScalarMeasurement m;
        if (!(row >> m.position.x >> m.position.y >> m.position.z >> m.value))
            parse_error(path, line_no, "expected 4 numbers per scalar measurement");
        out.push_back(m);
    }
    return out;
}

void save_scalars(const std::vector<ScalarMeasurement>& scalars, const fs::path& path) {
    auto out = open_output(path);
    out.precision(17);
    for (const auto& m : scalars)
        out << m.position.x << ' ' << m.position.y << ' ' << m.position.z << ' ' << m.value << '\n';
    if (!out) throw IoError("failed writing scalars: " + path.string());
}

CameraIntrinsics load_intrinsics(const fs::path& path) {
    auto in = open_input(path);
    CameraIntrinsics intr;
    if (!(in >> intr.fx >> intr.fy >> intr.cx >> intr.cy >> intr.width >> intr.height))
        throw IoError(path.string() + ": expected 'fx fy cx cy width height'");
    try {
        intr.validate();
    } catch (const std::invalid_argument& e) {
        throw IoError(path.string() + ": " + e.what());
    }
    return intr;
}

void save_intrinsics(const CameraIntrinsics& intr, const fs::path& path) {
    auto out = open_output(path);
    out.precision(17);
    out << intr.fx << ' ' << intr.fy << ' ' << intr.cx << ' ' << intr.cy << ' ' << intr.width
        << ' ' << intr.height << '\n';
    if (!out) throw IoError("failed writing intrinsics: " + path.string());
}

std::vector<ScanRecord> load_dataset(const fs::path& root, const RunConfig& cfg) {
    (void)cfg;
    const fs::path clouds_dir = root / "clouds";
    if (!fs::is_directory(clouds_dir))
        throw IoError("no frames found: missing clouds directory under " + root.string());

    std::vector<std::pair<int, fs::path>> cloud_files;
    for (const auto& entry : fs::directory_iterator(clouds_dir)) {
        if (!entry.is_regular_file()) continue;
        const fs::path p = entry.path();
        if (p.extension() != ".xyz" && p.extension() != ".xyzb") continue;
        try {
            cloud_files.emplace_back(std::stoi(p.stem().string()), p);
        } catch (const std::exception&) {
            throw IoError("unrecognized frame file name: " + p.string());
        }
    }
    if (cloud_files.empty()) throw IoError("no frames found under " + clouds_dir.string());
    std::sort(cloud_files.begin(), cloud_files.end());

    const std::vector<Pose> poses = load_poses(root / "poses.txt");
    if (poses.size() != cloud_files.size())
        throw IoError(root.string() + ": poses.txt has " + std::to_string(poses.size()) +
                      " rows but " + std::to_string(cloud_files.size()) + " frames exist");

    const CameraIntrinsics intr = load_intrinsics(root / "camera.txt");

    std::vector<ScanRecord> records;
    records.reserve(cloud_files.size());
    for (std::size_t f = 0; f < cloud_files.size(); ++f) {
        const auto& [frame_id, cloud_path] = cloud_files[f];
        ScanRecord rec;
        rec.frame_id = frame_id;
        rec.pose = poses[f];
        rec.intrinsics = intr;
        rec.cloud = cloud_path.extension() == ".xyz" ? load_cloud_xyz(cloud_path)
                                                     : load_cloud_xyzb(cloud_path);
        const std::string name = frame_name(frame_id);
        if (const fs::path p = root / "semantic" / (name + ".pgm"); fs::exists(p))
            rec.semantic = load_pgm(p, RasterKind::class_index);
        if (const fs::path p = root / "depth" / (name + ".depth"); fs::exists(p))
            rec.depth = load_depth(p);
        if (const fs::path p = root / "labels" / (name + ".pgm"); fs::exists(p))
            rec.labels = load_pgm(p, RasterKind::binary);
        if (const fs::path p = root / "scalars" / (name + ".txt"); fs::exists(p))
            rec.scalars = load_scalars(p);
        records.push_back(std::move(rec));
    }
    return records;
}

std::optional<Raster> load_gt_labels(const fs::path& root, int frame_id) {
    const fs::path p = root / "gt_labels" / (frame_name(frame_id) + ".pgm");
    if (!fs::exists(p)) return std::nullopt;
    return load_pgm(p, RasterKind::binary);
}

}  // namespace mlmap
