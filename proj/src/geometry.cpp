#include "mlmap/geometry.hpp"

#include <Eigen/LU>
#include <cmath>
#include <stdexcept>

namespace mlmap {

bool Point3::finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

double Point3::distance_to(const Point3& o) const {
    const double dx = x - o.x, dy = y - o.y, dz = z - o.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
bool operator==(const Point3& a, const Point3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

Pose Pose::inverse() const {
    Pose out;
    out.rotation = rotation.transpose();
    out.translation = -(out.rotation * translation);
    return out;
}

Pose Pose::compose(const Pose& other) const {
    Pose out;
    out.rotation = rotation * other.rotation;
    out.translation = rotation * other.translation + translation;
    return out;
}

bool Pose::is_rigid(double tol) const {
    const Eigen::Matrix3d err = rotation * rotation.transpose() - Eigen::Matrix3d::Identity();
    if (err.cwiseAbs().maxCoeff() > tol) return false;
    return std::abs(rotation.determinant() - 1.0) <= tol;
}

void CameraIntrinsics::validate() const {
    if (!(fx > 0.0) || !(fy > 0.0))
        throw std::invalid_argument("camera intrinsics: focal lengths must be positive");
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("camera intrinsics: image size must be positive");
    if (!(cx >= 0.0 && cx < width) || !(cy >= 0.0 && cy < height))
        throw std::invalid_argument("camera intrinsics: principal point outside image");
}

std::size_t CellCoordHash::operator()(const CellCoord& c) const {
    // splitmix64 finalizer over the packed coordinates
    std::uint64_t h = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.i)) << 42) ^
                      (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.j)) << 21) ^
                      static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.k));
    h += 0x9E3779B97F4A7C15ull;
    h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9ull;
    h = (h ^ (h >> 27)) * 0x94D049BB133111EBull;
    return static_cast<std::size_t>(h ^ (h >> 31));
}

CellCoord GridGeometry::coord_of(const Point3& p) const {
    return world_to_cell(p, resolution, origin);
}

Point3 GridGeometry::center_of(const CellCoord& c) const {
    return cell_center(c, resolution, origin);
}

CellCoord world_to_cell(const Point3& x, double resolution, const Point3& origin) {
    if (!(resolution > 0.0)) throw std::invalid_argument("world_to_cell: resolution must be > 0");
    if (!x.finite()) throw std::invalid_argument("world_to_cell: non-finite coordinate");
    const auto idx = [&](double v, double o) {
        return static_cast<std::int32_t>(std::floor((v - o) / resolution));
    };
    return {idx(x.x, origin.x), idx(x.y, origin.y), idx(x.z, origin.z)};
}

Point3 cell_center(const CellCoord& c, double resolution, const Point3& origin) {
    return {origin.x + (c.i + 0.5) * resolution,
            origin.y + (c.j + 0.5) * resolution,
            origin.z + (c.k + 0.5) * resolution};
}

std::optional<PixelDepth> project_point(const Point3& p, const Pose& camera_pose,
                                        const CameraIntrinsics& intr) {
    const Eigen::Vector3d q = camera_pose.rotation.transpose() * (p.vec() - camera_pose.translation);
    if (q.z() <= 0.0) return std::nullopt;
    return PixelDepth{intr.fx * q.x() / q.z() + intr.cx, intr.fy * q.y() / q.z() + intr.cy, q.z()};
}

Point3 backproject_pixel(double u, double v, double depth, const Pose& camera_pose,
                         const CameraIntrinsics& intr) {
    if (!(depth > 0.0) || !std::isfinite(depth))
        throw std::invalid_argument("backproject_pixel: depth must be positive and finite");
    const Eigen::Vector3d q{(u - intr.cx) / intr.fx * depth, (v - intr.cy) / intr.fy * depth, depth};
    return Point3::from_vec(camera_pose.rotation * q + camera_pose.translation);
}

}  // namespace mlmap
