#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <optional>

namespace mlmap {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Point3() = default;
    Point3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    bool finite() const;
    double distance_to(const Point3& o) const;

    Eigen::Vector3d vec() const { return {x, y, z}; }
    static Point3 from_vec(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }
};

Point3 operator+(const Point3& a, const Point3& b);
Point3 operator-(const Point3& a, const Point3& b);
bool operator==(const Point3& a, const Point3& b);

// Rigid transform, world-from-body convention.
struct Pose {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();

    static Pose identity() { return {}; }

    Point3 apply(const Point3& p) const {
        return Point3::from_vec(rotation * p.vec() + translation);
    }
    Pose inverse() const;
    Pose compose(const Pose& other) const;  // this ∘ other

    // Orthonormal with determinant +1 within tol.
    bool is_rigid(double tol = 1e-6) const;
};

struct CameraIntrinsics {
    double fx = 0.0;
    double fy = 0.0;
    double cx = 0.0;
    double cy = 0.0;
    int width = 0;
    int height = 0;

    // Throws std::invalid_argument on violated constraints.
    void validate() const;
};

// Integer cell index of a voxel (3D) lattice.
struct CellCoord {
    std::int32_t i = 0;
    std::int32_t j = 0;
    std::int32_t k = 0;

    friend bool operator==(const CellCoord&, const CellCoord&) = default;
    friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

struct CellCoordHash {
    std::size_t operator()(const CellCoord& c) const;
};

// Lattice addressing shared by all voxel layers.
struct GridGeometry {
    double resolution = 0.1;
    Point3 origin{};

    CellCoord coord_of(const Point3& p) const;
    Point3 center_of(const CellCoord& c) const;
};

// floor((x - origin) / resolution) per axis. Throws on non-finite input.
CellCoord world_to_cell(const Point3& x, double resolution, const Point3& origin);

Point3 cell_center(const CellCoord& c, double resolution, const Point3& origin);

struct PixelDepth {
    double u = 0.0;
    double v = 0.0;
    double depth = 0.0;
};

// Pinhole projection of a world point; nullopt when the point is at or
// behind the camera plane (camera-frame Z <= 0).
std::optional<PixelDepth> project_point(const Point3& p, const Pose& camera_pose,
                                        const CameraIntrinsics& intr);

// Exact right-inverse of project_point. Throws on non-positive depth.
Point3 backproject_pixel(double u, double v, double depth, const Pose& camera_pose,
                         const CameraIntrinsics& intr);

}  // namespace mlmap
