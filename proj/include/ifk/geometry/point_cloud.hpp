#pragma once

#include <Eigen/Core>
#include <cmath>
#include <vector>

#include "ifk/error.hpp"

namespace ifk {

using Vec3 = Eigen::Vector3d;

struct PointCloud {
    std::vector<Vec3> points;

    PointCloud() = default;
    explicit PointCloud(std::vector<Vec3> pts) : points(std::move(pts)) {}

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    const Vec3& operator[](std::size_t i) const { return points[i]; }
    Vec3& operator[](std::size_t i) { return points[i]; }
};

inline bool all_finite(const PointCloud& cloud) {
    for (const auto& p : cloud.points)
        if (!p.allFinite()) return false;
    return true;
}

// Throws InvalidInput unless the cloud is nonempty with finite coordinates.
inline void require_valid_cloud(const PointCloud& cloud, const char* who) {
    if (cloud.empty()) throw InvalidInput(std::string(who) + ": empty point cloud");
    if (!all_finite(cloud)) throw InvalidInput(std::string(who) + ": non-finite coordinate");
}

}  // namespace ifk
