#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ifk/geometry/point_cloud.hpp"

namespace ifk {

// Indexed triangle soup. `watertight` is an assertion supplied by the
// caller; signed queries require it and are not validated against the
// actual topology.
struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<std::size_t, 3>> faces;
    bool watertight = false;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t face_count() const { return faces.size(); }

    Vec3 vertex_of(std::size_t face, int corner) const { return vertices[faces[face][corner]]; }
};

// Squared triangle area below this is treated as degenerate.
constexpr double kDegenerateAreaSq = 1e-12;

// Face indices in range and no degenerate (near-zero-area) face; throws
// InvalidInput otherwise. Every loader and builder funnels through this.
void validate_mesh(const TriangleMesh& mesh);

double triangle_area_sq(const Vec3& a, const Vec3& b, const Vec3& c);

// Closest point on triangle (a, b, c) to p (face/edge/vertex cases).
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace ifk
