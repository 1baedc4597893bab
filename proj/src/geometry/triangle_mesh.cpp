#include "ifk/geometry/triangle_mesh.hpp"

#include <string>

namespace ifk {

double triangle_area_sq(const Vec3& a, const Vec3& b, const Vec3& c) {
    return 0.25 * (b - a).cross(c - a).squaredNorm();
}

void validate_mesh(const TriangleMesh& mesh) {
    if (mesh.vertices.empty() || mesh.faces.empty())
        throw InvalidInput("mesh: needs at least one vertex and one face");
    for (const auto& v : mesh.vertices)
        if (!v.allFinite()) throw InvalidInput("mesh: non-finite vertex");
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        const auto& face = mesh.faces[f];
        for (int c = 0; c < 3; ++c)
            if (face[c] >= mesh.vertices.size())
                throw InvalidInput("mesh: face " + std::to_string(f) + " references vertex " +
                                   std::to_string(face[c]) + " out of range");
        const double area2 =
            triangle_area_sq(mesh.vertices[face[0]], mesh.vertices[face[1]], mesh.vertices[face[2]]);
        if (area2 <= kDegenerateAreaSq)
            throw InvalidInput("mesh: degenerate face " + std::to_string(f));
    }
}

// Ericson, Real-Time Collision Detection, 5.1.5.
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    const Vec3 ab = b - a, ac = c - a, ap = p - a;
    const double d1 = ab.dot(ap), d2 = ac.dot(ap);
    if (d1 <= 0.0 && d2 <= 0.0) return a;

    const Vec3 bp = p - b;
    const double d3 = ab.dot(bp), d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) return b;

    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        const double v = d1 / (d1 - d3);
        return a + v * ab;
    }

    const Vec3 cp = p - c;
    const double d5 = ab.dot(cp), d6 = ac.dot(cp);
    if (d6 >= 0.0 && d5 <= d6) return c;

    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        const double w = d2 / (d2 - d6);
        return a + w * ac;
    }

    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return b + w * (c - b);
    }

    const double denom = 1.0 / (va + vb + vc);
    const double v = vb * denom, w = vc * denom;
    return a + v * ab + w * ac;
}

}  // namespace ifk
