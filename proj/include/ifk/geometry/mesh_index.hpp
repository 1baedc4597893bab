#pragma once

#include <cstdint>
#include <vector>

#include "ifk/geometry/triangle_mesh.hpp"

namespace ifk {

enum class Sign { inside, outside };

struct ClosestHit {
    Vec3 point;          // closest point on the mesh surface
    double distance;     // Euclidean distance to it
    std::size_t face;    // triangle index
};

// Bounding-volume hierarchy over the triangles of a mesh (median split on
// the widest centroid axis, leaf size 4). Immutable after construction;
// queries are safe from many threads.
class MeshIndex {
public:
    static constexpr std::size_t kLeafSize = 4;

    explicit MeshIndex(TriangleMesh mesh);

    const TriangleMesh& mesh() const { return mesh_; }

    ClosestHit closest_point(const Vec3& q) const;

    // Parity of ray crossings from q along `dir`; returns false (and leaves
    // `parity` untouched) when the ray grazes an edge/vertex or hits nearly
    // head-on at t ~ 0, so the caller can re-jitter.
    bool ray_parity(const Vec3& q, const Vec3& dir, bool& parity) const;

    struct BoxNode {
        Vec3 lo, hi;
        std::size_t begin = 0, end = 0;  // leaf triangle range
        int left = -1, right = -1;
        bool leaf() const { return left < 0; }
    };
    const std::vector<BoxNode>& nodes() const { return nodes_; }
    const std::vector<std::size_t>& triangle_order() const { return order_; }

private:
    int build(std::size_t begin, std::size_t end, const std::vector<Vec3>& centroids);

    TriangleMesh mesh_;
    std::vector<std::size_t> order_;
    std::vector<BoxNode> nodes_;
    int root_ = -1;
    double scale_ = 1.0;  // bbox diagonal, used for relative tolerances
};

MeshIndex build_mesh_index(TriangleMesh mesh);

// Exact min over triangles of point-to-triangle distance.
double unsigned_distance_mesh(const MeshIndex& index, const Vec3& q);

// Majority vote over ray-crossing parity along `directions` pseudo-random
// directions (odd crossings = inside). Rays that graze an edge or vertex
// are re-jittered a bounded number of times. Requires the watertight flag.
Sign sign_by_parity(const MeshIndex& index, const Vec3& q, int directions = 3,
                    std::uint64_t seed = 0x51D3B00Full);

double sdf_mesh(const MeshIndex& index, const Vec3& q, int directions = 3,
                std::uint64_t seed = 0x51D3B00Full);

int occupancy_mesh(const MeshIndex& index, const Vec3& q, int directions = 3,
                   std::uint64_t seed = 0x51D3B00Full);

}  // namespace ifk
