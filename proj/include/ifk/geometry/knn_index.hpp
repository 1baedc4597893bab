#pragma once

#include <cstddef>
#include <vector>

#include "ifk/geometry/point_cloud.hpp"

namespace ifk {

struct KnnResult {
    Vec3 point;
    double distance;
    std::size_t index;  // position in the original cloud
};

// Balanced kd-tree over an immutable copy of the cloud. Median splits on
// the widest axis; ties on the split coordinate are broken by original
// point index so the structure is deterministic for a given input order.
// Queries are read-only and safe to run concurrently.
class KnnIndex {
public:
    static constexpr std::size_t kDefaultLeafSize = 16;

    explicit KnnIndex(const PointCloud& cloud, std::size_t leaf_size = kDefaultLeafSize);

    std::size_t size() const { return points_.size(); }
    const Vec3& point(std::size_t i) const { return points_[i]; }

    // k globally nearest points by Euclidean distance, ascending; ties are
    // resolved toward the lower original index. Throws InvalidInput when
    // k == 0 or k exceeds the cloud size.
    std::vector<KnnResult> query(const Vec3& q, std::size_t k) const;

    // Nearest distance only (k = 1 fast path).
    double nearest_distance(const Vec3& q) const;

private:
    struct Node {
        int axis = -1;         // -1 marks a leaf
        double split = 0.0;
        std::size_t begin = 0, end = 0;  // leaf range in order_
        int left = -1, right = -1;
    };

    int build(std::size_t begin, std::size_t end);

    std::vector<Vec3> points_;
    std::vector<std::size_t> order_;
    std::vector<Node> nodes_;
    std::size_t leaf_size_;
    int root_ = -1;
};

KnnIndex build_knn_index(const PointCloud& cloud, std::size_t leaf_size = KnnIndex::kDefaultLeafSize);

std::vector<KnnResult> knn_query(const KnnIndex& index, const Vec3& q, std::size_t k);

// Mean of the k nearest Euclidean distances (the unsigned-distance label
// recipe for raw point clouds; k = 3 by default).
double udf_knn(const KnnIndex& index, const Vec3& q, std::size_t k = 3);

}  // namespace ifk
