#include "ifk/geometry/knn_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ifk {

namespace {

struct HeapEntry {
    double dist2;
    std::size_t index;
};

// "worse" ordering: larger distance first, then larger index. The heap top
// is the current worst candidate.
inline bool worse(const HeapEntry& a, const HeapEntry& b) {
    if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
    return a.index < b.index;
}

}  // namespace

KnnIndex::KnnIndex(const PointCloud& cloud, std::size_t leaf_size)
    : points_(cloud.points), leaf_size_(leaf_size == 0 ? 1 : leaf_size) {
    require_valid_cloud(cloud, "build_knn_index");
    order_.resize(points_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    nodes_.reserve(2 * points_.size() / leaf_size_ + 4);
    root_ = build(0, points_.size());
}

int KnnIndex::build(std::size_t begin, std::size_t end) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();

    if (end - begin <= leaf_size_) {
        nodes_[id].begin = begin;
        nodes_[id].end = end;
        return id;
    }

    Vec3 lo = points_[order_[begin]], hi = lo;
    for (std::size_t i = begin + 1; i < end; ++i) {
        lo = lo.cwiseMin(points_[order_[i]]);
        hi = hi.cwiseMax(points_[order_[i]]);
    }
    int axis = 0;
    (hi - lo).maxCoeff(&axis);

    const std::size_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](std::size_t a, std::size_t b) {
                         const double ca = points_[a][axis], cb = points_[b][axis];
                         if (ca != cb) return ca < cb;
                         return a < b;
                     });

    nodes_[id].axis = axis;
    nodes_[id].split = points_[order_[mid]][axis];
    const int left = build(begin, mid);
    const int right = build(mid, end);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
}

std::vector<KnnResult> KnnIndex::query(const Vec3& q, std::size_t k) const {
    if (k == 0) throw InvalidInput("knn_query: k must be positive");
    if (k > points_.size()) throw InvalidInput("knn_query: k exceeds cloud size");

    std::vector<HeapEntry> heap;
    heap.reserve(k);

    auto consider = [&](std::size_t idx) {
        const HeapEntry cand{(points_[idx] - q).squaredNorm(), idx};
        if (heap.size() < k) {
            heap.push_back(cand);
            std::push_heap(heap.begin(), heap.end(), worse);
        } else if (worse(cand, heap.front())) {
            std::pop_heap(heap.begin(), heap.end(), worse);
            heap.back() = cand;
            std::push_heap(heap.begin(), heap.end(), worse);
        }
    };

    // Iterative traversal, near child first. The far side is pruned only
    // when the splitting plane is strictly farther than the current worst
    // candidate, so equidistant ties are still visited.
    std::vector<int> stack;
    stack.push_back(root_);
    while (!stack.empty()) {
        const Node& node = nodes_[stack.back()];
        stack.pop_back();
        if (node.axis < 0) {
            for (std::size_t i = node.begin; i < node.end; ++i) consider(order_[i]);
            continue;
        }
        const double delta = q[node.axis] - node.split;
        const int near = delta <= 0.0 ? node.left : node.right;
        const int far = delta <= 0.0 ? node.right : node.left;
        if (heap.size() < k || delta * delta <= heap.front().dist2) stack.push_back(far);
        stack.push_back(near);
    }

    std::sort(heap.begin(), heap.end(), [](const HeapEntry& a, const HeapEntry& b) {
        if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
        return a.index < b.index;
    });

    std::vector<KnnResult> out;
    out.reserve(heap.size());
    for (const auto& e : heap) out.push_back({points_[e.index], std::sqrt(e.dist2), e.index});
    return out;
}

double KnnIndex::nearest_distance(const Vec3& q) const {
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> stack;
    stack.push_back(root_);
    while (!stack.empty()) {
        const Node& node = nodes_[stack.back()];
        stack.pop_back();
        if (node.axis < 0) {
            for (std::size_t i = node.begin; i < node.end; ++i)
                best = std::min(best, (points_[order_[i]] - q).squaredNorm());
            continue;
        }
        const double delta = q[node.axis] - node.split;
        const int near = delta <= 0.0 ? node.left : node.right;
        const int far = delta <= 0.0 ? node.right : node.left;
        if (delta * delta <= best) stack.push_back(far);
        stack.push_back(near);
    }
    return std::sqrt(best);
}

KnnIndex build_knn_index(const PointCloud& cloud, std::size_t leaf_size) {
    return KnnIndex(cloud, leaf_size);
}

std::vector<KnnResult> knn_query(const KnnIndex& index, const Vec3& q, std::size_t k) {
    return index.query(q, k);
}

double udf_knn(const KnnIndex& index, const Vec3& q, std::size_t k) {
    const auto nn = index.query(q, k);
    double sum = 0.0;
    for (const auto& r : nn) sum += r.distance;
    return sum / static_cast<double>(k);
}

}  // namespace ifk
