// Copyright 2026 The rsimp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsimp/metro.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "rsimp/error.hpp"

namespace rsimp {

double point_triangle_distance_squared(const Vec3& p, const Vec3& a, const Vec3& b,
                                       const Vec3& c) {
    const Vec3 ab = b - a;
    const Vec3 ac = c - a;
    const Vec3 ap = p - a;

    const double d1 = dot(ab, ap);
    const double d2 = dot(ac, ap);
    if (d1 <= 0.0 && d2 <= 0.0)
        return length_squared(ap); // region of vertex a

    const Vec3 bp = p - b;
    const double d3 = dot(ab, bp);
    const double d4 = dot(ac, bp);
    if (d3 >= 0.0 && d4 <= d3)
        return length_squared(bp); // region of vertex b

    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        double w = d1 / (d1 - d3);
        return length_squared(ap - ab * w); // edge ab
    }

    const Vec3 cp = p - c;
    const double d5 = dot(ab, cp);
    const double d6 = dot(ac, cp);
    if (d6 >= 0.0 && d5 <= d6)
        return length_squared(cp); // region of vertex c

    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        double w = d2 / (d2 - d6);
        return length_squared(ap - ac * w); // edge ac
    }

    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && d4 - d3 >= 0.0 && d5 - d6 >= 0.0) {
        double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return length_squared(bp - (c - b) * w); // edge bc
    }

    const double denom = 1.0 / (va + vb + vc);
    const double v = vb * denom;
    const double w = vc * denom;
    return length_squared(p - (a + ab * v + ac * w)); // interior
}

SpatialIndex::SpatialIndex(const Mesh& mesh) {
    triangles_.reserve(mesh.face_count());
    for (std::size_t f = 0; f < mesh.face_count(); ++f) {
        if (mesh.face_degenerate[f])
            continue;
        triangles_.push_back({mesh.vertices[mesh.faces[f][0]], mesh.vertices[mesh.faces[f][1]],
                              mesh.vertices[mesh.faces[f][2]]});
        centroids_.push_back(mesh.face_midpoint[f]);
    }
    if (triangles_.empty())
        throw Error(ErrorKind::structure, "spatial index needs at least one non-degenerate face");

    order_.resize(triangles_.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
        order_[i] = static_cast<std::int32_t>(i);
    nodes_.reserve(2 * triangles_.size());
    build(0, static_cast<std::int32_t>(order_.size()));
}

std::int32_t SpatialIndex::build(std::int32_t first, std::int32_t count) {
    Node node;
    node.box = {triangles_[order_[first]][0], triangles_[order_[first]][0]};
    for (std::int32_t i = first; i < first + count; ++i)
        for (const Vec3& corner : triangles_[order_[i]])
            node.box.expand(corner);

    constexpr std::int32_t kLeafSize = 4;
    if (count <= kLeafSize) {
        node.first = first;
        node.count = count;
        nodes_.push_back(node);
        return static_cast<std::int32_t>(nodes_.size() - 1);
    }

    Aabb centroid_box{centroids_[order_[first]], centroids_[order_[first]]};
    for (std::int32_t i = first; i < first + count; ++i)
        centroid_box.expand(centroids_[order_[i]]);
    Vec3 extent = centroid_box.extent();
    int axis = 0;
    if (extent.y > extent.x)
        axis = 1;
    if (extent.z > extent[axis])
        axis = 2;

    std::int32_t mid = first + count / 2;
    std::nth_element(order_.begin() + first, order_.begin() + mid, order_.begin() + first + count,
                     [&](std::int32_t l, std::int32_t r) {
                         double cl = centroids_[l][axis], cr = centroids_[r][axis];
                         return cl != cr ? cl < cr : l < r;
                     });

    auto self = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(node);
    std::int32_t left = build(first, mid - first);
    std::int32_t right = build(mid, first + count - mid);
    nodes_[self].left = left;
    nodes_[self].right = right;
    return self;
}

double SpatialIndex::distance_squared(const Vec3& p) const {
    double best = std::numeric_limits<double>::infinity();
    std::int32_t stack[64];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
        const Node& node = nodes_[stack[--top]];
        if (node.box.distance_squared(p) >= best)
            continue;
        if (node.left < 0) {
            for (std::int32_t i = node.first; i < node.first + node.count; ++i) {
                const auto& tri = triangles_[order_[i]];
                best = std::min(best, point_triangle_distance_squared(p, tri[0], tri[1], tri[2]));
            }
            continue;
        }
        // Visit the nearer child first for tighter pruning.
        double dl = nodes_[node.left].box.distance_squared(p);
        double dr = nodes_[node.right].box.distance_squared(p);
        std::int32_t near = node.left, far = node.right;
        if (dr < dl)
            std::swap(near, far);
        stack[top++] = far;
        stack[top++] = near;
    }
    return best;
}

double SpatialIndex::distance(const Vec3& p) const { return std::sqrt(distance_squared(p)); }

namespace {

// 53-bit uniform double in [0, 1); the engine is fully specified by the
// standard, so results are platform-independent.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

std::vector<Vec3> sample_surface(const Mesh& mesh, std::size_t n, std::uint64_t seed) {
    if (n < 1)
        throw Error(ErrorKind::structure, "sample_surface: need at least one sample");
    if (!(mesh.total_area > 0.0))
        throw Error(ErrorKind::structure, "sample_surface: mesh has zero surface area");

    std::vector<double> cumulative;
    std::vector<FaceId> face_of;
    cumulative.reserve(mesh.face_count());
    double running = 0.0;
    for (std::size_t f = 0; f < mesh.face_count(); ++f) {
        if (mesh.face_degenerate[f])
            continue;
        running += mesh.face_area[f];
        cumulative.push_back(running);
        face_of.push_back(static_cast<FaceId>(f));
    }

    std::mt19937_64 rng(seed);
    std::vector<Vec3> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double pick = uniform01(rng) * running;
        std::size_t slot =
            std::upper_bound(cumulative.begin(), cumulative.end(), pick) - cumulative.begin();
        if (slot >= cumulative.size())
            slot = cumulative.size() - 1;
        const auto& tri = mesh.faces[face_of[slot]];

        double r1 = uniform01(rng);
        double r2 = uniform01(rng);
        if (r1 + r2 > 1.0) { // reflect into the lower simplex half
            r1 = 1.0 - r1;
            r2 = 1.0 - r2;
        }
        const Vec3& a = mesh.vertices[tri[0]];
        const Vec3& b = mesh.vertices[tri[1]];
        const Vec3& c = mesh.vertices[tri[2]];
        points.push_back(a + (b - a) * r1 + (c - a) * r2);
    }
    return points;
}

ErrorReport mean_error(const Mesh& original, const Mesh& simplified, std::size_t samples_per_side,
                       std::uint64_t seed) {
    if (!(original.total_area > 0.0))
        throw Error(ErrorKind::structure, "mean_error: original mesh has zero surface area");

    ErrorReport report;
    report.seed = seed;
    report.normalizer = bounding_box(original).diagonal();

    if (samples_per_side == 0) {
        std::size_t faces = std::max(original.face_count(), simplified.face_count());
        samples_per_side = std::min<std::size_t>(kMaxDefaultSamples, 100 * std::max<std::size_t>(faces, 1));
    }
    report.sample_count = samples_per_side;

    const std::uint64_t backward_seed = seed ^ 0x9e3779b97f4a7c15ull;
    const bool simplified_has_area = simplified.total_area > 0.0;

    if (simplified_has_area) {
        SpatialIndex simplified_index(simplified);
        SpatialIndex original_index(original);

        double forward_sum = 0.0;
        for (const Vec3& p : sample_surface(original, samples_per_side, seed))
            forward_sum += simplified_index.distance(p);
        report.mean_forward = forward_sum / double(samples_per_side);

        double backward_sum = 0.0;
        for (const Vec3& p : sample_surface(simplified, samples_per_side, backward_seed))
            backward_sum += original_index.distance(p);
        report.mean_backward = backward_sum / double(samples_per_side);
    } else {
        // The simplified model collapsed to points/lines; fall back to its
        // vertex set so the report stays meaningful.
        report.degenerate_target = true;
        if (simplified.vertices.empty())
            throw Error(ErrorKind::structure, "mean_error: simplified mesh is empty");

        SpatialIndex original_index(original);
        double forward_sum = 0.0;
        for (const Vec3& p : sample_surface(original, samples_per_side, seed)) {
            double best = std::numeric_limits<double>::infinity();
            for (const Vec3& v : simplified.vertices)
                best = std::min(best, length_squared(p - v));
            forward_sum += std::sqrt(best);
        }
        report.mean_forward = forward_sum / double(samples_per_side);

        double backward_sum = 0.0;
        for (const Vec3& v : simplified.vertices)
            backward_sum += original_index.distance(v);
        report.mean_backward = backward_sum / double(simplified.vertices.size());
    }

    report.mean_symmetric = std::max(report.mean_forward, report.mean_backward);
    report.percent =
        report.normalizer > 0.0 ? report.mean_symmetric / report.normalizer * 100.0 : 0.0;
    return report;
}

} // namespace rsimp
