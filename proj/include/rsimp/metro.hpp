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

#pragma once

#include <cstdint>
#include <vector>

#include "rsimp/mesh.hpp"

namespace rsimp {

// Exact squared point-to-triangle distance via region classification
// (closest feature may be a vertex, an edge, or the interior).
double point_triangle_distance_squared(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

// Axis-aligned bounding volume hierarchy over the non-degenerate triangles
// of a mesh. Queries return the exact minimum distance: boxes are only
// pruned when they provably cannot beat the current best.
class SpatialIndex {
public:
    // Throws ErrorKind::structure when every face is degenerate.
    explicit SpatialIndex(const Mesh& mesh);

    double distance(const Vec3& p) const;
    double distance_squared(const Vec3& p) const;

    std::size_t triangle_count() const { return triangles_.size(); }

private:
    struct Node {
        Aabb box;
        std::int32_t left = -1;   // internal when left >= 0
        std::int32_t right = -1;
        std::int32_t first = 0;   // leaf triangle range
        std::int32_t count = 0;
    };

    std::int32_t build(std::int32_t first, std::int32_t count);

    std::vector<std::array<Vec3, 3>> triangles_;
    std::vector<Vec3> centroids_;
    std::vector<std::int32_t> order_;
    std::vector<Node> nodes_;
};

// n points drawn area-uniformly from the surface: faces chosen with
// probability proportional to area, positions uniform within each face.
// Identical (mesh, n, seed) triples give identical points on any platform.
// Throws ErrorKind::structure when the mesh has zero total area.
std::vector<Vec3> sample_surface(const Mesh& mesh, std::size_t n, std::uint64_t seed);

struct ErrorReport {
    double mean_forward = 0.0;   // original -> simplified
    double mean_backward = 0.0;  // simplified -> original
    double mean_symmetric = 0.0; // max of the two one-sided means
    double normalizer = 0.0;     // bounding-box diagonal of the original mesh
    double percent = 0.0;        // mean_symmetric / normalizer * 100
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    bool degenerate_target = false; // simplified mesh had no usable faces
};

// Uses 100 samples per face (capped at 2,000,000) when samples_per_side is 0.
constexpr std::size_t kMaxDefaultSamples = 2000000;
constexpr std::uint64_t kDefaultMeasureSeed = 42;

// Sampled mean surface-to-surface distance between the two meshes, as a
// percentage of the original mesh's bounding-box diagonal. When the
// simplified mesh has no faces, distances are measured to its vertex set and
// the report is flagged degenerate.
ErrorReport mean_error(const Mesh& original, const Mesh& simplified,
                       std::size_t samples_per_side = 0,
                       std::uint64_t seed = kDefaultMeasureSeed);

} // namespace rsimp
