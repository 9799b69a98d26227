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
#include <unordered_map>

#include "rsimp/mesh.hpp"
#include "rsimp/simplify.hpp"

namespace rsimp {

// Uniform voxelization of the mesh bounding box. Cells are cubes sized by
// the longest box axis divided by the resolution; coordinates are clamped to
// [0, resolution-1] per axis, so boundary vertices land in the lower cell.
struct VoxelGrid {
    int resolution = 1;
    Aabb box;
    double cell_size = 0.0;

    // voxel key -> first-seen output slot
    std::unordered_map<std::uint64_t, std::int32_t> cells;

    std::uint64_t key_for(const Vec3& p) const;
};

// One-pass uniform vertex clustering: every non-empty voxel becomes one
// output vertex at the unweighted mean of its member vertices, followed by
// the same retriangulation rule the splitting simplifier uses. Runtime is
// linear in the input and unrelated to the output size.
SimplifiedMesh cluster_simplify(const Mesh& mesh, int resolution);

// Number of voxels the mesh occupies at a resolution.
std::size_t voxel_occupancy(const Mesh& mesh, int resolution);

// Smallest resolution whose occupied-voxel count reaches the target, by
// binary search with re-evaluated occupancy at every probe (occupancy is not
// monotone in general, so the result is best-effort). Exact output-size
// control is not achievable with uniform clustering.
int resolution_for_target(const Mesh& mesh, std::size_t target_vertices,
                          int max_resolution = 1 << 20);

} // namespace rsimp
