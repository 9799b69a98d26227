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

#include "rsimp/vclust.hpp"

#include <algorithm>
#include <cmath>

#include "rsimp/error.hpp"

namespace rsimp {

namespace {

VoxelGrid make_grid(const Mesh& mesh, int resolution) {
    if (resolution < 1)
        throw Error(ErrorKind::structure, "voxel resolution must be at least 1");
    VoxelGrid grid;
    grid.resolution = resolution;
    grid.box = bounding_box(mesh);
    Vec3 extent = grid.box.extent();
    double longest = std::max({extent.x, extent.y, extent.z});
    grid.cell_size = longest > 0.0 ? longest / resolution : 1.0;
    return grid;
}

} // namespace

std::uint64_t VoxelGrid::key_for(const Vec3& p) const {
    auto coord = [this](double value, double origin) {
        auto c = static_cast<std::int64_t>(std::floor((value - origin) / cell_size));
        return static_cast<std::uint64_t>(std::clamp<std::int64_t>(c, 0, resolution - 1));
    };
    std::uint64_t r = static_cast<std::uint64_t>(resolution);
    return (coord(p.x, box.min.x) * r + coord(p.y, box.min.y)) * r + coord(p.z, box.min.z);
}

SimplifiedMesh cluster_simplify(const Mesh& mesh, int resolution) {
    VoxelGrid grid = make_grid(mesh, resolution);

    // First-seen order keeps the output independent of hash iteration order.
    std::vector<Vec3> sums;
    std::vector<std::size_t> counts;
    std::vector<VertexId> vertex_to_output(mesh.vertex_count());
    for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
        std::uint64_t key = grid.key_for(mesh.vertices[v]);
        auto [it, inserted] = grid.cells.try_emplace(key, static_cast<std::int32_t>(sums.size()));
        if (inserted) {
            sums.push_back({});
            counts.push_back(0);
        }
        sums[it->second] += mesh.vertices[v];
        counts[it->second] += 1;
        vertex_to_output[v] = it->second;
    }

    SimplifiedMesh out;
    out.vertices.reserve(sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i)
        out.vertices.push_back(sums[i] / double(counts[i]));
    out.vertex_to_output = std::move(vertex_to_output);

    for (const auto& face : mesh.faces) {
        VertexId a = out.vertex_to_output[face[0]];
        VertexId b = out.vertex_to_output[face[1]];
        VertexId c = out.vertex_to_output[face[2]];
        if (a != b && b != c && a != c)
            out.faces.push_back({a, b, c});
    }
    return out;
}

std::size_t voxel_occupancy(const Mesh& mesh, int resolution) {
    VoxelGrid grid = make_grid(mesh, resolution);
    for (const Vec3& v : mesh.vertices)
        grid.cells.try_emplace(grid.key_for(v), 0);
    return grid.cells.size();
}

int resolution_for_target(const Mesh& mesh, std::size_t target_vertices, int max_resolution) {
    if (target_vertices <= 1)
        return 1;
    int lo = 1, hi = max_resolution;
    int best = max_resolution;
    bool found = false;
    while (lo <= hi) {
        int mid = lo + (hi - lo) / 2;
        if (voxel_occupancy(mesh, mid) >= target_vertices) {
            best = mid;
            found = true;
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    return found ? best : max_resolution;
}

} // namespace rsimp
