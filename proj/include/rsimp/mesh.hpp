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

#include <array>
#include <cstdint>
#include <vector>

#include "rsimp/geom.hpp"

namespace rsimp {

using VertexId = std::int32_t;
using FaceId = std::int32_t;

// Indexed triangle mesh with per-face derived data and vertex adjacency.
// Immutable after construction; safe to share across threads for reading.
//
// Degenerate (zero-area) faces are kept so face indexing stays aligned with
// the input, but carry a zero normal and are excluded from all normal/area
// sums downstream.
struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<VertexId, 3>> faces;

    // Derived per-face data, same length as faces.
    std::vector<Vec3> face_normal;    // unit normal, zero for degenerate faces
    std::vector<double> face_area;
    std::vector<Vec3> face_midpoint;
    std::vector<bool> face_degenerate;

    // Adjacency: for each vertex, the adjacent vertices (sharing a face edge,
    // deduplicated, symmetric) and the incident faces (each face listed once
    // per distinct vertex it references).
    std::vector<std::vector<VertexId>> vertex_neighbors;
    std::vector<std::vector<FaceId>> vertex_faces;

    // Sum of non-degenerate face areas.
    double total_area = 0.0;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t face_count() const { return faces.size(); }
};

// Builds a mesh from raw positions and triangle index triples and populates
// all derived fields. Throws ErrorKind::structure for out-of-range indices
// and for an empty face list.
Mesh build_mesh(std::vector<Vec3> positions, std::vector<std::array<VertexId, 3>> face_indices);

// Componentwise min/max over all vertices. Throws for an empty mesh.
Aabb bounding_box(const Mesh& mesh);

struct ValidationReport {
    std::size_t degenerate_faces = 0;
    std::size_t duplicate_faces = 0;      // faces repeating an earlier vertex set
    std::size_t unreferenced_vertices = 0;
    std::size_t connected_components = 0; // over face-referenced vertices
};

ValidationReport validate(const Mesh& mesh);

} // namespace rsimp
