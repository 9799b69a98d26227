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

#include "rsimp/mesh.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rsimp/error.hpp"

namespace rsimp {

Mesh build_mesh(std::vector<Vec3> positions, std::vector<std::array<VertexId, 3>> face_indices) {
    if (face_indices.empty())
        throw Error(ErrorKind::structure, "mesh has no faces");

    Mesh mesh;
    mesh.vertices = std::move(positions);
    mesh.faces = std::move(face_indices);

    const auto n_vertices = static_cast<VertexId>(mesh.vertices.size());
    const std::size_t n_faces = mesh.faces.size();

    for (std::size_t f = 0; f < n_faces; ++f) {
        for (VertexId v : mesh.faces[f]) {
            if (v < 0 || v >= n_vertices)
                throw Error(ErrorKind::structure,
                            "face " + std::to_string(f) + " references vertex " +
                                std::to_string(v) + " out of range [0, " +
                                std::to_string(n_vertices) + ")");
        }
    }

    mesh.face_normal.resize(n_faces);
    mesh.face_area.resize(n_faces);
    mesh.face_midpoint.resize(n_faces);
    mesh.face_degenerate.resize(n_faces);

    for (std::size_t f = 0; f < n_faces; ++f) {
        const Vec3& a = mesh.vertices[mesh.faces[f][0]];
        const Vec3& b = mesh.vertices[mesh.faces[f][1]];
        const Vec3& c = mesh.vertices[mesh.faces[f][2]];
        Vec3 n = cross(b - a, c - a);
        double len = length(n);
        double area = 0.5 * len;
        mesh.face_area[f] = area;
        mesh.face_normal[f] = area > 0.0 ? n / len : Vec3{};
        mesh.face_midpoint[f] = (a + b + c) / 3.0;
        mesh.face_degenerate[f] = !(area > 0.0);
        if (area > 0.0)
            mesh.total_area += area;
    }

    mesh.vertex_neighbors.resize(mesh.vertices.size());
    mesh.vertex_faces.resize(mesh.vertices.size());

    for (std::size_t f = 0; f < n_faces; ++f) {
        const auto& tri = mesh.faces[f];
        for (int k = 0; k < 3; ++k) {
            VertexId v = tri[k];
            // A face with repeated indices is listed once per distinct vertex.
            bool seen = false;
            for (int j = 0; j < k; ++j)
                seen = seen || tri[j] == v;
            if (!seen)
                mesh.vertex_faces[v].push_back(static_cast<FaceId>(f));

            VertexId w = tri[(k + 1) % 3];
            if (v == w)
                continue;
            auto& nb = mesh.vertex_neighbors[v];
            if (std::find(nb.begin(), nb.end(), w) == nb.end())
                nb.push_back(w);
            auto& nbw = mesh.vertex_neighbors[w];
            if (std::find(nbw.begin(), nbw.end(), v) == nbw.end())
                nbw.push_back(v);
        }
    }

    return mesh;
}

Aabb bounding_box(const Mesh& mesh) {
    if (mesh.vertices.empty())
        throw Error(ErrorKind::structure, "bounding_box of empty mesh");
    Aabb box{mesh.vertices[0], mesh.vertices[0]};
    for (const Vec3& v : mesh.vertices)
        box.expand(v);
    return box;
}

ValidationReport validate(const Mesh& mesh) {
    ValidationReport report;

    std::map<std::array<VertexId, 3>, int> seen;
    for (std::size_t f = 0; f < mesh.face_count(); ++f) {
        if (mesh.face_degenerate[f])
            ++report.degenerate_faces;
        std::array<VertexId, 3> key = mesh.faces[f];
        std::sort(key.begin(), key.end());
        if (++seen[key] > 1)
            ++report.duplicate_faces;
    }

    std::vector<bool> referenced(mesh.vertex_count(), false);
    for (const auto& tri : mesh.faces)
        for (VertexId v : tri)
            referenced[v] = true;
    for (bool r : referenced)
        if (!r)
            ++report.unreferenced_vertices;

    // Components over referenced vertices; vertices of one face count as
    // connected even when the face is degenerate (they share list membership
    // via its edges, or coincide).
    std::vector<bool> visited(mesh.vertex_count(), false);
    std::vector<VertexId> stack;
    for (std::size_t s = 0; s < mesh.vertex_count(); ++s) {
        if (!referenced[s] || visited[s])
            continue;
        ++report.connected_components;
        visited[s] = true;
        stack.push_back(static_cast<VertexId>(s));
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : mesh.vertex_neighbors[v]) {
                if (!visited[w]) {
                    visited[w] = true;
                    stack.push_back(w);
                }
            }
            // Degenerate faces may connect coincident-index vertices only;
            // shared-face vertices without an edge still belong together.
            for (FaceId f : mesh.vertex_faces[v]) {
                for (VertexId w : mesh.faces[f]) {
                    if (!visited[w]) {
                        visited[w] = true;
                        stack.push_back(w);
                    }
                }
            }
        }
    }

    return report;
}

} // namespace rsimp
