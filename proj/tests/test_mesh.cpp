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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "rsimp/error.hpp"
#include "rsimp/mesh.hpp"
#include "rsimp/procgen.hpp"
#include "test_support.hpp"

using namespace rsimp;

TEST_CASE("unit right triangle has the expected derived data") {
    Mesh mesh = build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
    CHECK(mesh.face_normal[0] == Vec3{0, 0, 1});
    CHECK(mesh.face_area[0] == doctest::Approx(0.5));
    CHECK(mesh.face_midpoint[0].x == doctest::Approx(1.0 / 3.0));
    CHECK(mesh.face_midpoint[0].y == doctest::Approx(1.0 / 3.0));
    CHECK(mesh.face_midpoint[0].z == 0.0);
    CHECK_FALSE(mesh.face_degenerate[0]);
}

TEST_CASE("two triangles sharing an edge list each other's vertices once") {
    Mesh mesh = build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}},
                           {{0, 1, 2}, {1, 3, 2}});
    auto count = [&](VertexId v, VertexId w) {
        return std::count(mesh.vertex_neighbors[v].begin(), mesh.vertex_neighbors[v].end(), w);
    };
    CHECK(count(1, 2) == 1); // shared edge, two incident faces, still listed once
    CHECK(count(2, 1) == 1);
    CHECK(count(0, 3) == 0);
    CHECK(mesh.vertex_faces[1].size() == 2);
    CHECK(mesh.vertex_faces[0].size() == 1);
}

TEST_CASE("face with two identical vertices is degenerate") {
    Mesh mesh = build_mesh({{0, 0, 0}, {1, 0, 0}}, {{0, 1, 1}});
    CHECK(mesh.face_area[0] == 0.0);
    CHECK(mesh.face_normal[0] == Vec3{0, 0, 0});
    CHECK(mesh.face_degenerate[0]);
    CHECK(mesh.vertex_faces[1].size() == 1); // listed once despite the repeat
}

TEST_CASE("build_mesh rejects bad input") {
    CHECK_THROWS_AS(build_mesh({{0, 0, 0}}, {}), Error);
    CHECK_THROWS_AS(build_mesh({{0, 0, 0}, {1, 0, 0}}, {{0, 1, 2}}), Error);
    CHECK_THROWS_AS(build_mesh({{0, 0, 0}, {1, 0, 0}}, {{0, 1, -1}}), Error);
}

TEST_CASE("bounding box basics") {
    Mesh cube = make_cube({0, 0, 0}, {1, 1, 1});
    Aabb box = bounding_box(cube);
    CHECK(box.min == Vec3{0, 0, 0});
    CHECK(box.max == Vec3{1, 1, 1});
    CHECK(box.diagonal() == doctest::Approx(std::sqrt(3.0)));

    Mesh flat = build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
    CHECK(bounding_box(flat).diagonal() > 0.0);

    // Translation moves the box by exactly the same offset.
    Vec3 offset{3.5, -2.0, 7.25};
    std::vector<Vec3> moved = cube.vertices;
    for (Vec3& v : moved)
        v += offset;
    Aabb moved_box = bounding_box(build_mesh(std::move(moved), cube.faces));
    CHECK(moved_box.min == box.min + offset);
    CHECK(moved_box.max == box.max + offset);
}

TEST_CASE("validate counts defects") {
    Mesh cube = make_cube({0, 0, 0}, {1, 1, 1});
    ValidationReport r = validate(cube);
    CHECK(r.degenerate_faces == 0);
    CHECK(r.duplicate_faces == 0);
    CHECK(r.unreferenced_vertices == 0);
    CHECK(r.connected_components == 1);

    Mesh two = merge_meshes(make_cube({0, 0, 0}, {1, 1, 1}), make_cube({3, 0, 0}, {4, 1, 1}));
    CHECK(validate(two).connected_components == 2);

    // Isolated vertex: referenced by nothing.
    Mesh lonely = build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {9, 9, 9}}, {{0, 1, 2}});
    CHECK(validate(lonely).unreferenced_vertices == 1);
    CHECK(validate(lonely).connected_components == 1);

    Mesh doubled = build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}, {2, 0, 1}});
    CHECK(validate(doubled).duplicate_faces == 1);
}

TEST_CASE("total face area is invariant under rigid transforms") {
    Mesh torus = make_torus(24, 12, 1.0, 0.4);

    // Rotation around a skew axis plus a translation.
    double angle = 0.837;
    double c = std::cos(angle), s = std::sin(angle);
    auto rotate_z = [&](const Vec3& v) { return Vec3{c * v.x - s * v.y, s * v.x + c * v.y, v.z}; };
    std::vector<Vec3> moved;
    for (const Vec3& v : torus.vertices)
        moved.push_back(rotate_z(v) + Vec3{10, -3, 0.5});

    Mesh transformed = build_mesh(std::move(moved), torus.faces);
    CHECK(transformed.total_area ==
          doctest::Approx(torus.total_area).epsilon(1e-9));
}

TEST_CASE("adjacency construction is idempotent") {
    Mesh first = make_torus(12, 8, 1.0, 0.3);
    Mesh second = build_mesh(first.vertices, first.faces);
    CHECK(first.vertex_neighbors == second.vertex_neighbors);
    CHECK(first.vertex_faces == second.vertex_faces);
}

TEST_CASE("face normals are orthogonal to their edges") {
    Mesh torus = make_torus(16, 10, 1.0, 0.35);
    for (std::size_t f = 0; f < torus.face_count(); ++f) {
        if (torus.face_degenerate[f])
            continue;
        const Vec3& a = torus.vertices[torus.faces[f][0]];
        const Vec3& b = torus.vertices[torus.faces[f][1]];
        const Vec3& c = torus.vertices[torus.faces[f][2]];
        const Vec3& n = torus.face_normal[f];
        CHECK(std::abs(dot(n, b - a)) <= 1e-9 * length(b - a));
        CHECK(std::abs(dot(n, c - a)) <= 1e-9 * length(c - a));
        CHECK(length(n) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("adjacency is symmetric and incidence is exact") {
    Mesh sphere = make_uv_sphere(8, 12, 1.0, {0, 0, 0});
    for (std::size_t v = 0; v < sphere.vertex_count(); ++v) {
        for (VertexId w : sphere.vertex_neighbors[v]) {
            const auto& back = sphere.vertex_neighbors[w];
            CHECK(std::count(back.begin(), back.end(), static_cast<VertexId>(v)) == 1);
        }
    }
    std::vector<std::size_t> incidence(sphere.vertex_count(), 0);
    for (const auto& faces : sphere.vertex_faces)
        for (FaceId f : faces) {
            (void)f;
        }
    for (std::size_t f = 0; f < sphere.face_count(); ++f) {
        for (VertexId v : sphere.faces[f]) {
            const auto& list = sphere.vertex_faces[v];
            CHECK(std::count(list.begin(), list.end(), static_cast<FaceId>(f)) == 1);
        }
    }
}
