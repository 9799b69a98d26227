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

#include "rsimp/procgen.hpp"

#include <cmath>

#include "rsimp/error.hpp"

namespace rsimp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Mesh make_grid(int nx, int ny) {
    if (nx < 1 || ny < 1)
        throw Error(ErrorKind::structure, "grid needs at least one cell per axis");
    std::vector<Vec3> positions;
    positions.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            positions.push_back({double(i) / nx, double(j) / ny, 0.0});

    auto vid = [nx](int i, int j) { return static_cast<VertexId>(j * (nx + 1) + i); };
    std::vector<std::array<VertexId, 3>> faces;
    faces.reserve(static_cast<std::size_t>(nx) * ny * 2);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            VertexId a = vid(i, j), b = vid(i + 1, j), c = vid(i + 1, j + 1), d = vid(i, j + 1);
            faces.push_back({a, b, c});
            faces.push_back({a, c, d});
        }
    }
    return build_mesh(std::move(positions), std::move(faces));
}

Mesh make_torus(int major_segments, int minor_segments, double major_radius, double tube_radius) {
    if (major_segments < 3 || minor_segments < 3)
        throw Error(ErrorKind::structure, "torus needs at least 3 segments per ring");
    std::vector<Vec3> positions;
    positions.reserve(static_cast<std::size_t>(major_segments) * minor_segments);
    for (int i = 0; i < major_segments; ++i) {
        double u = 2.0 * kPi * i / major_segments;
        double cu = std::cos(u), su = std::sin(u);
        for (int j = 0; j < minor_segments; ++j) {
            double v = 2.0 * kPi * j / minor_segments;
            double r = major_radius + tube_radius * std::cos(v);
            positions.push_back({r * cu, r * su, tube_radius * std::sin(v)});
        }
    }

    auto vid = [minor_segments, major_segments](int i, int j) {
        return static_cast<VertexId>((i % major_segments) * minor_segments + (j % minor_segments));
    };
    std::vector<std::array<VertexId, 3>> faces;
    faces.reserve(static_cast<std::size_t>(major_segments) * minor_segments * 2);
    for (int i = 0; i < major_segments; ++i) {
        for (int j = 0; j < minor_segments; ++j) {
            VertexId a = vid(i, j), b = vid(i + 1, j), c = vid(i + 1, j + 1), d = vid(i, j + 1);
            faces.push_back({a, b, c});
            faces.push_back({a, c, d});
        }
    }
    return build_mesh(std::move(positions), std::move(faces));
}

Mesh make_torus_with_faces(int target_faces) {
    if (target_faces < 18)
        throw Error(ErrorKind::structure, "torus face target too small");
    int minor = std::max(3, static_cast<int>(std::lround(std::sqrt(target_faces / 2.0))));
    int major = std::max(3, static_cast<int>(std::lround(target_faces / (2.0 * minor))));
    return make_torus(major, minor, 1.0, 0.4);
}

Mesh make_uv_sphere(int rings, int segments, double radius, const Vec3& center) {
    if (rings < 2 || segments < 3)
        throw Error(ErrorKind::structure, "sphere needs rings >= 2 and segments >= 3");
    std::vector<Vec3> positions;
    positions.push_back(center + Vec3{0, 0, radius}); // north pole
    for (int r = 1; r < rings; ++r) {
        double phi = kPi * r / rings;
        for (int s = 0; s < segments; ++s) {
            double theta = 2.0 * kPi * s / segments;
            positions.push_back(center + Vec3{radius * std::sin(phi) * std::cos(theta),
                                              radius * std::sin(phi) * std::sin(theta),
                                              radius * std::cos(phi)});
        }
    }
    positions.push_back(center + Vec3{0, 0, -radius}); // south pole

    auto ring_vid = [segments](int r, int s) {
        return static_cast<VertexId>(1 + (r - 1) * segments + (s % segments));
    };
    VertexId south = static_cast<VertexId>(positions.size() - 1);

    std::vector<std::array<VertexId, 3>> faces;
    for (int s = 0; s < segments; ++s)
        faces.push_back({0, ring_vid(1, s), ring_vid(1, s + 1)});
    for (int r = 1; r < rings - 1; ++r) {
        for (int s = 0; s < segments; ++s) {
            VertexId a = ring_vid(r, s), b = ring_vid(r, s + 1);
            VertexId c = ring_vid(r + 1, s + 1), d = ring_vid(r + 1, s);
            faces.push_back({a, d, c});
            faces.push_back({a, c, b});
        }
    }
    for (int s = 0; s < segments; ++s)
        faces.push_back({south, ring_vid(rings - 1, s + 1), ring_vid(rings - 1, s)});
    return build_mesh(std::move(positions), std::move(faces));
}

Mesh make_cylinder_band(int segments, int rows, double radius, double z0, double z1,
                        double arc_degrees) {
    if (segments < 2 || rows < 1)
        throw Error(ErrorKind::structure, "cylinder band needs segments >= 2 and rows >= 1");
    bool closed = arc_degrees >= 360.0;
    double arc = closed ? 2.0 * kPi : arc_degrees * kPi / 180.0;
    int columns = closed ? segments : segments + 1;

    std::vector<Vec3> positions;
    for (int r = 0; r <= rows; ++r) {
        double z = z0 + (z1 - z0) * r / rows;
        for (int s = 0; s < columns; ++s) {
            double theta = arc * s / segments;
            positions.push_back({radius * std::cos(theta), radius * std::sin(theta), z});
        }
    }

    auto vid = [columns, closed](int r, int s) {
        return static_cast<VertexId>(r * columns + (closed ? s % columns : s));
    };
    std::vector<std::array<VertexId, 3>> faces;
    for (int r = 0; r < rows; ++r) {
        for (int s = 0; s < segments; ++s) {
            VertexId a = vid(r, s), b = vid(r, s + 1), c = vid(r + 1, s + 1), d = vid(r + 1, s);
            faces.push_back({a, b, c});
            faces.push_back({a, c, d});
        }
    }
    return build_mesh(std::move(positions), std::move(faces));
}

Mesh make_spherical_cap(int rings, int segments, double radius, double cap_degrees) {
    if (rings < 1 || segments < 3)
        throw Error(ErrorKind::structure, "cap needs rings >= 1 and segments >= 3");
    double cap = cap_degrees * kPi / 180.0;

    std::vector<Vec3> positions;
    positions.push_back({0, 0, radius});
    for (int r = 1; r <= rings; ++r) {
        double phi = cap * r / rings;
        for (int s = 0; s < segments; ++s) {
            double theta = 2.0 * kPi * s / segments;
            positions.push_back({radius * std::sin(phi) * std::cos(theta),
                                 radius * std::sin(phi) * std::sin(theta),
                                 radius * std::cos(phi)});
        }
    }

    auto vid = [segments](int r, int s) {
        return static_cast<VertexId>(1 + (r - 1) * segments + (s % segments));
    };
    std::vector<std::array<VertexId, 3>> faces;
    for (int s = 0; s < segments; ++s)
        faces.push_back({0, vid(1, s), vid(1, s + 1)});
    for (int r = 1; r < rings; ++r) {
        for (int s = 0; s < segments; ++s) {
            VertexId a = vid(r, s), b = vid(r, s + 1), c = vid(r + 1, s + 1), d = vid(r + 1, s);
            faces.push_back({a, c, b});
            faces.push_back({a, d, c});
        }
    }
    return build_mesh(std::move(positions), std::move(faces));
}

Mesh make_cube(const Vec3& lo, const Vec3& hi) {
    std::vector<Vec3> p = {
        {lo.x, lo.y, lo.z}, {hi.x, lo.y, lo.z}, {hi.x, hi.y, lo.z}, {lo.x, hi.y, lo.z},
        {lo.x, lo.y, hi.z}, {hi.x, lo.y, hi.z}, {hi.x, hi.y, hi.z}, {lo.x, hi.y, hi.z},
    };
    std::vector<std::array<VertexId, 3>> f = {
        {0, 2, 1}, {0, 3, 2}, // bottom
        {4, 5, 6}, {4, 6, 7}, // top
        {0, 1, 5}, {0, 5, 4}, // front
        {1, 2, 6}, {1, 6, 5}, // right
        {2, 3, 7}, {2, 7, 6}, // back
        {3, 0, 4}, {3, 4, 7}, // left
    };
    return build_mesh(std::move(p), std::move(f));
}

Mesh merge_meshes(const Mesh& a, const Mesh& b) {
    std::vector<Vec3> positions = a.vertices;
    positions.insert(positions.end(), b.vertices.begin(), b.vertices.end());
    std::vector<std::array<VertexId, 3>> faces = a.faces;
    auto offset = static_cast<VertexId>(a.vertices.size());
    for (const auto& tri : b.faces)
        faces.push_back({tri[0] + offset, tri[1] + offset, tri[2] + offset});
    return build_mesh(std::move(positions), std::move(faces));
}

} // namespace rsimp
