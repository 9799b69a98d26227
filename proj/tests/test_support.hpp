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

// Test-only oracles, deliberately independent of the library's
// implementation paths: closed-form eigenvalues, brute-force distances,
// union-find connectivity, direct quadric evaluation.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rsimp/mesh.hpp"
#include "rsimp/metro.hpp"
#include "rsimp/numerics.hpp"

namespace rsimp::testing {

// Eigenvalues of a symmetric 3x3 matrix from the characteristic polynomial
// (trigonometric solution), descending. Independent of the Jacobi path.
inline std::array<double, 3> closed_form_eigenvalues(const Sym3& m) {
    double p1 = m.xy * m.xy + m.xz * m.xz + m.yz * m.yz;
    std::array<double, 3> eig;
    if (p1 == 0.0) {
        eig = {m.xx, m.yy, m.zz};
        std::sort(eig.begin(), eig.end(), std::greater<>());
        return eig;
    }
    double q = m.trace() / 3.0;
    double p2 = (m.xx - q) * (m.xx - q) + (m.yy - q) * (m.yy - q) + (m.zz - q) * (m.zz - q) +
                2.0 * p1;
    double p = std::sqrt(p2 / 6.0);

    // B = (A - qI) / p
    Sym3 b{(m.xx - q) / p, m.xy / p, m.xz / p, (m.yy - q) / p, m.yz / p, (m.zz - q) / p};
    double r = b.determinant() / 2.0;
    r = std::clamp(r, -1.0, 1.0);

    double phi = std::acos(r) / 3.0;
    double e1 = q + 2.0 * p * std::cos(phi);
    double e3 = q + 2.0 * p * std::cos(phi + 2.0 * 3.14159265358979323846 / 3.0);
    double e2 = 3.0 * q - e1 - e3;
    eig = {e1, e2, e3};
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

// Q(v) = v^T A v + 2 B^T v + c.
inline double quadric_value(const Sym3& a, const Vec3& b, double c, const Vec3& v) {
    return dot(v, a.apply(v)) + 2.0 * dot(b, v) + c;
}

inline double brute_force_distance(const Vec3& p, const Mesh& mesh) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < mesh.face_count(); ++f) {
        if (mesh.face_degenerate[f])
            continue;
        best = std::min(best, point_triangle_distance_squared(
                                  p, mesh.vertices[mesh.faces[f][0]],
                                  mesh.vertices[mesh.faces[f][1]],
                                  mesh.vertices[mesh.faces[f][2]]));
    }
    return std::sqrt(best);
}

// Union-find over the subgraph induced by the given vertices and the edges
// of the given faces.
class ComponentOracle {
public:
    ComponentOracle(const Mesh& mesh, const std::vector<VertexId>& vertices,
                    const std::vector<FaceId>& faces) {
        parent_.resize(mesh.vertex_count());
        std::iota(parent_.begin(), parent_.end(), 0);
        in_set_.assign(mesh.vertex_count(), false);
        for (VertexId v : vertices)
            in_set_[v] = true;
        for (FaceId f : faces) {
            const auto& tri = mesh.faces[f];
            for (int k = 0; k < 3; ++k) {
                VertexId u = tri[k], w = tri[(k + 1) % 3];
                if (u != w && in_set_[u] && in_set_[w])
                    unite(u, w);
            }
        }
        for (VertexId v : vertices)
            roots_.push_back(find(v));
        std::sort(roots_.begin(), roots_.end());
        roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
    }

    std::size_t component_count() const { return roots_.size(); }

    bool same_component(VertexId a, VertexId b) { return find(a) == find(b); }

private:
    VertexId find(VertexId v) {
        while (parent_[v] != v)
            v = parent_[v] = parent_[parent_[v]];
        return v;
    }
    void unite(VertexId a, VertexId b) { parent_[find(a)] = find(b); }

    std::vector<VertexId> parent_;
    std::vector<bool> in_set_;
    std::vector<VertexId> roots_;
};

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Vec3 random_unit_vector(std::mt19937_64& rng) {
    for (;;) {
        Vec3 v{2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0,
               2.0 * uniform01(rng) - 1.0};
        double len_sq = length_squared(v);
        if (len_sq > 1e-8 && len_sq <= 1.0)
            return v / std::sqrt(len_sq);
    }
}

inline std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string temp_path(const std::string& name) {
    return "rsimp_test_" + name;
}

} // namespace rsimp::testing
