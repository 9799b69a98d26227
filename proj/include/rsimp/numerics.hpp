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
#include <utility>

#include "rsimp/geom.hpp"

namespace rsimp {

// Symmetric 3x3 matrix, six unique coefficients.
struct Sym3 {
    double xx = 0.0, xy = 0.0, xz = 0.0;
    double yy = 0.0, yz = 0.0;
    double zz = 0.0;

    // Accumulates the outer product n * n^T (optionally scaled).
    void add_outer(const Vec3& n, double weight = 1.0) {
        xx += weight * n.x * n.x;
        xy += weight * n.x * n.y;
        xz += weight * n.x * n.z;
        yy += weight * n.y * n.y;
        yz += weight * n.y * n.z;
        zz += weight * n.z * n.z;
    }

    Vec3 apply(const Vec3& v) const {
        return {xx * v.x + xy * v.y + xz * v.z,
                xy * v.x + yy * v.y + yz * v.z,
                xz * v.x + yz * v.y + zz * v.z};
    }

    double trace() const { return xx + yy + zz; }

    double determinant() const {
        return xx * (yy * zz - yz * yz) - xy * (xy * zz - yz * xz) + xz * (xy * yz - yy * xz);
    }

    double frobenius_norm() const {
        return std::sqrt(xx * xx + yy * yy + zz * zz + 2.0 * (xy * xy + xz * xz + yz * yz));
    }
};

// Result of a symmetric 3x3 eigendecomposition. Eigenvalues are sorted in
// descending order; vectors[i] is the unit eigenvector paired with values[i].
// Each eigenvector's largest-magnitude component is made positive so the
// decomposition is deterministic.
struct EigenDecomposition {
    std::array<double, 3> values{};
    std::array<Vec3, 3> vectors{};
};

// Plane n . x + d = 0 with unit normal.
struct Plane {
    Vec3 normal;
    double d = 0.0;

    static Plane from_point(const Vec3& unit_normal, const Vec3& point) {
        return {unit_normal, -dot(unit_normal, point)};
    }

    double signed_distance(const Vec3& p) const { return dot(normal, p) + d; }
};

// Cyclic Jacobi eigendecomposition for symmetric 3x3 matrices. Sweeps stop
// when the off-diagonal Frobenius norm drops below 1e-12 * ||A|| or after 50
// sweeps. Throws ErrorKind::numeric for non-finite input.
EigenDecomposition jacobi_eigen(const Sym3& a);

// Minimizes Q(v) = v^T A v + 2 B^T v + c for an accumulated plane quadric.
// Returns the unique minimizer -A^-1 B when A is well conditioned (smallest
// eigenvalue >= 1e-8 * largest); otherwise returns the fallback point with
// the second member set.
std::pair<Vec3, bool> solve_min_quadric(const Sym3& a, const Vec3& b, const Vec3& fallback);

// Component of v orthogonal to a unit plane normal.
inline Vec3 project_onto_plane(const Vec3& v, const Vec3& unit_normal) {
    return v - unit_normal * dot(v, unit_normal);
}

// Angle between two nonzero vectors in degrees, in [0, 180]. Throws
// ErrorKind::numeric when either vector is zero.
double angle_between_deg(const Vec3& u, const Vec3& v);

} // namespace rsimp
