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

#include "rsimp/numerics.hpp"

#include <cmath>

#include "rsimp/error.hpp"

namespace rsimp {

namespace {

constexpr int kMaxSweeps = 50;
constexpr double kOffDiagonalTolerance = 1e-12;

// One Jacobi rotation zeroing a[p][q], updating the eigenvector columns.
void rotate(double a[3][3], double v[3][3], int p, int q) {
    double apq = a[p][q];
    if (apq == 0.0)
        return;

    double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    double c = 1.0 / std::sqrt(t * t + 1.0);
    double s = t * c;
    double tau = s / (1.0 + c);

    double app = a[p][p];
    double aqq = a[q][q];
    a[p][p] = app - t * apq;
    a[q][q] = aqq + t * apq;
    a[p][q] = a[q][p] = 0.0;

    for (int r = 0; r < 3; ++r) {
        if (r == p || r == q)
            continue;
        double arp = a[r][p];
        double arq = a[r][q];
        a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
        a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
    }

    for (int r = 0; r < 3; ++r) {
        double vrp = v[r][p];
        double vrq = v[r][q];
        v[r][p] = vrp - s * (vrq + tau * vrp);
        v[r][q] = vrq + s * (vrp - tau * vrq);
    }
}

void fix_sign(Vec3& v) {
    double ax = std::abs(v.x), ay = std::abs(v.y), az = std::abs(v.z);
    double lead = v.x;
    if (ay > ax && ay >= az)
        lead = v.y;
    else if (az > ax && az > ay)
        lead = v.z;
    if (lead < 0.0)
        v = -v;
}

} // namespace

EigenDecomposition jacobi_eigen(const Sym3& m) {
    if (!std::isfinite(m.xx) || !std::isfinite(m.xy) || !std::isfinite(m.xz) ||
        !std::isfinite(m.yy) || !std::isfinite(m.yz) || !std::isfinite(m.zz))
        throw Error(ErrorKind::numeric, "jacobi_eigen: non-finite matrix entry");

    double a[3][3] = {{m.xx, m.xy, m.xz}, {m.xy, m.yy, m.yz}, {m.xz, m.yz, m.zz}};
    double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const double scale = m.frobenius_norm();

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = std::sqrt(2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]));
        if (off <= kOffDiagonalTolerance * scale)
            break;
        rotate(a, v, 0, 1);
        rotate(a, v, 0, 2);
        rotate(a, v, 1, 2);
    }

    int order[3] = {0, 1, 2};
    // Descending by eigenvalue; equal values keep column order.
    for (int i = 0; i < 2; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (a[order[j]][order[j]] > a[order[i]][order[i]])
                std::swap(order[i], order[j]);

    EigenDecomposition out;
    for (int i = 0; i < 3; ++i) {
        int k = order[i];
        out.values[i] = a[k][k];
        out.vectors[i] = Vec3{v[0][k], v[1][k], v[2][k]};
        fix_sign(out.vectors[i]);
    }
    return out;
}

std::pair<Vec3, bool> solve_min_quadric(const Sym3& a, const Vec3& b, const Vec3& fallback) {
    EigenDecomposition eig = jacobi_eigen(a);
    double largest = eig.values[0];
    double smallest = eig.values[2];
    if (!(largest > 0.0) || smallest < 1e-8 * largest)
        return {fallback, true};

    // v = -A^-1 B through the eigenbasis.
    Vec3 v{};
    for (int i = 0; i < 3; ++i)
        v -= eig.vectors[i] * (dot(eig.vectors[i], b) / eig.values[i]);
    return {v, false};
}

double angle_between_deg(const Vec3& u, const Vec3& v) {
    double lu = length(u);
    double lv = length(v);
    if (!(lu > 0.0) || !(lv > 0.0))
        throw Error(ErrorKind::numeric, "angle_between: zero-length vector");
    double c = dot(u, v) / (lu * lv);
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c) * (180.0 / 3.14159265358979323846);
}

} // namespace rsimp
