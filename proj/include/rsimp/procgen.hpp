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

#include "rsimp/mesh.hpp"

namespace rsimp {

// Regular grid over [0,1]^2 in the z=0 plane; nx*ny quads, two triangles each.
Mesh make_grid(int nx, int ny);

// Torus with major radius and tube radius, major_segments * minor_segments
// quads (twice that in triangles), centered at the origin in the xy plane.
Mesh make_torus(int major_segments, int minor_segments, double major_radius, double tube_radius);

// Torus with approximately the requested triangle count (rounded to the
// nearest full segment grid); defaults major_radius=1, tube_radius=0.4.
Mesh make_torus_with_faces(int target_faces);

// Latitude/longitude sphere with triangle fans at the poles.
Mesh make_uv_sphere(int rings, int segments, double radius, const Vec3& center);

// Open cylinder side wall (no caps) along z from z0 to z1, optionally only a
// partial arc of arc_degrees (360 for the full cylinder).
Mesh make_cylinder_band(int segments, int rows, double radius, double z0, double z1,
                        double arc_degrees = 360.0);

// Spherical cap around +z up to the given polar angle.
Mesh make_spherical_cap(int rings, int segments, double radius, double cap_degrees);

// Axis-aligned cube surface (12 triangles).
Mesh make_cube(const Vec3& min_corner, const Vec3& max_corner);

// Concatenates two meshes into one (disjoint index ranges).
Mesh merge_meshes(const Mesh& a, const Mesh& b);

} // namespace rsimp
