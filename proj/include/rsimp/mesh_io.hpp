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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rsimp/mesh.hpp"
#include "rsimp/simplify.hpp"

namespace rsimp {

enum class MeshFormat { obj, ply };
enum class MeshEncoding { obj, ply_ascii, ply_binary };

// Guesses obj/ply from the file extension; defaults to obj.
MeshFormat format_from_path(const std::string& path);

// Reads an OBJ or PLY mesh. Positions are taken verbatim; faces with more
// than three corners are fan-triangulated; normals are always recomputed.
// Unsupported PLY properties are skipped with a note in `warnings`.
// Throws ErrorKind::parse with a line (ASCII) or byte (binary) location.
Mesh read_mesh(std::istream& in, MeshFormat format, std::vector<std::string>* warnings = nullptr);
Mesh read_mesh(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Vertex/face view shared by Mesh and SimplifiedMesh writers.
struct MeshView {
    std::span<const Vec3> vertices;
    std::span<const std::array<VertexId, 3>> faces;

    MeshView(const Mesh& m) : vertices(m.vertices), faces(m.faces) {}
    MeshView(const SimplifiedMesh& m) : vertices(m.vertices), faces(m.faces) {}
};

// Writes OBJ (1-indexed), ASCII PLY (17 significant digits, losslessly
// round-trippable) or binary little-endian PLY (bit-exact doubles). Vertex
// order is preserved. Path variants write to a temporary file and rename,
// so a failed write never leaves a partial file.
void write_mesh(MeshView mesh, std::ostream& out, MeshEncoding encoding);
void write_mesh(MeshView mesh, const std::string& path, MeshEncoding encoding);
void write_mesh(MeshView mesh, const std::string& path); // encoding from extension, ply = binary

// Writes a small text artifact (e.g. a JSON report) via temp-and-rename.
void write_text_file(const std::string& path, const std::string& contents);

// Content hash of positions and connectivity; checkpoints refuse to load
// against a mesh with a different digest.
std::uint64_t mesh_digest(const Mesh& mesh);

// Versioned binary snapshot of a simplification state ("RSMP" magic,
// .rsimp-ckpt extension). load(save(s)) restores cluster membership, cached
// statistics, queue order and counters exactly, so a resumed run is
// byte-identical to an uninterrupted one.
void save_checkpoint(const SimplificationState& state, const Mesh& mesh, std::ostream& out);
void save_checkpoint(const SimplificationState& state, const Mesh& mesh,
                     const std::string& path);
SimplificationState load_checkpoint(std::istream& in, const Mesh& mesh);
SimplificationState load_checkpoint(const std::string& path, const Mesh& mesh);

} // namespace rsimp
