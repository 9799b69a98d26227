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

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rsimp/simplify.hpp"

namespace rsimp {

enum class Command { simplify, refine, cluster, measure, bench, info };

struct RunConfig {
    Command command = Command::info;

    std::string input_path;    // -i / -a
    std::string input_b_path;  // -b (measure)
    std::string output_path;   // -o

    std::optional<std::size_t> target_vertices;
    std::optional<std::size_t> target_faces;
    std::optional<std::chrono::milliseconds> time_budget;

    std::string checkpoint_path; // simplify: save here; refine: load here
    std::string resume_path;     // load state here before splitting

    int resolution = 0;          // cluster
    std::size_t samples = 0;     // measure; 0 = default policy
    std::uint64_t seed = 42;
    std::string json_path;       // measure: also emit a JSON report ("-" = stdout)

    std::vector<int> bench_sizes{5000, 10000, 20000, 40000};
    std::vector<int> bench_targets{400};
    std::string bench_shape = "torus"; // torus | grid

    std::optional<std::string> output_format; // "obj" | "ply", else by extension
    bool topology_check = true;
    int verbosity = 0;
};

// Executes one command, writing key=value report lines to `out` and a
// one-line diagnostic to `err` on failure. Returns the process exit status;
// artifacts are written via temp-file-and-rename, so a nonzero status never
// leaves a partial output behind.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// First vertex-target estimate for a face target, from V ~ F/2 + 2 on closed
// triangle meshes.
std::size_t initial_vertex_target_for_faces(std::size_t target_faces);

struct FaceTargetResult {
    SimplificationState state;
    SimplifiedMesh output;
    std::size_t final_vertex_target = 0;
    int rounds = 0;
};

// Face-count control on top of the vertex-counting splitter: simplify to the
// Euler estimate, then refine in deficit-sized steps until the output face
// count reaches the target or the queue is exhausted. The face target is
// never overshot by more than one refinement round.
FaceTargetResult simplify_to_face_target(const Mesh& mesh, std::size_t target_faces,
                                         std::optional<Duration> time_budget = std::nullopt,
                                         const SimplifyOptions& options = {});

} // namespace rsimp
