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

#include "rsimp/cli.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "rsimp/error.hpp"
#include "rsimp/mesh_io.hpp"
#include "rsimp/metro.hpp"
#include "rsimp/procgen.hpp"
#include "rsimp/vclust.hpp"

namespace rsimp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

MeshEncoding encoding_for(const RunConfig& config, const std::string& path) {
    if (config.output_format) {
        if (*config.output_format == "obj")
            return MeshEncoding::obj;
        if (*config.output_format == "ply")
            return MeshEncoding::ply_binary;
        throw Error(ErrorKind::structure, "unknown format '" + *config.output_format + "'");
    }
    return format_from_path(path) == MeshFormat::ply ? MeshEncoding::ply_binary
                                                     : MeshEncoding::obj;
}

Mesh load_input(const RunConfig& config, const std::string& path, std::ostream& out) {
    std::vector<std::string> warnings;
    Mesh mesh = read_mesh(path, &warnings);
    if (config.verbosity > 0)
        for (const std::string& w : warnings)
            out << "note=" << w << '\n';
    return mesh;
}

std::optional<Duration> budget_of(const RunConfig& config) {
    if (!config.time_budget)
        return std::nullopt;
    return std::chrono::duration_cast<Duration>(*config.time_budget);
}

void report_output(std::ostream& out, const SimplificationState& state,
                   const SimplifiedMesh& output) {
    out << "output_vertices=" << output.vertices.size() << '\n';
    out << "output_faces=" << output.faces.size() << '\n';
    out << "splits=" << state.elapsed_splits << '\n';
    out << "last_split_extra_components=" << state.last_split_extra_components << '\n';
}

int run_simplify_like(const RunConfig& config, std::ostream& out) {
    const auto start = Clock::now();
    Mesh mesh = load_input(config, config.input_path, out);
    out << "input_vertices=" << mesh.vertex_count() << '\n';
    out << "input_faces=" << mesh.face_count() << '\n';

    SimplifyOptions options;
    options.topology_check = config.topology_check;

    const bool resuming = config.command == Command::refine || !config.resume_path.empty();
    std::string state_source = config.resume_path;
    if (config.command == Command::refine && state_source.empty())
        state_source = config.checkpoint_path;
    if (config.command == Command::refine && state_source.empty())
        throw Error(ErrorKind::structure, "refine needs --checkpoint or --resume");

    SimplificationState state;
    SimplifiedMesh output;

    if (config.target_faces) {
        if (resuming)
            throw Error(ErrorKind::structure, "--faces cannot be combined with a resumed state");
        FaceTargetResult result =
            simplify_to_face_target(mesh, *config.target_faces, budget_of(config), options);
        state = std::move(result.state);
        output = std::move(result.output);
        out << "face_target_rounds=" << result.rounds << '\n';
        out << "final_vertex_target=" << result.final_vertex_target << '\n';
    } else {
        std::size_t target = 0;
        if (config.target_vertices)
            target = *config.target_vertices;
        else if (config.time_budget)
            target = mesh.vertex_count(); // budget-only mode splits until time runs out
        else
            throw Error(ErrorKind::structure, "need --vertices, --faces or --time-budget");

        if (resuming) {
            state = load_checkpoint(state_source, mesh);
            output = refine(state, mesh, target, budget_of(config), options);
        } else {
            if (target > mesh.vertex_count())
                out << "warning=target exceeds input vertices, clamping to "
                    << mesh.vertex_count() << '\n';
            auto result = simplify(mesh, target, budget_of(config), options);
            state = std::move(result.state);
            output = std::move(result.output);
        }
    }

    out << "split_loop_ms=" << state.split_loop_seconds * 1000.0 << '\n';
    out << "post_ms=" << state.post_process_seconds * 1000.0 << '\n';

    if (!config.output_path.empty())
        write_mesh(output, config.output_path, encoding_for(config, config.output_path));
    if (config.command == Command::simplify && !config.checkpoint_path.empty())
        save_checkpoint(state, mesh, config.checkpoint_path);

    report_output(out, state, output);
    out << "elapsed_ms=" << ms_since(start) << '\n';
    return 0;
}

int run_cluster(const RunConfig& config, std::ostream& out) {
    const auto start = Clock::now();
    Mesh mesh = load_input(config, config.input_path, out);
    out << "input_vertices=" << mesh.vertex_count() << '\n';
    out << "input_faces=" << mesh.face_count() << '\n';

    int resolution = config.resolution;
    if (resolution < 1) {
        if (!config.target_vertices)
            throw Error(ErrorKind::structure, "cluster needs --resolution or --vertices");
        resolution = resolution_for_target(mesh, *config.target_vertices);
    }
    out << "resolution=" << resolution << '\n';

    SimplifiedMesh output = cluster_simplify(mesh, resolution);
    if (!config.output_path.empty())
        write_mesh(output, config.output_path, encoding_for(config, config.output_path));

    out << "output_vertices=" << output.vertices.size() << '\n';
    out << "output_faces=" << output.faces.size() << '\n';
    out << "elapsed_ms=" << ms_since(start) << '\n';
    return 0;
}

int run_measure(const RunConfig& config, std::ostream& out) {
    Mesh original = load_input(config, config.input_path, out);
    Mesh simplified = load_input(config, config.input_b_path, out);

    ErrorReport report = mean_error(original, simplified, config.samples, config.seed);

    char line[128];
    auto emit = [&](const char* key, double value) {
        std::snprintf(line, sizeof line, "%s=%.17g\n", key, value);
        out << line;
    };
    emit("mean_fwd", report.mean_forward);
    emit("mean_bwd", report.mean_backward);
    emit("mean_sym", report.mean_symmetric);
    emit("diag", report.normalizer);
    emit("percent", report.percent);
    out << "samples=" << report.sample_count << '\n';
    out << "seed=" << report.seed << '\n';
    if (report.degenerate_target)
        out << "degenerate_target=1\n";

    if (!config.json_path.empty()) {
        nlohmann::json doc{
            {"mean_fwd", report.mean_forward},
            {"mean_bwd", report.mean_backward},
            {"mean_sym", report.mean_symmetric},
            {"diag", report.normalizer},
            {"percent", report.percent},
            {"samples", report.sample_count},
            {"seed", report.seed},
            {"degenerate_target", report.degenerate_target},
        };
        if (config.json_path == "-")
            out << doc.dump(2) << '\n';
        else
            write_text_file(config.json_path, doc.dump(2) + "\n");
    }
    return 0;
}

int run_bench(const RunConfig& config, std::ostream& out) {
    for (int size : config.bench_sizes) {
        Mesh mesh;
        if (config.bench_shape == "torus") {
            mesh = make_torus_with_faces(size);
        } else if (config.bench_shape == "grid") {
            int cells = std::max(1, static_cast<int>(std::lround(std::sqrt(size / 2.0))));
            mesh = make_grid(cells, cells);
        } else {
            throw Error(ErrorKind::structure, "unknown bench shape '" + config.bench_shape + "'");
        }

        for (int target : config.bench_targets) {
            auto start = Clock::now();
            auto result = simplify(mesh, static_cast<std::size_t>(target), std::nullopt,
                                   SimplifyOptions{config.topology_check});
            double total = ms_since(start);
            out << "shape=" << config.bench_shape << " input_faces=" << mesh.face_count()
                << " target_vertices=" << target
                << " output_vertices=" << result.output.vertices.size()
                << " output_faces=" << result.output.faces.size()
                << " split_ms=" << result.state.split_loop_seconds * 1000.0
                << " total_ms=" << total << '\n';
        }
    }
    return 0;
}

int run_info(const RunConfig& config, std::ostream& out) {
    Mesh mesh = load_input(config, config.input_path, out);
    ValidationReport report = validate(mesh);
    out << "vertices=" << mesh.vertex_count() << '\n';
    out << "faces=" << mesh.face_count() << '\n';
    out << "total_area=" << mesh.total_area << '\n';
    out << "bbox_diagonal=" << bounding_box(mesh).diagonal() << '\n';
    out << "degenerate_faces=" << report.degenerate_faces << '\n';
    out << "duplicate_faces=" << report.duplicate_faces << '\n';
    out << "unreferenced_vertices=" << report.unreferenced_vertices << '\n';
    out << "connected_components=" << report.connected_components << '\n';
    return 0;
}

} // namespace

std::size_t initial_vertex_target_for_faces(std::size_t target_faces) {
    return std::max<std::size_t>(3, target_faces / 2 + 2);
}

FaceTargetResult simplify_to_face_target(const Mesh& mesh, std::size_t target_faces,
                                         std::optional<Duration> time_budget,
                                         const SimplifyOptions& options) {
    if (target_faces < 1)
        throw Error(ErrorKind::structure, "face target must be at least 1");

    const auto deadline = time_budget ? std::optional(Clock::now() + *time_budget) : std::nullopt;
    auto remaining = [&]() -> std::optional<Duration> {
        if (!deadline)
            return std::nullopt;
        auto left = *deadline - Clock::now();
        return left > Duration::zero() ? left : Duration::zero();
    };

    FaceTargetResult result;
    result.final_vertex_target = initial_vertex_target_for_faces(target_faces);

    auto first = simplify(mesh, result.final_vertex_target, remaining(), options);
    result.state = std::move(first.state);
    result.output = std::move(first.output);

    constexpr int kMaxRounds = 64;
    while (result.output.faces.size() < target_faces && result.rounds < kMaxRounds) {
        if (result.state.queue_empty())
            break;
        if (deadline && Clock::now() >= *deadline)
            break;

        std::size_t live = result.state.live_count();
        std::size_t deficit = target_faces - result.output.faces.size();
        double faces_per_vertex =
            live > 0 ? std::max(0.5, double(result.output.faces.size()) / double(live)) : 1.0;
        auto step = static_cast<std::size_t>(std::ceil(double(deficit) / faces_per_vertex));
        result.final_vertex_target = live + std::max<std::size_t>(1, step);

        result.output = refine(result.state, mesh, result.final_vertex_target, remaining(), options);
        ++result.rounds;
        if (result.state.live_count() == live)
            break; // no further progress possible
    }
    return result;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
        case Command::simplify:
        case Command::refine:
            return run_simplify_like(config, out);
        case Command::cluster:
            return run_cluster(config, out);
        case Command::measure:
            return run_measure(config, out);
        case Command::bench:
            return run_bench(config, out);
        case Command::info:
            return run_info(config, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace rsimp
