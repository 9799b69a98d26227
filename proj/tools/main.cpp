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

#include <iostream>

#include <CLI11.hpp>

#include "rsimp/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Coarse-to-fine mesh simplification with exact output-size control,\n"
                 "time budgets and resumable refinement."};
    app.require_subcommand(1);

    rsimp::RunConfig config;
    long long vertices = -1, faces = -1, budget_ms = -1;
    std::string format;
    std::string bench_sizes, bench_targets;
    bool no_topology_check = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("-v,--verbose", config.verbosity, "More output");
    };
    auto add_targets = [&](CLI::App* cmd) {
        cmd->add_option("--vertices", vertices, "Target output vertex count");
        cmd->add_option("--time-budget", budget_ms, "Split-loop wall-clock budget in ms");
    };
    auto add_output = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("-o,--output", config.output_path, "Output mesh file");
        if (required)
            opt->required();
        cmd->add_option("--format", format, "Output format: obj or ply (default: by extension)");
    };

    auto* simplify = app.add_subcommand("simplify", "Simplify a mesh to a target size");
    simplify->add_option("-i,--input", config.input_path, "Input mesh (.obj/.ply)")->required();
    add_output(simplify, false);
    add_targets(simplify);
    simplify->add_option("--faces", faces, "Target output face count");
    simplify->add_option("--checkpoint", config.checkpoint_path,
                         "Save the final splitting state here for later refinement");
    simplify->add_option("--resume", config.resume_path,
                         "Continue from a previously saved checkpoint");
    simplify->add_flag("--no-topology-check", no_topology_check,
                       "Skip the disjoint-component check (debugging aid, hurts quality)");
    add_common(simplify);

    auto* refine = app.add_subcommand("refine", "Continue a checkpointed simplification");
    refine->add_option("-i,--input", config.input_path, "Input mesh (.obj/.ply)")->required();
    add_output(refine, false);
    refine->add_option("--checkpoint", config.checkpoint_path, "Checkpoint to continue from");
    refine->add_option("--resume", config.resume_path, "Checkpoint to continue from (alias)");
    add_targets(refine);
    add_common(refine);

    auto* cluster = app.add_subcommand("cluster", "Uniform vertex-clustering baseline");
    cluster->add_option("-i,--input", config.input_path, "Input mesh (.obj/.ply)")->required();
    add_output(cluster, false);
    cluster->add_option("--resolution", config.resolution, "Voxel grid resolution per axis");
    cluster->add_option("--vertices", vertices,
                        "Pick the smallest resolution reaching this vertex count");
    add_common(cluster);

    auto* measure = app.add_subcommand("measure", "Sampled mean surface error between two meshes");
    measure->add_option("-a,--original", config.input_path, "Original mesh")->required();
    measure->add_option("-b,--simplified", config.input_b_path, "Simplified mesh")->required();
    measure->add_option("--samples", config.samples, "Samples per side (default 100/face, capped)");
    measure->add_option("--seed", config.seed, "Sampling seed");
    measure->add_option("--json", config.json_path, "Also write a JSON report ('-' for stdout)");
    add_common(measure);

    auto* bench = app.add_subcommand("bench", "Timing table over procedural meshes");
    bench->add_option("--bench-sizes", bench_sizes, "Comma-separated input face counts");
    bench->add_option("--targets", bench_targets, "Comma-separated output vertex targets");
    bench->add_option("--shape", config.bench_shape, "Generator: torus or grid");
    add_common(bench);

    auto* info = app.add_subcommand("info", "Validate a mesh and print its statistics");
    info->add_option("-i,--input", config.input_path, "Input mesh (.obj/.ply)")->required();
    add_common(info);

    CLI11_PARSE(app, argc, argv);

    if (simplify->parsed()) config.command = rsimp::Command::simplify;
    if (refine->parsed()) config.command = rsimp::Command::refine;
    if (cluster->parsed()) config.command = rsimp::Command::cluster;
    if (measure->parsed()) config.command = rsimp::Command::measure;
    if (bench->parsed()) config.command = rsimp::Command::bench;
    if (info->parsed()) config.command = rsimp::Command::info;

    if (vertices >= 0)
        config.target_vertices = static_cast<std::size_t>(vertices);
    if (faces >= 0)
        config.target_faces = static_cast<std::size_t>(faces);
    if (budget_ms >= 0)
        config.time_budget = std::chrono::milliseconds(budget_ms);
    if (!format.empty())
        config.output_format = format;
    config.topology_check = !no_topology_check;

    auto parse_list = [](const std::string& text, std::vector<int>& into) {
        if (text.empty())
            return;
        into.clear();
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string::npos)
                comma = text.size();
            into.push_back(std::stoi(text.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    };
    parse_list(bench_sizes, config.bench_sizes);
    parse_list(bench_targets, config.bench_targets);

    if (simplify->parsed() && config.target_vertices && config.target_faces) {
        std::cerr << "error: choose one of --vertices and --faces\n";
        return 2;
    }

    return rsimp::run(config, std::cout, std::cerr);
}
