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

#include "rsimp/simplify.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "rsimp/error.hpp"

namespace rsimp {

namespace {

constexpr double kMidpointBandDegrees = 2.5;

// Reusable per-vertex marks so component searches stay linear in the cluster
// size instead of the mesh size.
struct VertexScratch {
    std::vector<std::uint32_t> member_stamp;
    std::vector<std::uint32_t> visit_stamp;
    std::vector<std::int8_t> bucket;
    std::uint32_t epoch = 0;

    std::uint32_t begin_epoch(std::size_t vertex_count) {
        if (member_stamp.size() < vertex_count) {
            member_stamp.resize(vertex_count, 0);
            visit_stamp.resize(vertex_count, 0);
            bucket.resize(vertex_count, 0);
        }
        if (++epoch == 0) {
            std::fill(member_stamp.begin(), member_stamp.end(), 0);
            std::fill(visit_stamp.begin(), visit_stamp.end(), 0);
            epoch = 1;
        }
        return epoch;
    }
};

VertexScratch& scratch() {
    thread_local VertexScratch s;
    return s;
}

std::vector<Cluster> split_components(const Cluster& cluster, const Mesh& mesh,
                                      VertexScratch& s) {
    const std::uint32_t epoch = s.begin_epoch(mesh.vertex_count());
    for (VertexId v : cluster.vertices)
        s.member_stamp[v] = epoch;

    // bucket doubles as the component index during the search.
    std::vector<Cluster> components;
    std::vector<VertexId> frontier;
    for (VertexId seed : cluster.vertices) {
        if (s.visit_stamp[seed] == epoch)
            continue;
        auto comp_index = static_cast<std::int8_t>(components.size() < 127 ? components.size() : 127);
        Cluster comp;
        frontier.clear();
        frontier.push_back(seed);
        s.visit_stamp[seed] = epoch;
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            VertexId v = frontier[head];
            comp.vertices.push_back(v);
            s.bucket[v] = comp_index;
            for (VertexId w : mesh.vertex_neighbors[v]) {
                if (s.member_stamp[w] == epoch && s.visit_stamp[w] != epoch) {
                    s.visit_stamp[w] = epoch;
                    frontier.push_back(w);
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        components.push_back(std::move(comp));
    }

    if (components.size() == 1)
        return {cluster};

    // More than 127 components in one cluster would alias bucket indices;
    // fall back to per-component membership sets in that case.
    if (components.size() > 127) {
        for (std::size_t c = 0; c < components.size(); ++c) {
            const std::uint32_t comp_epoch = s.begin_epoch(mesh.vertex_count());
            for (VertexId v : components[c].vertices)
                s.member_stamp[v] = comp_epoch;
            for (FaceId f : cluster.faces)
                for (VertexId v : mesh.faces[f])
                    if (s.member_stamp[v] == comp_epoch) {
                        components[c].faces.push_back(f);
                        break;
                    }
        }
        return components;
    }

    for (FaceId f : cluster.faces) {
        std::int8_t seen[3];
        int seen_count = 0;
        for (VertexId v : mesh.faces[f]) {
            if (s.member_stamp[v] != epoch)
                continue;
            std::int8_t c = s.bucket[v];
            bool duplicate = false;
            for (int k = 0; k < seen_count; ++k)
                duplicate = duplicate || seen[k] == c;
            if (!duplicate)
                seen[seen_count++] = c;
        }
        for (int k = 0; k < seen_count; ++k)
            components[seen[k]].faces.push_back(f);
    }
    return components;
}

bool cluster_splittable(const Cluster& cluster) {
    return cluster.vertices.size() >= 2 && cluster.area > 0.0;
}

} // namespace

ClusterId SimplificationState::queue_pop() {
    HeapEntry top = queue_.top();
    queue_.pop();
    return top.id;
}

std::vector<ClusterId> SimplificationState::queue_order() const {
    auto copy = queue_;
    std::vector<ClusterId> order;
    order.reserve(copy.size());
    while (!copy.empty()) {
        order.push_back(copy.top().id);
        copy.pop();
    }
    return order;
}

void compute_cluster_stats(Cluster& cluster, const Mesh& mesh) {
    Vec3 normal_sum{};
    double area = 0.0;
    for (FaceId f : cluster.faces) {
        if (mesh.face_degenerate[f])
            continue;
        normal_sum += mesh.face_normal[f] * mesh.face_area[f];
        area += mesh.face_area[f];
    }
    cluster.mean_normal = normal_sum;
    cluster.area = area;

    Vec3 vertex_sum{};
    for (VertexId v : cluster.vertices)
        vertex_sum += mesh.vertices[v];
    cluster.mean_vertex = cluster.vertices.empty()
                              ? Vec3{}
                              : vertex_sum / double(cluster.vertices.size());

    if (area > 0.0 && mesh.total_area > 0.0) {
        double coplanarity = std::min(length(normal_sum) / area, 1.0);
        cluster.normal_variation = (area / mesh.total_area) * (1.0 - coplanarity);
    } else {
        cluster.normal_variation = 0.0;
    }
}

SimplificationState init_clusters(const Mesh& mesh, const SimplifyOptions& options) {
    const Vec3 center = bounding_box(mesh).center();

    std::array<Cluster, 8> octants;
    std::vector<std::int8_t> octant_of(mesh.vertex_count());
    for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
        const Vec3& p = mesh.vertices[v];
        int code = (p.x >= center.x ? 1 : 0) | (p.y >= center.y ? 2 : 0) | (p.z >= center.z ? 4 : 0);
        octant_of[v] = static_cast<std::int8_t>(code);
        octants[code].vertices.push_back(static_cast<VertexId>(v));
    }
    for (std::size_t f = 0; f < mesh.face_count(); ++f) {
        int seen_mask = 0;
        for (VertexId v : mesh.faces[f]) {
            int code = octant_of[v];
            if (!(seen_mask & (1 << code))) {
                seen_mask |= 1 << code;
                octants[code].faces.push_back(static_cast<FaceId>(f));
            }
        }
    }

    SimplificationState state;
    for (Cluster& octant : octants) {
        if (octant.vertices.empty())
            continue;
        std::vector<Cluster> parts;
        if (options.topology_check)
            parts = split_components(octant, mesh, scratch());
        else
            parts.push_back(std::move(octant));
        for (Cluster& part : parts) {
            part.id = state.next_cluster_id++;
            compute_cluster_stats(part, mesh);
            part.splittable = cluster_splittable(part);
            state.peak_normal_variation =
                std::max(state.peak_normal_variation, part.normal_variation);
            ClusterId id = part.id;
            bool splittable = part.splittable;
            state.clusters.emplace(id, std::move(part));
            if (splittable)
                state.queue_push(id);
        }
    }
    return state;
}

EigenDecomposition analyze_variation(const Cluster& cluster, const Mesh& mesh) {
    Sym3 covariance;
    bool any = false;
    for (FaceId f : cluster.faces) {
        if (mesh.face_degenerate[f])
            continue;
        covariance.add_outer(mesh.face_normal[f]);
        any = true;
    }
    if (!any)
        throw Error(ErrorKind::numeric, "analyze_variation: cluster has no non-degenerate faces");
    return jacobi_eigen(covariance);
}

std::vector<Vec3> choose_split(const EigenDecomposition& eigen, const Vec3& mean_normal) {
    const double largest = eigen.values[0];
    const double max_curvature = eigen.values[1];
    const double min_curvature = eigen.values[2];

    if (max_curvature < 2.0 * min_curvature && largest < 2.0 * max_curvature) {
        // No dominant direction: cut along both curvature directions and the
        // mean normal.
        Vec3 third = normalized(mean_normal);
        if (length_squared(third) == 0.0)
            third = eigen.vectors[0];
        return {eigen.vectors[1], eigen.vectors[2], third};
    }
    if (min_curvature > 0.0 && max_curvature / min_curvature <= 4.0)
        return {eigen.vectors[1], eigen.vectors[2]};
    return {eigen.vectors[1]};
}

Vec3 position_planes(const Cluster& cluster, const Mesh& mesh, const EigenDecomposition& eigen) {
    const Vec3 mean_normal_dir = normalized(cluster.mean_normal);
    if (length_squared(mean_normal_dir) == 0.0)
        return cluster.mean_vertex;

    const Vec3 band_axis = project_onto_plane(eigen.vectors[1], mean_normal_dir);
    const double band_axis_len = length(band_axis);
    if (band_axis_len == 0.0)
        return cluster.mean_vertex;

    const double cos_band = std::cos(kMidpointBandDegrees * 3.14159265358979323846 / 180.0);
    const Vec3& mean_vertex = cluster.mean_vertex;

    Vec3 sum{};
    std::size_t count = 0;
    for (FaceId f : cluster.faces) {
        const Vec3& midpoint = mesh.face_midpoint[f];
        Vec3 projected =
            midpoint - mean_normal_dir * dot(midpoint - mean_vertex, mean_normal_dir);
        Vec3 dir = projected - mean_vertex;
        double len = length(dir);
        if (len == 0.0)
            continue;
        double cos_angle = dot(dir, band_axis) / (len * band_axis_len);
        if (std::abs(cos_angle) >= cos_band) {
            sum += projected;
            ++count;
        }
    }
    return count > 0 ? sum / double(count) : mean_vertex;
}

namespace {

std::vector<Cluster> partition_cluster_impl(const Cluster& cluster, const Mesh& mesh,
                                            const std::vector<Vec3>& plane_normals,
                                            const Vec3& anchor, const SimplifyOptions& options,
                                            VertexScratch& s, int* nonempty_buckets) {
    if (plane_normals.empty() || plane_normals.size() > 3)
        throw Error(ErrorKind::structure, "partition_cluster: need 1-3 plane normals");
    if (!is_finite(anchor))
        throw Error(ErrorKind::numeric, "partition_cluster: non-finite anchor");

    const int plane_count = static_cast<int>(plane_normals.size());
    const int bucket_count = 1 << plane_count;

    std::uint32_t epoch = s.begin_epoch(mesh.vertex_count());
    std::array<std::vector<VertexId>, 8> bucket_vertices;
    for (VertexId v : cluster.vertices) {
        const Vec3 offset = mesh.vertices[v] - anchor;
        int code = 0;
        for (int k = 0; k < plane_count; ++k)
            if (dot(offset, plane_normals[k]) >= 0.0)
                code |= 1 << k;
        s.member_stamp[v] = epoch;
        s.bucket[v] = static_cast<std::int8_t>(code);
        bucket_vertices[code].push_back(v);
    }

    int nonempty = 0;
    for (int b = 0; b < bucket_count; ++b)
        nonempty += bucket_vertices[b].empty() ? 0 : 1;

    if (nonempty < 2) {
        // All vertices ended up on one side; split at the median of the
        // projections onto the primary split direction instead.
        if (cluster.vertices.size() < 2) {
            if (nonempty_buckets)
                *nonempty_buckets = 1;
            return {cluster};
        }
        std::vector<std::pair<double, VertexId>> order;
        order.reserve(cluster.vertices.size());
        for (VertexId v : cluster.vertices)
            order.emplace_back(dot(mesh.vertices[v], plane_normals[0]), v);
        std::sort(order.begin(), order.end());
        std::size_t lower_size = (order.size() + 1) / 2; // midpoint vertex to the lower half
        for (int b = 0; b < 2; ++b)
            bucket_vertices[b].clear();
        for (std::size_t i = 0; i < order.size(); ++i) {
            int code = i < lower_size ? 0 : 1;
            VertexId v = order[i].second;
            s.bucket[v] = static_cast<std::int8_t>(code);
            bucket_vertices[code].push_back(v);
        }
        std::sort(bucket_vertices[0].begin(), bucket_vertices[0].end());
        std::sort(bucket_vertices[1].begin(), bucket_vertices[1].end());
        nonempty = 2;
    }

    // Faces follow their vertices; a straddling face lands in each bucket
    // that holds one of its corners.
    std::array<std::vector<FaceId>, 8> bucket_faces;
    for (FaceId f : cluster.faces) {
        int seen_mask = 0;
        for (VertexId v : mesh.faces[f]) {
            if (s.member_stamp[v] != epoch)
                continue;
            int code = s.bucket[v];
            if (!(seen_mask & (1 << code))) {
                seen_mask |= 1 << code;
                bucket_faces[code].push_back(f);
            }
        }
    }

    if (nonempty_buckets)
        *nonempty_buckets = nonempty;

    std::vector<Cluster> children;
    for (int b = 0; b < bucket_count; ++b) {
        if (bucket_vertices[b].empty())
            continue;
        Cluster child;
        child.vertices = std::move(bucket_vertices[b]);
        child.faces = std::move(bucket_faces[b]);
        if (options.topology_check) {
            for (Cluster& part : split_components(child, mesh, s)) {
                compute_cluster_stats(part, mesh);
                children.push_back(std::move(part));
            }
        } else {
            compute_cluster_stats(child, mesh);
            children.push_back(std::move(child));
        }
    }
    return children;
}

} // namespace

std::vector<Cluster> partition_cluster(const Cluster& cluster, const Mesh& mesh,
                                       const std::vector<Vec3>& plane_normals, const Vec3& anchor,
                                       const SimplifyOptions& options) {
    return partition_cluster_impl(cluster, mesh, plane_normals, anchor, options, scratch(),
                                  nullptr);
}

std::vector<Cluster> topology_split(const Cluster& cluster, const Mesh& mesh) {
    if (cluster.vertices.empty())
        throw Error(ErrorKind::structure, "topology_split: empty cluster");
    return split_components(cluster, mesh, scratch());
}

Vec3 representative_vertex(const Cluster& cluster, const Mesh& mesh) {
    Sym3 quadric;
    Vec3 linear{};
    for (FaceId f : cluster.faces) {
        if (mesh.face_degenerate[f])
            continue;
        const Vec3& n = mesh.face_normal[f];
        double d = -dot(n, mesh.vertices[mesh.faces[f][0]]);
        quadric.add_outer(n);
        linear += n * d;
    }
    return solve_min_quadric(quadric, linear, cluster.mean_vertex).first;
}

SimplifiedMesh retriangulate(const Mesh& mesh, const std::map<ClusterId, Cluster>& live_clusters,
                             const std::vector<Vec3>& representatives) {
    if (representatives.size() != live_clusters.size())
        throw Error(ErrorKind::structure, "retriangulate: representative count mismatch");

    SimplifiedMesh out;
    out.vertices = representatives;
    out.vertex_to_output.assign(mesh.vertex_count(), -1);

    VertexId next = 0;
    for (const auto& [id, cluster] : live_clusters) {
        for (VertexId v : cluster.vertices) {
            if (out.vertex_to_output[v] != -1)
                throw Error(ErrorKind::structure,
                            "retriangulate: vertex " + std::to_string(v) +
                                " owned by more than one cluster");
            out.vertex_to_output[v] = next;
        }
        ++next;
    }

    for (std::size_t f = 0; f < mesh.face_count(); ++f) {
        VertexId a = out.vertex_to_output[mesh.faces[f][0]];
        VertexId b = out.vertex_to_output[mesh.faces[f][1]];
        VertexId c = out.vertex_to_output[mesh.faces[f][2]];
        if (a < 0 || b < 0 || c < 0)
            throw Error(ErrorKind::structure, "retriangulate: vertex not covered by any cluster");
        if (a != b && b != c && a != c)
            out.faces.push_back({a, b, c});
    }
    return out;
}

namespace {

void continue_splitting(SimplificationState& state, const Mesh& mesh, std::size_t target,
                        std::optional<Duration> time_budget, const SimplifyOptions& options) {
    using Clock = std::chrono::steady_clock;
    const auto loop_start = Clock::now();
    state.split_loop_seconds = 0.0;
    state.longest_split_seconds = 0.0;

    while (state.live_count() < target && !state.queue_empty()) {
        if (time_budget && Clock::now() - loop_start >= *time_budget)
            break;
        const auto iteration_start = Clock::now();

        ClusterId id = state.queue_pop();
        auto it = state.clusters.find(id);
        assert(it != state.clusters.end());
        Cluster parent = std::move(it->second);

        EigenDecomposition eigen = analyze_variation(parent, mesh);
        std::vector<Vec3> plane_normals = choose_split(eigen, parent.mean_normal);
        Vec3 anchor = position_planes(parent, mesh, eigen);

        int nonempty_buckets = 0;
        std::vector<Cluster> children = partition_cluster_impl(
            parent, mesh, plane_normals, anchor, options, scratch(), &nonempty_buckets);

        if (children.size() < 2) {
            // Nothing to gain from this cluster; park it but keep it live.
            parent.splittable = false;
            it->second = std::move(parent);
        } else {
            state.clusters.erase(it);
            SplitRecord record;
            record.parent = parent.id;
            for (Cluster& child : children) {
                child.id = state.next_cluster_id++;
                child.splittable = cluster_splittable(child);
                state.peak_normal_variation =
                    std::max(state.peak_normal_variation, child.normal_variation);
                record.children.push_back(child.id);
                ClusterId child_id = child.id;
                bool splittable = child.splittable;
                state.clusters.emplace(child_id, std::move(child));
                if (splittable)
                    state.queue_push(child_id);
            }
            state.last_split_extra_components =
                static_cast<int>(record.children.size()) - nonempty_buckets;
            state.split_log.push_back(std::move(record));
            ++state.elapsed_splits;
        }

        double iteration_seconds =
            std::chrono::duration<double>(Clock::now() - iteration_start).count();
        state.longest_split_seconds = std::max(state.longest_split_seconds, iteration_seconds);
    }
    state.split_loop_seconds = std::chrono::duration<double>(Clock::now() - loop_start).count();
}

void check_state_matches_mesh(const SimplificationState& state, const Mesh& mesh) {
    std::size_t covered = 0;
    auto vertex_count = static_cast<VertexId>(mesh.vertex_count());
    auto face_count = static_cast<FaceId>(mesh.face_count());
    for (const auto& [id, cluster] : state.clusters) {
        covered += cluster.vertices.size();
        for (VertexId v : cluster.vertices)
            if (v < 0 || v >= vertex_count)
                throw Error(ErrorKind::checkpoint, "state refers to vertices outside the mesh");
        for (FaceId f : cluster.faces)
            if (f < 0 || f >= face_count)
                throw Error(ErrorKind::checkpoint, "state refers to faces outside the mesh");
    }
    if (covered != mesh.vertex_count())
        throw Error(ErrorKind::checkpoint, "state does not cover the mesh vertex set");
}

} // namespace

SimplifiedMesh extract_output(const SimplificationState& state, const Mesh& mesh) {
    std::vector<Vec3> representatives;
    representatives.reserve(state.clusters.size());
    for (const auto& [id, cluster] : state.clusters)
        representatives.push_back(representative_vertex(cluster, mesh));
    return retriangulate(mesh, state.clusters, representatives);
}

SimplifyResult simplify(const Mesh& mesh, std::size_t target_vertices,
                        std::optional<Duration> time_budget, const SimplifyOptions& options) {
    if (target_vertices < 1)
        throw Error(ErrorKind::structure, "simplify: target must be at least 1");

    SimplifyResult result;
    result.state = init_clusters(mesh, options);
    std::size_t target = target_vertices;
    if (target > mesh.vertex_count()) {
        target = mesh.vertex_count();
        result.state.target_was_clamped = true;
    }
    continue_splitting(result.state, mesh, target, time_budget, options);
    const auto post_start = std::chrono::steady_clock::now();
    result.output = extract_output(result.state, mesh);
    result.state.post_process_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - post_start).count();
    return result;
}

SimplifiedMesh refine(SimplificationState& state, const Mesh& mesh, std::size_t new_target,
                      std::optional<Duration> time_budget, const SimplifyOptions& options) {
    check_state_matches_mesh(state, mesh);
    std::size_t target = new_target;
    if (target > mesh.vertex_count()) {
        target = mesh.vertex_count();
        state.target_was_clamped = true;
    }
    // A target at or below the current size is a no-op re-emit.
    continue_splitting(state, mesh, target, time_budget, options);
    const auto post_start = std::chrono::steady_clock::now();
    SimplifiedMesh output = extract_output(state, mesh);
    state.post_process_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - post_start).count();
    return output;
}

} // namespace rsimp
