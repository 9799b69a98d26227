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
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "rsimp/mesh.hpp"
#include "rsimp/numerics.hpp"

namespace rsimp {

using ClusterId = std::int32_t;

// A set of vertices and their faces that one output vertex will represent.
// Statistics are fixed once computed; splitting creates fresh clusters.
//
// Faces straddling a partition boundary belong to every cluster that holds
// one of their vertices, and contribute their full area and normal to each
// owner's sums.
struct Cluster {
    std::vector<VertexId> vertices;
    std::vector<FaceId> faces;

    Vec3 mean_normal;               // area-weighted sum of face unit normals
    Vec3 mean_vertex;               // unweighted mean of vertex positions
    double normal_variation = 0.0;  // splitting priority key
    double area = 0.0;              // non-degenerate face area sum

    ClusterId id = -1;
    bool splittable = true;         // parked clusters still count as output
};

struct SplitRecord {
    ClusterId parent = -1;
    std::vector<ClusterId> children;
};

// Live simplification state: every cluster currently representing an output
// vertex, plus the priority order over the splittable ones. Owned by one
// logical thread at a time; the mesh it refers to is shared read-only.
class SimplificationState {
public:
    // Clusters keyed by id; iteration order (ascending id) is the output
    // vertex order.
    std::map<ClusterId, Cluster> clusters;

    std::vector<SplitRecord> split_log;     // in-memory record, not checkpointed
    ClusterId next_cluster_id = 0;
    std::uint64_t elapsed_splits = 0;

    // Observability for size-control reporting and tests.
    double peak_normal_variation = 0.0;
    int last_split_extra_components = 0;
    double split_loop_seconds = 0.0;
    double longest_split_seconds = 0.0;
    double post_process_seconds = 0.0;
    bool target_was_clamped = false;

    std::size_t live_count() const { return clusters.size(); }

    // Queue discipline: highest normal variation first, ties to the lowest id.
    void queue_push(ClusterId id) { queue_.push(heap_key(id)); }
    bool queue_empty() const { return queue_.empty(); }
    std::size_t queue_size() const { return queue_.size(); }
    ClusterId queue_pop();

    // Live splittable ids in pop order, without disturbing the queue.
    std::vector<ClusterId> queue_order() const;

private:
    struct HeapEntry {
        double normal_variation;
        ClusterId id;
        bool operator<(const HeapEntry& o) const {
            if (normal_variation != o.normal_variation)
                return normal_variation < o.normal_variation;
            return id > o.id;
        }
    };

    HeapEntry heap_key(ClusterId id) const {
        return {clusters.at(id).normal_variation, id};
    }

    std::priority_queue<HeapEntry> queue_;
};

// Simplified model: one output vertex per surviving cluster plus the original
// faces whose corners map to three distinct output vertices.
struct SimplifiedMesh {
    std::vector<Vec3> vertices;                     // representative per cluster, id order
    std::vector<std::array<VertexId, 3>> faces;     // indices into vertices
    std::vector<VertexId> vertex_to_output;         // original vertex -> output index
};

struct SimplifyOptions {
    bool topology_check = true;  // debug switch; disabling degrades quality
};

// --- Per-step operations -----------------------------------------------

// Fills mean normal, mean vertex, total area and normal variation from the
// cluster's current vertex/face lists. Degenerate faces are skipped in the
// normal and area sums; a zero-area cluster gets zero variation.
void compute_cluster_stats(Cluster& cluster, const Mesh& mesh);

// Splits the model at the middle of its bounding box into up to eight octant
// clusters (empty ones dropped), separates disjoint components, computes
// statistics and queues everything splittable.
SimplificationState init_clusters(const Mesh& mesh, const SimplifyOptions& options = {});

// Eigendecomposition of the unweighted normal outer-product sum over the
// cluster's faces. Throws ErrorKind::numeric when every face is degenerate.
EigenDecomposition analyze_variation(const Cluster& cluster, const Mesh& mesh);

// Picks 1-3 partitioning plane normals from the eigenvalue pattern:
// three similar eigenvalues -> 3 planes, moderate max/min curvature ratio
// (<= 4) -> 2 planes, dominant single direction -> 1 plane.
std::vector<Vec3> choose_split(const EigenDecomposition& eigen, const Vec3& mean_normal);

// Anchor point all partitioning planes pass through: the mean of projected
// face midpoints lying within 2.5 degrees of the projected major curvature
// direction (either sign), or the mean vertex when no midpoint qualifies.
Vec3 position_planes(const Cluster& cluster, const Mesh& mesh, const EigenDecomposition& eigen);

// Assigns vertices to sub-clusters by plane side (>= 0 is the positive
// side), faces to every sub-cluster owning one of their vertices, separates
// disjoint components, and computes child statistics. Falls back to a median
// split along the first plane normal when fewer than two children result;
// returns a single cluster only when the input cannot be split at all.
std::vector<Cluster> partition_cluster(const Cluster& cluster, const Mesh& mesh,
                                       const std::vector<Vec3>& plane_normals,
                                       const Vec3& anchor,
                                       const SimplifyOptions& options = {});

// Splits a cluster into its connected components (vertices linked by edges
// of the cluster's faces). Returns the input cluster unchanged when it is
// already connected.
std::vector<Cluster> topology_split(const Cluster& cluster, const Mesh& mesh);

// Per-cluster output position: minimizer of the summed squared distances to
// the planes of the cluster's faces, or the mean vertex when the quadric is
// singular (e.g. a fully coplanar cluster).
Vec3 representative_vertex(const Cluster& cluster, const Mesh& mesh);

// Keeps exactly those original faces whose vertices map to three distinct
// representatives; everything else has degenerated into a line or point.
SimplifiedMesh retriangulate(const Mesh& mesh,
                             const std::map<ClusterId, Cluster>& live_clusters,
                             const std::vector<Vec3>& representatives);

// --- Whole-run drivers --------------------------------------------------

using Duration = std::chrono::steady_clock::duration;

struct SimplifyResult {
    SimplificationState state;
    SimplifiedMesh output;
};

// Runs initialization and splits the highest-variation cluster until the
// live cluster count reaches target_vertices, the queue runs dry, or the
// time budget expires (checked once per split), then computes
// representatives and retriangulates. Targets above the input vertex count
// are clamped. Deterministic for identical inputs when no budget is set.
SimplifyResult simplify(const Mesh& mesh, std::size_t target_vertices,
                        std::optional<Duration> time_budget = std::nullopt,
                        const SimplifyOptions& options = {});

// Continues splitting from saved state toward a larger target; the result is
// identical to an uninterrupted simplify run with the same final target. A
// target at or below the current live count re-emits the current output.
SimplifiedMesh refine(SimplificationState& state, const Mesh& mesh, std::size_t new_target,
                      std::optional<Duration> time_budget = std::nullopt,
                      const SimplifyOptions& options = {});

// Post-processing only: representatives plus retriangulation for the current
// live clusters.
SimplifiedMesh extract_output(const SimplificationState& state, const Mesh& mesh);

} // namespace rsimp
