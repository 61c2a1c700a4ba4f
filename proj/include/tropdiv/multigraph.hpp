// Finite connected multigraphs with loops and parallel edges.
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tropdiv/errors.hpp"

namespace tropdiv {

class Multigraph {
public:
    // Validates: nonempty vertex list, known endpoints, connectivity.
    static std::shared_ptr<const Multigraph> build(
        std::vector<std::string> vertex_ids,
        std::vector<std::pair<std::string, std::string>> edge_pairs);

    // Endpoints given as indices into an existing vertex list.
    static std::shared_ptr<const Multigraph> build_indexed(
        std::vector<std::string> vertex_ids,
        std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return (int)vertex_ids_.size(); }
    int num_edges() const { return (int)edges_.size(); }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Throws UnknownVertex.
    int vertex_index(const std::string& id) const;

    bool is_loop(int e) const { return edges_[e].first == edges_[e].second; }

    // Loops count 2.
    int valence(int v) const;

    // First Betti number #E - #V + 1.
    int genus() const { return num_edges() - num_vertices() + 1; }

    // Coefficient val(v) - 2 at each vertex of valence >= 3, zero elsewhere
    // (valence-1 ends contribute nothing).
    std::vector<long long> canonical_coeffs() const;

    // Non-loop incidences: for each vertex, list of (edge, other endpoint).
    const std::vector<std::pair<int, int>>& incident(int v) const { return adj_[v]; }

    bool same_structure(const Multigraph& o) const {
        return vertex_ids_ == o.vertex_ids_ && edges_ == o.edges_;
    }

    // Copy with all loops removed (stays connected).
    std::shared_ptr<const Multigraph> without_loops() const;

    // BFS distance levels from a base vertex (loopless edges).
    std::vector<int> bfs_depths(int q) const;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;  // non-loop only
    std::vector<int> valence_;

    void finish();
};

using GraphPtr = std::shared_ptr<const Multigraph>;

}  // namespace tropdiv
