#include "tropdiv/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace tropdiv {

std::shared_ptr<const Multigraph> Multigraph::build(
    std::vector<std::string> vertex_ids,
    std::vector<std::pair<std::string, std::string>> edge_pairs) {
    if (vertex_ids.empty()) throw Error(ErrorCode::Empty, "graph needs at least one vertex");
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < (int)vertex_ids.size(); ++i) {
        if (!index.emplace(vertex_ids[i], i).second)
            throw Error(ErrorCode::BadInput, "duplicate vertex id " + vertex_ids[i]);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_pairs.size());
    for (auto& [a, b] : edge_pairs) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw Error(ErrorCode::UnknownVertex, a);
        if (ib == index.end()) throw Error(ErrorCode::UnknownVertex, b);
        edges.emplace_back(ia->second, ib->second);
    }
    return build_indexed(std::move(vertex_ids), std::move(edges));
}

std::shared_ptr<const Multigraph> Multigraph::build_indexed(
    std::vector<std::string> vertex_ids, std::vector<std::pair<int, int>> edges) {
    if (vertex_ids.empty()) throw Error(ErrorCode::Empty, "graph needs at least one vertex");
    for (auto& [a, b] : edges) {
        if (a < 0 || a >= (int)vertex_ids.size() || b < 0 || b >= (int)vertex_ids.size())
            throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
    }
    auto g = std::make_shared<Multigraph>();
    g->vertex_ids_ = std::move(vertex_ids);
    g->edges_ = std::move(edges);
    g->finish();
    return g;
}

void Multigraph::finish() {
    int n = num_vertices();
    adj_.assign(n, {});
    valence_.assign(n, 0);
    for (int e = 0; e < num_edges(); ++e) {
        auto [a, b] = edges_[e];
        valence_[a]++;
        valence_[b]++;
        if (a != b) {
            adj_[a].emplace_back(e, b);
            adj_[b].emplace_back(e, a);
        }
    }
    // Connectivity: loops never help, check via adj_.
    std::vector<char> seen(n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (auto [e, w] : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push_back(w);
            }
    }
    if (count != n) throw Error(ErrorCode::Disconnected, "graph is not connected");
}

int Multigraph::vertex_index(const std::string& id) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertex_ids_[i] == id) return i;
    throw Error(ErrorCode::UnknownVertex, id);
}

int Multigraph::valence(int v) const {
    if (v < 0 || v >= num_vertices()) throw Error(ErrorCode::UnknownVertex, "vertex index");
    return valence_[v];
}

std::vector<long long> Multigraph::canonical_coeffs() const {
    std::vector<long long> c(num_vertices());
    for (int v = 0; v < num_vertices(); ++v) c[v] = std::max(valence_[v] - 2, 0);
    return c;
}

std::shared_ptr<const Multigraph> Multigraph::without_loops() const {
    std::vector<std::pair<int, int>> kept;
    for (auto& e : edges_)
        if (e.first != e.second) kept.push_back(e);
    return build_indexed(vertex_ids_, std::move(kept));
}

std::vector<int> Multigraph::bfs_depths(int q) const {
    std::vector<int> depth(num_vertices(), -1);
    std::deque<int> queue{q};
    depth[q] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto [e, w] : adj_[v])
            if (depth[w] < 0) {
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
    }
    return depth;
}

}  // namespace tropdiv
