#ifndef TANGENCY_BIPARTITE_HPP
#define TANGENCY_BIPARTITE_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace tangency {

/// Simple bipartite graph on sides A = {0..a-1} and B = {0..b-1}. Neighbor
/// lists are kept sorted.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int a_size, int b_size);

    /// Throws std::invalid_argument on an out-of-range endpoint or a duplicate edge.
    static BipartiteGraph from_edges(int a_size, int b_size, const std::vector<std::pair<int, int>>& edges);

    int a_size() const { return static_cast<int>(adj_a_.size()); }
    int b_size() const { return static_cast<int>(adj_b_.size()); }
    int vertex_count() const { return a_size() + b_size(); }
    std::size_t edge_count() const { return edges_; }

    const std::vector<int>& neighbors_a(int a) const { return adj_a_[a]; }
    const std::vector<int>& neighbors_b(int b) const { return adj_b_[b]; }
    bool has_edge(int a, int b) const;

    /// Edges as (a, b), sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Appends an edge; returns false if it was already present.
    bool add_edge(int a, int b);

    friend bool operator==(const BipartiteGraph& x, const BipartiteGraph& y) {
        return x.adj_a_ == y.adj_a_ && x.adj_b_ == y.adj_b_;
    }

private:
    std::vector<std::vector<int>> adj_a_;
    std::vector<std::vector<int>> adj_b_;
    std::size_t edges_ = 0;
};

}  // namespace tangency

#endif
