#include "tangency/bipartite.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tangency {

BipartiteGraph::BipartiteGraph(int a_size, int b_size) {
    if (a_size < 0 || b_size < 0) throw std::invalid_argument("negative side size");
    adj_a_.resize(a_size);
    adj_b_.resize(b_size);
}

BipartiteGraph BipartiteGraph::from_edges(int a_size, int b_size, const std::vector<std::pair<int, int>>& edges) {
    BipartiteGraph g(a_size, b_size);
    for (const auto& [a, b] : edges) {
        if (!g.add_edge(a, b)) {
            throw std::invalid_argument("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        }
    }
    return g;
}

bool BipartiteGraph::has_edge(int a, int b) const {
    if (a < 0 || a >= a_size() || b < 0 || b >= b_size()) return false;
    const auto& n = adj_a_[a];
    return std::binary_search(n.begin(), n.end(), b);
}

bool BipartiteGraph::add_edge(int a, int b) {
    if (a < 0 || a >= a_size() || b < 0 || b >= b_size()) {
        throw std::invalid_argument("edge " + std::to_string(a) + " " + std::to_string(b) + " out of range");
    }
    auto& na = adj_a_[a];
    auto it = std::lower_bound(na.begin(), na.end(), b);
    if (it != na.end() && *it == b) return false;
    na.insert(it, b);
    auto& nb = adj_b_[b];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++edges_;
    return true;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int a = 0; a < a_size(); ++a) {
        for (int b : adj_a_[a]) out.emplace_back(a, b);
    }
    return out;
}

}  // namespace tangency
