#include "rigidity/graph.hpp"

#include <algorithm>

namespace rigidity {

Graph::Graph(unsigned n, std::vector<Edge> edges)
    : n_(n), adj_(n, boost::dynamic_bitset<>(n)) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        if (v >= n_) throw PreconditionError("edge endpoint " + std::to_string(v) +
                                             " out of range for n=" + std::to_string(n_));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw PreconditionError("duplicate edge");
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
        adj_[u].set(v);
        adj_[v].set(u);
    }
}

std::size_t Graph::edge_index(unsigned u, unsigned v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v})
        throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") not in graph");
    return std::size_t(it - edges_.begin());
}

Graph Graph::with_edge(unsigned u, unsigned v) const {
    auto e = edges_;
    e.emplace_back(u, v);
    return Graph(n_, std::move(e));
}

Graph Graph::without_edge(std::size_t edge_index) const {
    auto e = edges_;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(edge_index));
    return Graph(n_, std::move(e));
}

Graph Graph::induced(const VertexSet& vertices) const {
    std::vector<unsigned> pos(n_, n_);
    for (unsigned i = 0; i < vertices.size(); ++i) pos[vertices[i]] = i;
    std::vector<Edge> e;
    for (const auto& [u, v] : edges_)
        if (pos[u] < n_ && pos[v] < n_) e.emplace_back(pos[u], pos[v]);
    return Graph(static_cast<unsigned>(vertices.size()), std::move(e));
}

Graph complete_graph(unsigned n) {
    std::vector<Edge> e;
    for (unsigned u = 0; u < n; ++u)
        for (unsigned v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph cycle_graph(unsigned n) {
    std::vector<Edge> e;
    for (unsigned u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    if (n >= 3) e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

Graph path_graph(unsigned n) {
    std::vector<Edge> e;
    for (unsigned u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph(n, std::move(e));
}

Graph complete_bipartite(unsigned a, unsigned b) {
    std::vector<Edge> e;
    for (unsigned u = 0; u < a; ++u)
        for (unsigned v = a; v < a + b; ++v) e.emplace_back(u, v);
    return Graph(a + b, std::move(e));
}

namespace {

// Connectivity of the subgraph on the vertices of `alive` (BFS over bitsets).
bool connected_on(const Graph& g, const boost::dynamic_bitset<>& alive) {
    const std::size_t count = alive.count();
    if (count <= 1) return true;
    boost::dynamic_bitset<> seen(g.vertex_count()), frontier(g.vertex_count());
    frontier.set(alive.find_first());
    while (frontier.any()) {
        seen |= frontier;
        boost::dynamic_bitset<> next(g.vertex_count());
        for (auto v = frontier.find_first(); v != boost::dynamic_bitset<>::npos;
             v = frontier.find_next(v))
            next |= g.neighbors(static_cast<unsigned>(v));
        next &= alive;
        next -= seen;
        frontier = std::move(next);
    }
    return seen.count() == count;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    boost::dynamic_bitset<> all(g.vertex_count());
    all.set();
    return connected_on(g, all);
}

bool is_k_connected(const Graph& g, unsigned k) {
    const unsigned n = g.vertex_count();
    if (k < 1) throw PreconditionError("k-connectivity requires k >= 1");
    if (n <= k) return false;
    // No cut of size < k iff no cut of size exactly k-1 (padding a smaller cut
    // with arbitrary extra vertices keeps two separated survivors, since n > k).
    const unsigned cut = k - 1;
    std::vector<unsigned> pick(cut);
    boost::dynamic_bitset<> alive(n);
    std::function<bool(unsigned, unsigned)> rec = [&](unsigned start, unsigned depth) -> bool {
        if (depth == cut) {
            alive.set();
            for (unsigned i = 0; i < cut; ++i) alive.reset(pick[i]);
            return connected_on(g, alive);
        }
        for (unsigned v = start; v < n; ++v) {
            pick[depth] = v;
            if (!rec(v + 1, depth + 1)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

namespace {

void extend_clique(const Graph& g, unsigned k, VertexSet& current,
                   const boost::dynamic_bitset<>& candidates, std::vector<VertexSet>* out,
                   bool* found) {
    if (current.size() == k) {
        if (out) out->push_back(current);
        if (found) *found = true;
        return;
    }
    const std::size_t need = k - current.size();
    if (candidates.count() < need) return;
    for (auto v = candidates.find_first(); v != boost::dynamic_bitset<>::npos;
         v = candidates.find_next(v)) {
        if (found && *found) return;
        current.push_back(static_cast<unsigned>(v));
        boost::dynamic_bitset<> next = candidates & g.neighbors(static_cast<unsigned>(v));
        // Only extend upward to keep each clique sorted and emitted once.
        for (auto w = next.find_first(); w != boost::dynamic_bitset<>::npos && w <= v;
             w = next.find_next(w))
            next.reset(w);
        extend_clique(g, k, current, next, out, found);
        current.pop_back();
    }
}

}  // namespace

std::vector<VertexSet> find_cliques(const Graph& g, unsigned k) {
    if (k < 1 || k > g.vertex_count())
        throw PreconditionError("clique size must be in 1..n");
    std::vector<VertexSet> out;
    VertexSet current;
    boost::dynamic_bitset<> all(g.vertex_count());
    all.set();
    extend_clique(g, k, current, all, &out, nullptr);
    return out;
}

bool has_clique(const Graph& g, unsigned k) {
    if (k < 1 || k > g.vertex_count()) return false;
    bool found = false;
    VertexSet current;
    boost::dynamic_bitset<> all(g.vertex_count());
    all.set();
    extend_clique(g, k, current, all, nullptr, &found);
    return found;
}

GraphEnumerator::GraphEnumerator(unsigned n, bool connected_only)
    : n_(n), connected_only_(connected_only), mask_(0) {
    if (n > 8)
        throw ScopeError("naive enumeration supports n <= 8; supply larger corpora as graph6");
    end_ = total_count(n);
}

std::uint64_t GraphEnumerator::total_count(unsigned n) {
    return std::uint64_t(1) << (std::uint64_t(n) * (n - 1) / 2);
}

Graph GraphEnumerator::from_mask(unsigned n, std::uint64_t mask) {
    std::vector<Edge> e;
    std::size_t bit = 0;
    for (unsigned u = 0; u < n; ++u)
        for (unsigned v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

bool GraphEnumerator::next(Graph& out) {
    while (mask_ < end_) {
        Graph g = from_mask(n_, mask_++);
        if (connected_only_ && !is_connected(g)) continue;
        out = std::move(g);
        return true;
    }
    return false;
}

void enumerate_graphs(unsigned n, bool connected_only,
                      const std::function<void(const Graph&)>& fn) {
    GraphEnumerator en(n, connected_only);
    Graph g(0);
    while (en.next(g)) fn(g);
}

}  // namespace rigidity
