#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/errors.hpp"

namespace rigidity {

using Edge = std::pair<unsigned, unsigned>;  // u < v

// Ordered subset of vertices, strictly increasing.
using VertexSet = std::vector<unsigned>;

// Simple undirected graph with a stable vertex set 0..n-1. Immutable after
// construction; the lexicographically sorted edge list is the canonical row
// order for every matrix built downstream.
class Graph {
public:
    explicit Graph(unsigned n) : n_(n), adj_(n, boost::dynamic_bitset<>(n)) {}

    Graph(unsigned n, std::vector<Edge> edges);

    unsigned vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }

    bool has_edge(unsigned u, unsigned v) const {
        return u < n_ && v < n_ && u != v && adj_[u].test(v);
    }

    // Position of (u,v) in the canonical edge order.
    std::size_t edge_index(unsigned u, unsigned v) const;

    const boost::dynamic_bitset<>& neighbors(unsigned v) const { return adj_.at(v); }
    std::size_t degree(unsigned v) const { return adj_.at(v).count(); }

    bool is_complete() const { return edges_.size() == std::size_t(n_) * (n_ - 1) / 2; }

    Graph with_edge(unsigned u, unsigned v) const;
    Graph without_edge(std::size_t edge_index) const;

    // Subgraph induced on `vertices` (relabelled 0..k-1 in the given order).
    Graph induced(const VertexSet& vertices) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    unsigned n_;
    std::vector<Edge> edges_;
    std::vector<boost::dynamic_bitset<>> adj_;
};

// Common constructions.
Graph complete_graph(unsigned n);
Graph cycle_graph(unsigned n);
Graph path_graph(unsigned n);
Graph complete_bipartite(unsigned a, unsigned b);

bool is_connected(const Graph& g);

// Exact vertex connectivity test: true iff g has more than k vertices and no
// vertex cut of size < k. Decided by deleting every (k-1)-subset.
bool is_k_connected(const Graph& g, unsigned k);

// All k-cliques, each as a strictly increasing VertexSet, in lexicographic
// order. Complete and duplicate-free; empty when none exist.
std::vector<VertexSet> find_cliques(const Graph& g, unsigned k);

// Existence-only variant with early exit.
bool has_clique(const Graph& g, unsigned k);

// Labeled enumeration of all graphs on n vertices (2^C(n,2) of them, masks in
// increasing order; bit k of the mask is edge k in canonical pair order).
// No isomorphism reduction. Throws ScopeError for n > 8; larger corpora come
// in as graph6 files.
class GraphEnumerator {
public:
    GraphEnumerator(unsigned n, bool connected_only);

    // Next graph, or false when exhausted. Single consumer.
    bool next(Graph& out);

    static std::uint64_t total_count(unsigned n);  // 2^C(n,2)

    // The graph encoded by a given edge mask.
    static Graph from_mask(unsigned n, std::uint64_t mask);

private:
    unsigned n_;
    bool connected_only_;
    std::uint64_t mask_, end_;
};

// Convenience driver over the enumerator.
void enumerate_graphs(unsigned n, bool connected_only, const std::function<void(const Graph&)>& fn);

}  // namespace rigidity
