#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "rigidity/framework.hpp"
#include "rigidity/graph.hpp"

namespace rigidity {

// Subset of the canonical edge indices of a host graph.
using EdgeSubset = boost::dynamic_bitset<>;

EdgeSubset full_edge_set(const Graph& g);
EdgeSubset edge_subset(const Graph& g, std::initializer_list<std::size_t> indices);

// The rigidity matroid R_d(G): the linear matroid represented by the rows of
// the d-dimensional rigidity matrix at one pinned random framework. All
// queries are answered against the same sample so they are mutually
// consistent as a single linear matroid; if a post-hoc validation ever fails
// (a non-generic sample), the oracle resamples with the next trial index and
// replays its memoized queries.
class MatroidOracle {
public:
    MatroidOracle(Graph g, unsigned dim, RandomRegime regime);
    // Pin an explicit framework (used to exercise the resample path).
    MatroidOracle(Graph g, unsigned dim, RandomRegime regime, Framework pinned);

    const Graph& graph() const { return g_; }
    unsigned dim() const { return dim_; }
    Framework framework() const;  // by value: resampling invalidates references
    std::uint64_t trial() const { return trial_; }

    // Exact rank of the pinned rigidity-matrix rows indexed by s. Memoized.
    std::size_t subset_rank(const EdgeSubset& s);

    // Minimally dependent: rank(s) = |s|-1 and every single deletion is
    // independent.
    bool is_circuit(const EdgeSubset& s);

    // The unique circuit inside base + e, containing e. Requires base
    // independent and base + e dependent; the result is re-verified with
    // is_circuit before returning.
    EdgeSubset fundamental_circuit(const EdgeSubset& base, std::size_t e);

    // Partition of the edge set (or of a restriction) into connected
    // components of the matroid: pick a greedy basis B, join the elements of
    // each fundamental circuit C(e,B) for e outside B, take the classes.
    // Classes are ordered by smallest edge index.
    std::vector<EdgeSubset> rd_components();
    std::vector<EdgeSubset> rd_components(const EdgeSubset& restriction);

    // Every pair of edges lies in a common circuit. Single-edge graphs are
    // not R_d-connected by convention (one edge lies in no circuit).
    bool is_rd_connected();

    // A verified circuit containing both edges, or nullopt when none exists.
    // Greedy deletion: drop edges outside {e,f} while e and f stay in the
    // same component of the restriction; the terminal set is the circuit.
    std::optional<EdgeSubset> circuit_through_pair(std::size_t e, std::size_t f);

private:
    void pin_rows();
    void resample_and_replay(const char* why);
    std::size_t raw_subset_rank(const EdgeSubset& s);
    bool raw_is_circuit(const EdgeSubset& s);
    EdgeSubset raw_fundamental_circuit(const EdgeSubset& base, std::size_t e);
    std::vector<EdgeSubset> raw_components(const EdgeSubset& restriction);

    Graph g_;
    unsigned dim_;
    RandomRegime regime_;
    std::uint64_t trial_ = 0;
    Framework fw_;
    std::vector<std::vector<Int>> rows_;  // integer-scaled rigidity rows
    std::map<EdgeSubset, std::size_t> memo_;
    std::mutex mutex_;
};

}  // namespace rigidity
