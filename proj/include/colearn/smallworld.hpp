#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "colearn/random.hpp"

namespace colearn {

using NodeId = std::size_t;

// Unordered node pair, normalised so that u <= v when built through make().
struct Edge {
    NodeId u;
    NodeId v;

    static Edge make(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct NetworkParams {
    std::size_t m = 100;  // nodes
    std::size_t k = 10;   // nearest neighbours; k = m - 1 means complete graph
    double rho = 0.0;     // rewiring probability

    bool complete() const { return k + 1 == m; }

    // Throws std::invalid_argument naming the violated constraint.
    void check() const;
};

// Undirected graph on nodes [0, m). The constructor accepts any edge list so
// that malformed graphs can be built and inspected with validate(); graphs
// from generate() are always simple.
class Network {
public:
    Network(std::size_t num_nodes, std::vector<Edge> edges);

    std::size_t num_nodes() const noexcept { return num_nodes_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<NodeId>& neighbours(NodeId i) const { return adjacency_.at(i); }
    std::size_t degree(NodeId i) const { return adjacency_.at(i).size(); }
    bool has_edge(NodeId a, NodeId b) const;

    friend bool operator==(const Network&, const Network&) = default;

private:
    std::size_t num_nodes_;
    std::vector<Edge> edges_;                   // sorted, as given (normalised)
    std::vector<std::vector<NodeId>> adjacency_; // sorted per node
};

// Watts-Strogatz generation. k = m - 1 yields the complete graph directly.
// Otherwise: ring lattice with k/2 neighbours per side, then for offset
// j = 1..k/2 and node i = 0..m-1 the edge {i, i+j} is moved to {i, w} with
// probability rho, w uniform over nodes not equal or adjacent to i.
Network generate(const NetworkParams& params, Rng& rng);

Network complete_graph(std::size_t m);
Network ring_lattice(std::size_t m, std::size_t k);

// Structural violations (self-loops, duplicates, out-of-range endpoints,
// asymmetric adjacency). Empty means the graph is simple and undirected.
std::vector<std::string> validate(const Network& net);

// Adds the parameter-dependent checks: node count, edge count m*k/2 (or the
// complete-graph count), and exact lattice adjacency when rho = 0.
std::vector<std::string> validate(const Network& net, const NetworkParams& params);

// Uniform over the edge set. Throws std::logic_error if there are no edges.
Edge random_edge(const Network& net, Rng& rng);

// Edge-list text: one "u v" line per edge, u < v, sorted by (u, v).
void write_edge_list(const Network& net, std::ostream& out);

} // namespace colearn
