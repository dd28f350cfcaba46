#include "colearn/smallworld.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace colearn {

void NetworkParams::check() const {
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("network params: " + what);
    };
    if (m < 2) fail("m must be >= 2, got " + std::to_string(m));
    if (k > m - 1) {
        fail("k must be <= m-1 (" + std::to_string(m - 1) + "), got " + std::to_string(k));
    }
    if (!complete()) {
        if (k < 2) fail("k must be >= 2, got " + std::to_string(k));
        if (k % 2 != 0) fail("k must be even unless k = m-1, got " + std::to_string(k));
    }
    if (!(rho >= 0.0 && rho <= 1.0)) fail("rho must be in [0, 1], got " + std::to_string(rho));
}

Network::Network(std::size_t num_nodes, std::vector<Edge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)), adjacency_(num_nodes) {
    for (Edge& e : edges_) e = Edge::make(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
    for (const Edge& e : edges_) {
        if (e.u >= num_nodes_ || e.v >= num_nodes_) continue;
        adjacency_[e.u].push_back(e.v);
        if (e.u != e.v) adjacency_[e.v].push_back(e.u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Network::has_edge(NodeId a, NodeId b) const {
    if (a >= num_nodes_ || b >= num_nodes_) return false;
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

Network complete_graph(std::size_t m) {
    std::vector<Edge> edges;
    edges.reserve(m * (m - 1) / 2);
    for (NodeId u = 0; u < m; ++u) {
        for (NodeId v = u + 1; v < m; ++v) edges.push_back({u, v});
    }
    return Network(m, std::move(edges));
}

Network ring_lattice(std::size_t m, std::size_t k) {
    NetworkParams{m, k, 0.0}.check();
    if (k + 1 == m) return complete_graph(m);
    std::vector<Edge> edges;
    edges.reserve(m * k / 2);
    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (NodeId i = 0; i < m; ++i) edges.push_back(Edge::make(i, (i + j) % m));
    }
    return Network(m, std::move(edges));
}

namespace {

// Sorted-vector adjacency used while rewiring.
class MutableAdjacency {
public:
    explicit MutableAdjacency(std::size_t m) : adj_(m) {}

    bool contains(NodeId a, NodeId b) const {
        const auto& v = adj_[a];
        return std::binary_search(v.begin(), v.end(), b);
    }
    void add(NodeId a, NodeId b) {
        insert(adj_[a], b);
        insert(adj_[b], a);
    }
    void remove(NodeId a, NodeId b) {
        erase(adj_[a], b);
        erase(adj_[b], a);
    }
    std::size_t degree(NodeId a) const { return adj_[a].size(); }
    const std::vector<NodeId>& row(NodeId a) const { return adj_[a]; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (NodeId u = 0; u < adj_.size(); ++u) {
            for (NodeId v : adj_[u]) {
                if (u < v) out.push_back({u, v});
            }
        }
        return out;
    }

private:
    static void insert(std::vector<NodeId>& v, NodeId x) {
        v.insert(std::lower_bound(v.begin(), v.end(), x), x);
    }
    static void erase(std::vector<NodeId>& v, NodeId x) {
        auto it = std::lower_bound(v.begin(), v.end(), x);
        if (it != v.end() && *it == x) v.erase(it);
    }

    std::vector<std::vector<NodeId>> adj_;
};

// The t-th node (in ascending order) that is neither `self` nor in `taken`.
// `taken` is sorted and contains no `self`.
NodeId nth_free_node(NodeId self, const std::vector<NodeId>& taken, std::uint64_t t) {
    auto it = taken.begin();
    for (NodeId w = 0;; ++w) {
        if (w == self) continue;
        while (it != taken.end() && *it < w) ++it;
        if (it != taken.end() && *it == w) continue;
        if (t == 0) return w;
        --t;
    }
}

} // namespace

Network generate(const NetworkParams& params, Rng& rng) {
    params.check();
    const std::size_t m = params.m;
    if (params.complete()) return complete_graph(m);

    const std::size_t half = params.k / 2;
    MutableAdjacency adj(m);
    for (std::size_t j = 1; j <= half; ++j) {
        for (NodeId i = 0; i < m; ++i) adj.add(i, (i + j) % m);
    }

    for (std::size_t j = 1; j <= half; ++j) {
        for (NodeId i = 0; i < m; ++i) {
            if (!bernoulli(rng, params.rho)) continue;
            const NodeId old_target = (i + j) % m;
            if (!adj.contains(i, old_target)) continue;
            const std::size_t free = m - 1 - adj.degree(i);
            if (free == 0) continue;
            const NodeId w = nth_free_node(i, adj.row(i), uniform_index(rng, free));
            adj.remove(i, old_target);
            adj.add(i, w);
        }
    }
    return Network(m, adj.edges());
}

std::vector<std::string> validate(const Network& net) {
    std::vector<std::string> out;
    const auto& edges = net.edges();
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
        const Edge& e = edges[idx];
        const std::string label = "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
        if (e.u >= net.num_nodes() || e.v >= net.num_nodes()) {
            out.push_back("endpoint out of range: " + label);
        } else if (e.u == e.v) {
            out.push_back("self-loop: " + label);
        }
        if (idx > 0 && edges[idx - 1] == e) out.push_back("duplicate edge: " + label);
    }
    for (NodeId a = 0; a < net.num_nodes(); ++a) {
        for (NodeId b : net.neighbours(a)) {
            if (!net.has_edge(b, a)) {
                out.push_back("asymmetric adjacency: " + std::to_string(a) + "->" +
                              std::to_string(b));
            }
        }
    }
    return out;
}

std::vector<std::string> validate(const Network& net, const NetworkParams& params) {
    std::vector<std::string> out = validate(net);
    if (net.num_nodes() != params.m) {
        out.push_back("node count " + std::to_string(net.num_nodes()) + " != m=" +
                      std::to_string(params.m));
        return out;
    }
    const std::size_t expected =
        params.complete() ? params.m * (params.m - 1) / 2 : params.m * params.k / 2;
    if (net.num_edges() != expected) {
        out.push_back("edge count " + std::to_string(net.num_edges()) + " != expected " +
                      std::to_string(expected));
    }
    if (params.rho == 0.0 && !params.complete()) {
        const std::size_t m = params.m;
        const std::size_t half = params.k / 2;
        for (NodeId i = 0; i < m; ++i) {
            std::vector<NodeId> want;
            for (std::size_t j = 1; j <= half; ++j) {
                want.push_back((i + j) % m);
                want.push_back((i + m - j) % m);
            }
            std::sort(want.begin(), want.end());
            if (want != net.neighbours(i)) {
                out.push_back("node " + std::to_string(i) + " is not a ring-lattice node");
            }
        }
    }
    return out;
}

Edge random_edge(const Network& net, Rng& rng) {
    if (net.num_edges() == 0) throw std::logic_error("random_edge: network has no edges");
    return net.edges()[uniform_index(rng, net.num_edges())];
}

void write_edge_list(const Network& net, std::ostream& out) {
    for (const Edge& e : net.edges()) out << e.u << ' ' << e.v << '\n';
}

} // namespace colearn
