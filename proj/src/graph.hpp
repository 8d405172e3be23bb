// Bitmask graph helpers shared by the complex and chordal code.

#ifndef SRPOS_SRC_GRAPH_HPP
#define SRPOS_SRC_GRAPH_HPP

#include "srpos/complex.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace srpos::detail {

using Adjacency = std::vector<std::uint64_t>;

inline Adjacency adjacency(const SimplicialComplex& c)
{
    Adjacency adj(c.num_vertices(), 0);
    for (auto [i, j] : c.edges()) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
    }
    return adj;
}

/// Reverse maximum cardinality search order, checked to be a perfect
/// elimination order.
inline std::optional<std::vector<int>> elimination_order(const Adjacency& adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> weight(n, 0);
    std::vector<int> visit;
    visit.reserve(n);
    std::uint64_t done = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!((done >> v) & 1u) && (best < 0 || weight[v] > weight[best]))
                best = v;
        visit.push_back(best);
        done |= std::uint64_t{1} << best;
        for (int u = 0; u < n; ++u)
            if ((adj[best] >> u) & 1u)
                ++weight[u];
    }
    std::vector<int> order(visit.rbegin(), visit.rend());
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k)
        pos[order[k]] = k;
    for (int k = 0; k < n; ++k) {
        int v = order[k];
        std::uint64_t later = 0;
        for (int u = 0; u < n; ++u)
            if (((adj[v] >> u) & 1u) && pos[u] > k)
                later |= std::uint64_t{1} << u;
        if (later == 0)
            continue;
        // All later neighbours must be adjacent to the earliest of them.
        int first = -1;
        for (int u = 0; u < n; ++u)
            if (((later >> u) & 1u) && (first < 0 || pos[u] < pos[first]))
                first = u;
        std::uint64_t rest = later & ~(std::uint64_t{1} << first);
        if ((rest & ~adj[first]) != 0)
            return std::nullopt;
    }
    return order;
}

inline void bron_kerbosch(const Adjacency& adj, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                          std::vector<Face>& out)
{
    if (p == 0 && x == 0) {
        out.push_back(Face{r});
        return;
    }
    int pivot = std::countr_zero(p | x);
    std::uint64_t candidates = p & ~adj[pivot];
    while (candidates != 0) {
        int v = std::countr_zero(candidates);
        std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= ~bit;
        x |= bit;
        candidates &= ~bit;
    }
}

/// Maximal cliques of the graph on vertices 0..adj.size()-1.
inline std::vector<Face> maximal_cliques(const Adjacency& adj)
{
    std::vector<Face> out;
    const int n = static_cast<int>(adj.size());
    if (n == 0)
        return out;
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    bron_kerbosch(adj, 0, all, 0, out);
    return out;
}

} // namespace srpos::detail

#endif
