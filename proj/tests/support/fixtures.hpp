#pragma once

// Test-only helpers. The brute-force enumerator here deliberately avoids
// Pruefer codes: it walks every (n-1)-subset of the complete graph's edges
// and keeps the spanning trees with the requested degrees.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "sombor/sombor.hpp"

namespace sombor::testing {

/// D=(3,3,2) arranged as leaf..3-2-3..leaf: the degree-2 vertex sits between
/// the two degree-3 vertices.
inline Tree chain_323() {
    return Tree::validate(7, {{0, 2}, {2, 1}, {0, 3}, {0, 4}, {1, 5}, {1, 6}});
}

/// Every labeled spanning tree of K_n whose degree vector equals `deg` exactly.
inline std::vector<Tree> brute_force_trees(const std::vector<Degree>& deg) {
    const auto n = static_cast<Vertex>(deg.size());
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
    std::vector<Tree> out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n) - 1);
    std::iota(pick.begin(), pick.end(), 0);
    const std::size_t m = all.size();
    const std::size_t r = pick.size();
    if (r == 0) return out;
    for (;;) {
        std::vector<Degree> d(static_cast<std::size_t>(n), 0);
        for (auto i : pick) {
            ++d[all[i].u];
            ++d[all[i].v];
        }
        if (d == deg) {
            std::vector<Vertex> parent(static_cast<std::size_t>(n));
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](Vertex x) {
                while (parent[x] != x) x = parent[x];
                return x;
            };
            bool acyclic = true;
            std::vector<Edge> edges;
            for (auto i : pick) {
                Vertex a = find(all[i].u), b = find(all[i].v);
                if (a == b) {
                    acyclic = false;
                    break;
                }
                parent[a] = b;
                edges.push_back(all[i]);
            }
            if (acyclic) out.push_back(Tree::validate(n, edges));
        }
        // next combination
        std::size_t i = r;
        while (i > 0 && pick[i - 1] == m - r + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

/// Sombor index straight from the definition, with no shared code path.
inline double reference_sombor(const Tree& t) {
    std::vector<double> deg(static_cast<std::size_t>(t.vertex_count()), 0.0);
    for (const Edge& e : t.edges()) {
        deg[e.u] += 1.0;
        deg[e.v] += 1.0;
    }
    double s = 0.0;
    for (const Edge& e : t.edges()) s += std::sqrt(deg[e.u] * deg[e.u] + deg[e.v] * deg[e.v]);
    return s;
}

inline Tree random_tree(std::mt19937_64& rng, Vertex n) {
    if (n == 1) return Tree::validate(1, std::span<const Edge>{});
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    PruferCode code(static_cast<std::size_t>(n) - 2);
    for (auto& c : code) c = pick(rng);
    return prufer_decode(code, n);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, Vertex n) {
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Random inner-degree sequence with k inner vertices, each degree in 2..max_degree.
inline DegreeSequence random_sequence(std::mt19937_64& rng, int k, Degree max_degree) {
    std::uniform_int_distribution<Degree> pick(2, max_degree);
    std::vector<Degree> raw(static_cast<std::size_t>(k));
    for (auto& d : raw) d = pick(rng);
    return DegreeSequence::normalize(raw);
}

}  // namespace sombor::testing
