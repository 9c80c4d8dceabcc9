#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sombor/degree_sequence.hpp"
#include "sombor/error.hpp"
#include "sombor/weight_math.hpp"

namespace sombor {

using Vertex = std::int32_t;

struct Edge {
    Vertex u;
    Vertex v;

    /// Same edge with u < v.
    Edge normalized() const noexcept { return u < v ? Edge{u, v} : Edge{v, u}; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled simple tree on vertices 0..n-1. Only constructible through
/// validation, so every instance is connected and acyclic.
class Tree {
public:
    /// Checks the edge set and builds the tree. Error messages name the first
    /// defect found: label range, self-loop, duplicate edge, cycle, connectivity.
    static Tree validate(std::int64_t n, std::span<const Edge> edges) {
        if (n < 1) throw Error(ErrorKind::validation, "tree needs at least one vertex");
        for (const Edge& e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
                throw Error(ErrorKind::validation, "label out of range in edge (" + std::to_string(e.u) + "," +
                                                       std::to_string(e.v) + ")");
            }
            if (e.u == e.v) throw Error(ErrorKind::validation, "self-loop at vertex " + std::to_string(e.u));
        }
        std::vector<Edge> sorted;
        sorted.reserve(edges.size());
        for (const Edge& e : edges) sorted.push_back(e.normalized());
        std::sort(sorted.begin(), sorted.end());
        if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
            throw Error(ErrorKind::validation,
                        "duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
        }

        std::vector<Vertex> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](Vertex x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Edge& e : edges) {
            Vertex a = find(e.u), b = find(e.v);
            if (a == b) throw Error(ErrorKind::validation, "cycle detected");
            parent[a] = b;
        }
        if (static_cast<std::int64_t>(edges.size()) != n - 1) {
            // Acyclic with too few edges.
            throw Error(ErrorKind::validation, "not connected");
        }
        return Tree(static_cast<Vertex>(n), std::move(sorted));
    }

    static Tree validate(std::int64_t n, std::initializer_list<Edge> edges) {
        return validate(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    Vertex vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges with u < v, sorted lexicographically.
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    Degree degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(Vertex a, Vertex b) const noexcept {
        if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
        const Edge e = Edge{a, b}.normalized();
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    friend bool operator==(const Tree& a, const Tree& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    Tree(Vertex n, std::vector<Edge> sorted_edges) : n_(n), edges_(std::move(sorted_edges)) {
        offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (const Edge& e : edges_) {
            ++offsets_[e.u + 1];
            ++offsets_[e.v + 1];
        }
        for (Vertex i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
        adjacency_.resize(edges_.size() * 2);
        std::vector<std::int32_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (const Edge& e : edges_) {
            adjacency_[fill[e.u]++] = e.v;
            adjacency_[fill[e.v]++] = e.u;
        }
    }

    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int32_t> offsets_;
    std::vector<Vertex> adjacency_;
};

inline std::vector<Degree> degrees(const Tree& t) {
    std::vector<Degree> out(static_cast<std::size_t>(t.vertex_count()));
    for (Vertex v = 0; v < t.vertex_count(); ++v) out[v] = t.degree(v);
    return out;
}

inline DegreeSequence internal_degree_sequence(const Tree& t) { return DegreeSequence::normalize(degrees(t)); }

/// Symmetric degree-pair weight defining a bond-additive index.
using IndexFunction = std::function<double(Degree, Degree)>;

/// Sum over edges uv of w(d(u), d(v)).
template <class Weight>
double index(const Tree& t, Weight&& w) {
    CompensatedSum sum;
    for (const Edge& e : t.edges()) sum += w(t.degree(e.u), t.degree(e.v));
    return sum.value();
}

inline double sombor(const Tree& t) { return index(t, edge_weight); }

/// A few classical degree-based indices, for reporting next to the Sombor value.
namespace indices {

inline double sombor(Degree x, Degree y) { return edge_weight(x, y); }
inline double first_zagreb(Degree x, Degree y) { return static_cast<double>(x + y); }
inline double second_zagreb(Degree x, Degree y) { return static_cast<double>(x * y); }
inline double randic(Degree x, Degree y) { return 1.0 / std::sqrt(static_cast<double>(x * y)); }
inline double harmonic(Degree x, Degree y) { return 2.0 / static_cast<double>(x + y); }
inline double geometric_arithmetic(Degree x, Degree y) {
    return 2.0 * std::sqrt(static_cast<double>(x * y)) / static_cast<double>(x + y);
}

struct Named {
    const char* name;
    double (*weight)(Degree, Degree);
};

inline constexpr Named all[] = {
    {"sombor", &sombor},
    {"first_zagreb", &first_zagreb},
    {"second_zagreb", &second_zagreb},
    {"randic", &randic},
    {"harmonic", &harmonic},
    {"geometric_arithmetic", &geometric_arithmetic},
};

}  // namespace indices

/// Path and star helpers, mostly for tests and closed-form checks.
inline Tree make_path(Vertex n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Tree::validate(n, edges);
}

inline Tree make_star(Vertex leaves) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Tree::validate(leaves + 1, edges);
}

/// Same tree with vertex v renamed to perm[v].
inline Tree relabel(const Tree& t, std::span<const Vertex> perm) {
    std::vector<Edge> edges;
    edges.reserve(t.edge_count());
    for (const Edge& e : t.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Tree::validate(t.vertex_count(), edges);
}

/// BFS distances from `source`; also records the BFS parent of every vertex.
inline void bfs(const Tree& t, Vertex source, std::vector<std::int32_t>& dist, std::vector<Vertex>& parent) {
    const auto n = static_cast<std::size_t>(t.vertex_count());
    dist.assign(n, -1);
    parent.assign(n, -1);
    std::vector<Vertex> queue;
    queue.reserve(n);
    queue.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : t.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
}

}  // namespace sombor
