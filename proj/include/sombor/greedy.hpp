#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "sombor/degree_sequence.hpp"
#include "sombor/tree.hpp"

namespace sombor {

/// A tree with a distinguished root, its parent map (-1 at the root) and a
/// BFS order that starts at the root and visits children in label order.
struct RootedTree {
    Tree tree;
    Vertex root = 0;
    std::vector<Vertex> parent;
    std::vector<Vertex> bfs_order;

    static RootedTree at(Tree t, Vertex root) {
        RootedTree r{std::move(t), root, {}, {}};
        std::vector<std::int32_t> dist;
        bfs(r.tree, root, dist, r.parent);
        std::vector<Vertex> order{root};
        order.reserve(static_cast<std::size_t>(r.tree.vertex_count()));
        for (std::size_t head = 0; head < order.size(); ++head) {
            for (Vertex w : r.tree.neighbors(order[head]))
                if (w != r.parent[order[head]]) order.push_back(w);
        }
        r.bfs_order = std::move(order);
        return r;
    }

    std::vector<Vertex> children(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex w : tree.neighbors(v))
            if (w != parent[v]) out.push_back(w);
        return out;
    }
};

/// Maximum-degree vertex, lowest label among ties.
inline Vertex max_degree_vertex(const Tree& t) {
    Vertex best = 0;
    for (Vertex v = 1; v < t.vertex_count(); ++v)
        if (t.degree(v) > t.degree(best)) best = v;
    return best;
}

/// Greedy tree for D. The root takes d_1; vertices are expanded largest
/// degree first (lowest label on ties), and each expansion hands the next
/// largest unused degrees to the new children. Inner vertices are labeled
/// 0..k-1 in assignment order, leaves k..n-1 in creation order.
inline RootedTree build_greedy_tree(const DegreeSequence& d) {
    if (d.empty()) return RootedTree::at(Tree::validate(2, {{0, 1}}), 0);

    const auto k = static_cast<Vertex>(d.size());
    const auto n = static_cast<Vertex>(d.total_vertices());
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);

    using Entry = std::tuple<Degree, Vertex>;  // (degree, -label): max-heap pops largest degree, lowest label
    std::priority_queue<Entry> pending;
    pending.push({d[0], 0});
    Vertex next_inner = 1;
    Vertex next_leaf = k;
    while (!pending.empty()) {
        auto [deg, neg_label] = pending.top();
        pending.pop();
        const Vertex v = -neg_label;
        const Degree children = v == 0 ? deg : deg - 1;
        for (Degree c = 0; c < children; ++c) {
            if (next_inner < k) {
                edges.push_back({v, next_inner});
                pending.push({d[next_inner], -next_inner});
                ++next_inner;
            } else {
                edges.push_back({v, next_leaf++});
            }
        }
    }
    return RootedTree::at(Tree::validate(n, edges), 0);
}

/// Four vertices of a path v1 .. vt (t >= 4): its endpoints and their
/// on-path neighbours.
struct PathWitness {
    Vertex v1 = -1;
    Vertex v2 = -1;
    Vertex v_penultimate = -1;
    Vertex vt = -1;
    std::int32_t length = 0;  // t, the number of vertices on the path

    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Calls fn(witness) for every path v1..vt (t >= 4) with d(v1) < d(vt) and
/// d(v2) > d(v_{t-1}), scanning (v1, vt) lexicographically. fn returns false to stop.
template <class Fn>
void for_each_path_violation(const Tree& t, Fn&& fn) {
    const Vertex n = t.vertex_count();
    std::vector<std::int32_t> dist;
    std::vector<Vertex> parent;
    std::vector<Vertex> first_step(static_cast<std::size_t>(n));
    std::vector<Vertex> queue;
    for (Vertex a = 0; a < n; ++a) {
        bfs(t, a, dist, parent);
        // first_step[x]: the vertex after a on the a..x path. Filled in BFS order.
        queue.assign(1, a);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            for (Vertex y : t.neighbors(x)) {
                if (parent[y] == x) {
                    first_step[y] = x == a ? y : first_step[x];
                    queue.push_back(y);
                }
            }
        }
        const Degree da = t.degree(a);
        for (Vertex b = 0; b < n; ++b) {
            if (dist[b] < 3 || da >= t.degree(b)) continue;
            const Vertex second = first_step[b];
            const Vertex penultimate = parent[b];
            if (t.degree(second) > t.degree(penultimate)) {
                if (!fn(PathWitness{a, second, penultimate, b, dist[b] + 1})) return;
            }
        }
    }
}

struct PathConditionResult {
    bool holds = true;
    std::optional<PathWitness> witness;

    explicit operator bool() const noexcept { return holds; }
};

/// True iff every path v1..vt (t >= 4) with d(v1) < d(vt) has d(v2) <= d(v_{t-1}).
/// On failure carries the first violating path in scan order.
inline PathConditionResult check_path_condition(const Tree& t) {
    PathConditionResult result;
    for_each_path_violation(t, [&](const PathWitness& w) {
        result = {false, w};
        return false;
    });
    return result;
}

/// True iff the vertices of degree >= min_degree induce a connected subgraph
/// (vacuously true when there are none).
inline bool check_subtree_property(const Tree& t, Degree min_degree) {
    const Vertex n = t.vertex_count();
    Vertex start = -1;
    Vertex members = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (t.degree(v) >= min_degree) {
            if (start < 0) start = v;
            ++members;
        }
    }
    if (members == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    Vertex reached = 0;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        ++reached;
        for (Vertex y : t.neighbors(x)) {
            if (!seen[y] && t.degree(y) >= min_degree) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return reached == members;
}

/// Level index of every vertex: its distance to the nearest pendant vertex.
inline std::vector<std::int32_t> pendant_levels(const Tree& t) {
    const Vertex n = t.vertex_count();
    std::vector<std::int32_t> level(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        if (t.degree(v) <= 1) {
            level[v] = 0;
            queue.push_back(v);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : t.neighbors(x)) {
            if (level[y] < 0) {
                level[y] = level[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return level;
}

/// True iff d(u) <= d(v) whenever u lies in a lower pendant level than v.
inline bool check_level_monotonicity(const Tree& t) {
    const auto level = pendant_levels(t);
    const std::int32_t top = level.empty() ? 0 : *std::max_element(level.begin(), level.end());
    std::vector<Degree> lo(static_cast<std::size_t>(top) + 1, std::numeric_limits<Degree>::max());
    std::vector<Degree> hi(static_cast<std::size_t>(top) + 1, 0);
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        lo[level[v]] = std::min(lo[level[v]], t.degree(v));
        hi[level[v]] = std::max(hi[level[v]], t.degree(v));
    }
    Degree running_max = 0;
    for (std::int32_t i = 0; i <= top; ++i) {
        if (hi[i] == 0) continue;
        if (lo[i] < running_max) return false;
        running_max = std::max(running_max, hi[i]);
    }
    return true;
}

inline bool check_level_monotonicity(const RootedTree& t) { return check_level_monotonicity(t.tree); }

}  // namespace sombor
