#pragma once

// Peeling a path-condition tree T = T_k down to the star T_1: each step takes
// a minimum-degree inner vertex v_t whose children are all pendant and
// removes those children, leaving v_t pendant. Reversed, every step attaches
// d_t - 1 leaves to a pendant vertex whose parent has degree d_p, which moves
// the Sombor index by
//
//   (d_t - 1) sqrt(d_t^2 + 1) + sqrt(d_t^2 + d_p^2) - sqrt(d_p^2 + 1).

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/greedy.hpp"
#include "sombor/tree.hpp"
#include "sombor/weight_math.hpp"

namespace sombor {

/// Index change caused by attaching d_t - 1 leaves to a pendant vertex whose
/// neighbour has degree d_p.
inline double attach_delta(Degree d_t, Degree d_p) {
    if (d_t < 2) throw Error(ErrorKind::invalid_argument, "attached degree must be >= 2");
    detail::require_degree(d_p, "d_p");
    return static_cast<double>(d_t - 1) * edge_weight(d_t, 1) + edge_weight(d_t, d_p) - edge_weight(d_p, 1);
}

inline double incremental_sombor(double so_prev, Degree d_t, Degree d_p) { return so_prev + attach_delta(d_t, d_p); }

/// Gives pendant vertex v exactly d_t - 1 new pendant children, labeled
/// n, n+1, ... in order.
inline Tree attach(const Tree& prev, Vertex v, Degree d_t) {
    if (d_t < 2) throw Error(ErrorKind::invalid_argument, "attached degree must be >= 2");
    if (v < 0 || v >= prev.vertex_count() || prev.degree(v) != 1) {
        throw Error(ErrorKind::precondition, "vertex " + std::to_string(v) + " is not pendant");
    }
    std::vector<Edge> edges(prev.edges().begin(), prev.edges().end());
    Vertex next = prev.vertex_count();
    for (Degree i = 1; i < d_t; ++i) edges.push_back({v, next++});
    return Tree::validate(next, edges);
}

struct StripResult {
    Tree tree;                      // relabeled compactly, surviving labels keep their order
    Vertex vertex = -1;             // the stripped vertex, label in `tree` (pendant there)
    Vertex original_vertex = -1;    // same vertex, label in the input tree
    Degree stripped_degree = 0;     // d_t
    Degree parent_degree = 0;       // d_p, degree of the surviving neighbour
    std::vector<Vertex> kept;       // kept[new label] = old label
};

/// Removes the pendant neighbours of v so that v itself becomes pendant.
/// Keeps the unique non-pendant neighbour, or the lowest-labeled neighbour
/// when all of them are pendant (star). Identity inverse of attach.
inline StripResult strip_vertex(const Tree& t, Vertex v) {
    if (v < 0 || v >= t.vertex_count() || t.degree(v) < 2) {
        throw Error(ErrorKind::precondition, "vertex " + std::to_string(v) + " is not an inner vertex");
    }
    Vertex keep = -1;
    for (Vertex w : t.neighbors(v)) {
        if (t.degree(w) > 1) {
            if (keep >= 0) {
                throw Error(ErrorKind::precondition,
                            "vertex " + std::to_string(v) + " has more than one non-pendant neighbour");
            }
            keep = w;
        }
    }
    if (keep < 0) keep = t.neighbors(v).front();

    std::vector<char> drop(static_cast<std::size_t>(t.vertex_count()), 0);
    for (Vertex w : t.neighbors(v))
        if (w != keep) drop[w] = 1;

    StripResult r{Tree::validate(1, std::span<const Edge>{}), -1, v, t.degree(v), t.degree(keep), {}};
    std::vector<Vertex> renamed(static_cast<std::size_t>(t.vertex_count()), -1);
    for (Vertex x = 0; x < t.vertex_count(); ++x) {
        if (!drop[x]) {
            renamed[x] = static_cast<Vertex>(r.kept.size());
            r.kept.push_back(x);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : t.edges())
        if (!drop[e.u] && !drop[e.v]) edges.push_back({renamed[e.u], renamed[e.v]});
    r.tree = Tree::validate(static_cast<std::int64_t>(r.kept.size()), edges);
    r.vertex = renamed[v];
    return r;
}

/// Picks v_k and strips it. Candidates are the minimum-degree inner vertices
/// whose children (w.r.t. the given root) are all pendant; among them the one
/// with the smallest parent degree wins, then the deepest in BFS order. This is
/// the vertex the greedy labeling would reach last, and it keeps the path
/// condition intact in the stripped tree.
inline StripResult strip_last(const RootedTree& rooted) {
    const Tree& t = rooted.tree;
    if (auto check = check_path_condition(t); !check) {
        const auto& w = *check.witness;
        throw Error(ErrorKind::precondition, "path condition violated on path " + std::to_string(w.v1) + " .. " +
                                                 std::to_string(w.vt));
    }
    Degree min_inner = 0;
    for (Vertex v = 0; v < t.vertex_count(); ++v)
        if (t.degree(v) > 1 && (min_inner == 0 || t.degree(v) < min_inner)) min_inner = t.degree(v);
    if (min_inner == 0) throw Error(ErrorKind::precondition, "no strippable vertex: tree has no inner vertex");

    Vertex chosen = -1;
    Degree chosen_parent_degree = 0;
    for (auto it = rooted.bfs_order.rbegin(); it != rooted.bfs_order.rend(); ++it) {
        const Vertex v = *it;
        if (t.degree(v) != min_inner) continue;
        const bool pendant_children = std::all_of(t.neighbors(v).begin(), t.neighbors(v).end(), [&](Vertex w) {
            return w == rooted.parent[v] || t.degree(w) == 1;
        });
        if (!pendant_children) continue;
        const Degree parent_degree = rooted.parent[v] < 0 ? 0 : t.degree(rooted.parent[v]);
        if (chosen < 0 || parent_degree < chosen_parent_degree) {
            chosen = v;
            chosen_parent_degree = parent_degree;
        }
    }
    if (chosen < 0) throw Error(ErrorKind::precondition, "no strippable vertex");
    return strip_vertex(t, chosen);
}

/// Roots at the maximum-degree vertex (lowest label on ties) and strips.
inline StripResult strip_last(const Tree& t) { return strip_last(RootedTree::at(t, max_degree_vertex(t))); }

struct DecompositionStep {
    std::int64_t index_t = 0;   // t in 2..k
    Degree degree = 0;          // d_t
    Vertex attached_at = -1;    // pendant vertex of T_{t-1} promoted to v_t
    Degree parent_degree = 0;   // d_p
    Degree added_leaves = 0;    // d_t - 1
    double delta = 0.0;
};

struct Decomposition {
    Tree base;                  // T_1 (a star), or K2 for the empty sequence
    double base_value = 0.0;    // sombor(T_1) = d_1 sqrt(d_1^2 + 1)
    std::vector<DecompositionStep> steps;  // ascending t
    std::vector<Tree> trees;    // T_1 .. T_k
};

/// Full T_k -> T_1 sequence. Every intermediate tree is required to satisfy
/// the path condition; strip_last throws otherwise.
inline Decomposition decompose(const Tree& t) {
    std::vector<Tree> chain{t};
    std::vector<DecompositionStep> reversed;
    auto inner = static_cast<std::int64_t>(internal_degree_sequence(t).size());
    while (inner > 1) {
        StripResult r = strip_last(chain.back());
        DecompositionStep step;
        step.index_t = inner;
        step.degree = r.stripped_degree;
        step.attached_at = r.vertex;
        step.parent_degree = r.parent_degree;
        step.added_leaves = r.stripped_degree - 1;
        step.delta = attach_delta(r.stripped_degree, r.parent_degree);
        reversed.push_back(step);
        chain.push_back(std::move(r.tree));
        --inner;
    }
    Decomposition out{chain.back(), sombor(chain.back()), {reversed.rbegin(), reversed.rend()},
                      {chain.rbegin(), chain.rend()}};
    return out;
}

/// Rebuilds sombor(T_k) from the base value and the step deltas.
inline double replay(const Decomposition& d) {
    CompensatedSum value;
    value += d.base_value;
    for (const auto& s : d.steps) value += attach_delta(s.degree, s.parent_degree);
    return value.value();
}

}  // namespace sombor
