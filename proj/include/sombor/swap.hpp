#pragma once

// Improving edge swap on a path v1 v2 ... v_{t-1} vt (t >= 4) with
// d(v1) < d(vt) and d(v2) > d(v_{t-1}): drop v1v2 and v_{t-1}vt, add
// v1v_{t-1} and v2vt. Degrees are preserved, only those two edge weights
// change, and the index moves by
//
//   g_{d(v1),d(vt)}(d(v_{t-1})) - g_{d(v1),d(vt)}(d(v2))  <  0
//
// because g_{a,b} is strictly increasing.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/greedy.hpp"
#include "sombor/tree.hpp"
#include "sombor/weight_math.hpp"

namespace sombor {

struct EdgeSwap {
    std::array<Edge, 2> removed;
    std::array<Edge, 2> added;
    double predicted_delta = 0.0;  // SO(after) - SO(before)
    PathWitness path;
};

inline EdgeSwap swap_from_witness(const Tree& t, const PathWitness& w) {
    EdgeSwap s;
    s.removed = {Edge{w.v1, w.v2}.normalized(), Edge{w.v_penultimate, w.vt}.normalized()};
    s.added = {Edge{w.v1, w.v_penultimate}.normalized(), Edge{w.v2, w.vt}.normalized()};
    const Degree a = t.degree(w.v1);
    const Degree b = t.degree(w.vt);
    s.predicted_delta = g_gap(a, b, t.degree(w.v_penultimate)) - g_gap(a, b, t.degree(w.v2));
    s.path = w;
    return s;
}

/// First improving swap in (v1, vt) lexicographic scan order, if any.
inline std::optional<EdgeSwap> find_improving_swap(const Tree& t) {
    auto check = check_path_condition(t);
    if (check.holds) return std::nullopt;
    return swap_from_witness(t, *check.witness);
}

/// Improving swap with the most negative predicted delta; earliest in scan order on ties.
inline std::optional<EdgeSwap> find_best_swap(const Tree& t) {
    std::optional<EdgeSwap> best;
    for_each_path_violation(t, [&](const PathWitness& w) {
        EdgeSwap s = swap_from_witness(t, w);
        if (!best || s.predicted_delta < best->predicted_delta) best = s;
        return true;
    });
    return best;
}

inline Tree apply_swap(const Tree& t, const EdgeSwap& s) {
    for (const Edge& e : s.removed) {
        if (!t.has_edge(e.u, e.v)) {
            throw Error(ErrorKind::stale_swap, "stale swap: edge (" + std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + ") is not in the tree");
        }
    }
    std::vector<Edge> edges;
    edges.reserve(t.edge_count());
    for (const Edge& e : t.edges())
        if (e != s.removed[0] && e != s.removed[1]) edges.push_back(e);
    edges.push_back(s.added[0]);
    edges.push_back(s.added[1]);
    try {
        return Tree::validate(t.vertex_count(), edges);
    } catch (const Error& e) {
        throw Error(ErrorKind::stale_swap, std::string("stale swap: result is not a tree (") + e.what() + ")");
    }
}

struct SearchStep {
    EdgeSwap swap;
    double sombor_after = 0.0;
};

struct SearchOptions {
    /// Maximum number of swaps; 0 selects 10 * n^2.
    std::uint64_t step_limit = 0;
    bool best_improvement = false;
    /// Called after every applied swap.
    std::function<void(const SearchStep&)> on_step;
};

struct SearchResult {
    Tree tree;
    std::uint64_t steps = 0;
    double initial_sombor = 0.0;
    double final_sombor = 0.0;
};

/// Applies improving swaps until the path condition holds. Each step
/// strictly lowers the index, so the walk terminates; the step limit only
/// guards against a broken invariant.
inline SearchResult local_search(const Tree& start, const SearchOptions& options = {}) {
    const auto n = static_cast<std::uint64_t>(start.vertex_count());
    const std::uint64_t limit = options.step_limit ? options.step_limit : 10 * n * n;
    SearchResult result{start, 0, sombor(start), 0.0};
    double current = result.initial_sombor;
    for (;;) {
        auto swap = options.best_improvement ? find_best_swap(result.tree) : find_improving_swap(result.tree);
        if (!swap) break;
        if (result.steps == limit) {
            throw Error(ErrorKind::step_limit,
                        "local search exceeded step limit " + std::to_string(limit));
        }
        result.tree = apply_swap(result.tree, *swap);
        const double next = sombor(result.tree);
        if (!(next < current)) {
            throw Error(ErrorKind::precondition, "swap did not decrease the index");
        }
        current = next;
        ++result.steps;
        if (options.on_step) options.on_step(SearchStep{*swap, current});
    }
    result.final_sombor = current;
    return result;
}

}  // namespace sombor
