#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sombor/tree.hpp"

namespace sombor {

namespace detail {

/// Centers of a tree (one or two vertices), found by peeling leaves.
inline std::vector<Vertex> tree_centers(const Tree& t) {
    const Vertex n = t.vertex_count();
    if (n <= 2) {
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) all[v] = v;
        return all;
    }
    std::vector<Degree> deg = degrees(t);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] == 1) layer.push_back(v);
    Vertex remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<Vertex>(layer.size());
        std::vector<Vertex> next;
        for (Vertex leaf : layer) {
            for (Vertex w : t.neighbors(leaf)) {
                if (--deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

/// AHU encoding of the tree rooted at `root`.
inline std::string ahu_encode(const Tree& t, Vertex root) {
    // Iterative post-order so deep paths do not blow the stack.
    std::vector<std::pair<Vertex, Vertex>> order;  // (vertex, parent)
    order.push_back({root, -1});
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [v, p] = order[i];
        for (Vertex w : t.neighbors(v))
            if (w != p) order.push_back({w, v});
    }
    std::vector<std::vector<std::string>> kids(static_cast<std::size_t>(t.vertex_count()));
    std::string result;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto [v, p] = *it;
        auto& k = kids[v];
        std::sort(k.begin(), k.end());
        std::string s = "(";
        for (auto& c : k) s += c;
        s += ")";
        k.clear();
        if (p < 0) result = std::move(s);
        else kids[p].push_back(std::move(s));
    }
    return result;
}

}  // namespace detail

/// Isomorphism-invariant string: two trees get the same string iff they are
/// isomorphic. AHU parenthesis code rooted at the center; for a bicentral
/// tree the smaller of the two center-rooted codes is taken.
inline std::string canonical_form(const Tree& t) {
    const auto centers = detail::tree_centers(t);
    std::string best;
    for (Vertex c : centers) {
        std::string s = detail::ahu_encode(t, c);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

}  // namespace sombor
