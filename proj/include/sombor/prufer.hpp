#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sombor/degree_sequence.hpp"
#include "sombor/error.hpp"
#include "sombor/tree.hpp"

namespace sombor {

using PruferCode = std::vector<Vertex>;

namespace detail {

inline void check_code(std::span<const Vertex> code, std::int64_t n) {
    if (n < 2) throw Error(ErrorKind::invalid_argument, "Pruefer decoding needs n >= 2");
    if (static_cast<std::int64_t>(code.size()) != n - 2) {
        throw Error(ErrorKind::invalid_argument, "Pruefer code of length " + std::to_string(code.size()) +
                                                     " does not match n=" + std::to_string(n));
    }
    for (Vertex v : code) {
        if (v < 0 || v >= n) throw Error(ErrorKind::invalid_argument, "Pruefer label out of range: " + std::to_string(v));
    }
}

/// Linear-time decode into `edges` (resized to n-1). `degree` is scratch.
inline void decode_into(std::span<const Vertex> code, Vertex n, std::vector<std::int32_t>& degree,
                        std::vector<Edge>& edges) {
    degree.assign(static_cast<std::size_t>(n), 1);
    for (Vertex v : code) ++degree[v];
    edges.resize(static_cast<std::size_t>(n) - 1);
    Vertex ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    Vertex leaf = ptr;
    std::size_t i = 0;
    for (Vertex v : code) {
        edges[i++] = Edge{leaf, v};
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges[i] = Edge{leaf, n - 1};
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

}  // namespace detail

inline Tree prufer_decode(std::span<const Vertex> code, std::int64_t n) {
    detail::check_code(code, n);
    std::vector<std::int32_t> degree;
    std::vector<Edge> edges;
    detail::decode_into(code, static_cast<Vertex>(n), degree, edges);
    return Tree::validate(n, edges);
}

inline PruferCode prufer_encode(const Tree& t) {
    const Vertex n = t.vertex_count();
    if (n < 2) throw Error(ErrorKind::invalid_argument, "Pruefer encoding needs n >= 2");
    std::vector<std::int32_t> dist;
    std::vector<Vertex> parent;
    bfs(t, n - 1, dist, parent);
    std::vector<Degree> degree = degrees(t);
    PruferCode code(static_cast<std::size_t>(n) - 2);
    Vertex ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    Vertex leaf = ptr;
    for (auto& slot : code) {
        const Vertex next = parent[leaf];
        slot = next;
        if (--degree[next] == 1 && next < ptr) {
            leaf = next;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    return code;
}

/// Number of labeled trees in which inner vertex i has degree d_i and every
/// other vertex is a leaf: (n-2)! / prod (d_i - 1)!. Saturates at UINT64_MAX.
inline std::uint64_t labeled_tree_count(const DegreeSequence& d) {
    // Product of binomials C(m_1 + ... + m_i, m_i), each built exactly.
    std::uint64_t total = 1;
    std::uint64_t placed = 0;
    for (Degree di : d.degrees()) {
        const auto m = static_cast<std::uint64_t>(di - 1);
        std::uint64_t binom = 1;
        for (std::uint64_t j = 1; j <= m; ++j) {
            // binom * (placed + j) / j stays integral at every j.
            const unsigned __int128 wide = static_cast<unsigned __int128>(binom) * (placed + j) / j;
            if (wide > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
            binom = static_cast<std::uint64_t>(wide);
        }
        placed += m;
        total = detail::saturating_mul(total, binom);
    }
    return total;
}

/// Walks every labeled tree realizing D (inner vertex i gets degree d_i,
/// vertices k..n-1 are leaves) as the distinct permutations, in lexicographic
/// order, of the Pruefer multiset {i repeated d_i - 1 times}.
class TreeEnumerator {
public:
    static constexpr std::uint64_t default_budget = 10'000'000;

    explicit TreeEnumerator(const DegreeSequence& d, std::uint64_t budget = default_budget)
        : n_(static_cast<Vertex>(d.total_vertices())), expected_(labeled_tree_count(d)) {
        if (expected_ > budget) throw BudgetExceeded(expected_, budget);
        for (std::size_t i = 0; i < d.size(); ++i)
            code_.insert(code_.end(), static_cast<std::size_t>(d[i] - 1), static_cast<Vertex>(i));
        degrees_ = d.full_degrees();
    }

    Vertex vertex_count() const noexcept { return n_; }
    std::uint64_t expected_count() const noexcept { return expected_; }
    std::span<const Degree> vertex_degrees() const noexcept { return degrees_; }

    /// Calls fn(code, edges) once per tree and returns the number of trees.
    /// Throws std::logic_error if the walk disagrees with labeled_tree_count.
    template <class Fn>
    std::uint64_t for_each(Fn&& fn) {
        PruferCode code = code_;
        std::vector<std::int32_t> scratch;
        std::vector<Edge> edges;
        std::uint64_t produced = 0;
        do {
            detail::decode_into(code, n_, scratch, edges);
            ++produced;
            fn(std::span<const Vertex>(code), std::span<const Edge>(edges));
        } while (std::next_permutation(code.begin(), code.end()));
        if (produced != expected_) {
            throw std::logic_error("enumerated " + std::to_string(produced) + " trees, expected " +
                                   std::to_string(expected_));
        }
        return produced;
    }

    std::vector<Tree> collect() {
        std::vector<Tree> out;
        out.reserve(static_cast<std::size_t>(expected_));
        for_each([&](std::span<const Vertex>, std::span<const Edge> edges) {
            out.push_back(Tree::validate(n_, edges));
        });
        return out;
    }

private:
    Vertex n_;
    std::uint64_t expected_;
    PruferCode code_;
    std::vector<Degree> degrees_;
};

inline std::vector<Tree> enumerate_trees(const DegreeSequence& d, std::uint64_t budget = TreeEnumerator::default_budget) {
    return TreeEnumerator(d, budget).collect();
}

}  // namespace sombor
