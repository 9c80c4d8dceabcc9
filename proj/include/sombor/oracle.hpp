#pragma once

// Exhaustive check that the greedy tree attains the minimum Sombor index
// over all labeled trees with a prescribed inner-degree sequence.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "sombor/canonical.hpp"
#include "sombor/greedy.hpp"
#include "sombor/prufer.hpp"
#include "sombor/tree.hpp"

namespace sombor {

struct VerifyOptions {
    std::uint64_t budget = TreeEnumerator::default_budget;
    double tolerance = 1e-9;
    /// Canonicalize every enumerated tree to count isomorphism classes.
    /// Costs a string build per tree; off in bulk sweeps.
    bool count_classes = true;
};

struct VerificationReport {
    DegreeSequence degree_sequence;
    double greedy_value = 0.0;
    double oracle_min = 0.0;
    Tree argmin = Tree::validate(2, {{0, 1}});
    std::string argmin_canonical;
    std::uint64_t labeled_count = 0;
    std::optional<std::uint64_t> isomorphism_classes;
    std::uint64_t minimizer_classes = 0;  // isomorphism classes attaining oracle_min
    bool greedy_is_minimizer = false;     // greedy tree isomorphic to some minimizer
    bool pass = false;
};

inline VerificationReport verify_minimality(const DegreeSequence& d, const VerifyOptions& options = {}) {
    TreeEnumerator walk(d, options.budget);
    const auto deg = walk.vertex_degrees();
    const Vertex n = walk.vertex_count();

    VerificationReport report;
    report.degree_sequence = d;
    const RootedTree greedy = build_greedy_tree(d);
    report.greedy_value = sombor(greedy.tree);

    double best = std::numeric_limits<double>::infinity();
    std::set<std::string> minimizers;  // canonical forms of trees within tolerance of best
    std::optional<Tree> best_tree;
    std::string best_canonical;
    std::unordered_set<std::string> classes;

    report.labeled_count = walk.for_each([&](std::span<const Vertex>, std::span<const Edge> edges) {
        CompensatedSum sum;
        for (const Edge& e : edges) sum += edge_weight(deg[e.u], deg[e.v]);
        const double value = sum.value();
        std::optional<std::string> canon;
        if (options.count_classes) {
            canon = canonical_form(Tree::validate(n, edges));
            classes.insert(*canon);
        }
        if (value > best + options.tolerance) return;
        Tree tree = Tree::validate(n, edges);
        if (!canon) canon = canonical_form(tree);
        if (value < best - options.tolerance) {
            best = value;
            minimizers.clear();
            best_tree.reset();
        } else {
            best = std::min(best, value);
        }
        minimizers.insert(*canon);
        if (!best_tree || *canon < best_canonical) {
            best_tree = std::move(tree);
            best_canonical = *canon;
        }
    });

    report.oracle_min = best;
    report.argmin = *best_tree;
    report.argmin_canonical = best_canonical;
    if (options.count_classes) report.isomorphism_classes = classes.size();
    report.minimizer_classes = minimizers.size();
    report.greedy_is_minimizer = minimizers.count(canonical_form(greedy.tree)) > 0;
    report.pass = std::abs(report.greedy_value - report.oracle_min) <= options.tolerance &&
                  report.greedy_value <= report.oracle_min + options.tolerance;
    return report;
}

/// Result of one sequence in a sweep: a report, or the budget it blew.
struct SweepEntry {
    DegreeSequence degree_sequence;
    std::optional<VerificationReport> report;
    std::uint64_t required = 0;  // set when skipped for budget
};

/// Verifies every sequence, fanning out over `workers` threads. Output order
/// matches input order.
inline std::vector<SweepEntry> verify_all(const std::vector<DegreeSequence>& sequences, const VerifyOptions& options,
                                          unsigned workers = 1) {
    std::vector<SweepEntry> out(sequences.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < sequences.size();) {
            out[i].degree_sequence = sequences[i];
            try {
                out[i].report = verify_minimality(sequences[i], options);
            } catch (const BudgetExceeded& e) {
                out[i].required = e.required();
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    workers = std::max(1u, workers);
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace sombor
