// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sombor/sombor.hpp"
#include "support/fixtures.hpp"

namespace sombor::acceptance {

constexpr double kOracleTol = 1e-9;
constexpr double kExactTol = 1e-12;

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// (n-2)! / prod (d_i - 1)! via factorials, independent of labeled_tree_count.
std::uint64_t factorial_multinomial(const DegreeSequence& d) {
    auto fact = [](std::int64_t m) {
        std::uint64_t f = 1;
        for (std::int64_t i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    std::uint64_t value = fact(d.total_vertices() - 2);
    for (Degree x : d.degrees()) value /= fact(x - 1);
    return value;
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

// 1. Greedy value equals the exhaustive minimum.
Outcome oracle_equivalence() {
    std::vector<DegreeSequence> small, large;
    for (const auto& d : sequences_up_to(13)) {
        if (d.total_vertices() <= 11) small.push_back(d);
        else if (labeled_tree_count(d) <= 1'000'000) large.push_back(d);
    }
    VerifyOptions options;
    options.tolerance = kOracleTol;
    options.count_classes = false;
    options.budget = 10'000'000;
    auto entries = verify_all(small, options, worker_count());
    options.budget = 1'000'000;
    auto more = verify_all(large, options, worker_count());
    entries.insert(entries.end(), more.begin(), more.end());

    Outcome o;
    std::uint64_t trees = 0;
    double worst = 0.0;
    for (const auto& e : entries) {
        if (!e.report) {
            o.pass = false;
            o.detail += " skipped " + e.degree_sequence.to_string();
            continue;
        }
        const auto& r = *e.report;
        trees += r.labeled_count;
        worst = std::max(worst, std::abs(r.greedy_value - r.oracle_min));
        if (!r.pass || std::abs(r.greedy_value - r.oracle_min) > kOracleTol) {
            o.pass = false;
            o.detail += " fail " + r.degree_sequence.to_string();
        }
    }
    std::ostringstream s;
    s << small.size() << " sequences n<=11 + " << large.size() << " sequences n in 12..13, " << trees
      << " labeled trees, max |greedy-oracle| = " << worst << o.detail;
    o.detail = s.str();
    return o;
}

// 2. g strictly increasing and h strictly decreasing in x.
Outcome monotonicity() {
    std::uint64_t checks = 0, violations = 0;
    for (Degree a = 1; a <= 100; ++a)
        for (Degree b = a + 1; b <= 100; ++b)
            for (Degree x = 1; x < 100; ++x, ++checks)
                if (!(g_gap(a, b, x) < g_gap(a, b, x + 1))) ++violations;
    for (Degree a = 2; a <= 100; ++a)
        for (Degree x = 1; x < 100; ++x, ++checks)
            if (!(h_gap(a, x) > h_gap(a, x + 1))) ++violations;
    return {violations == 0, std::to_string(checks) + " comparisons, " + std::to_string(violations) + " violations"};
}

// 3. Improving swaps keep tree shape and degrees, and the predicted delta is exact.
Outcome swap_soundness() {
    std::mt19937_64 rng(20240601);
    Outcome o;
    int instances = 0;
    double worst = 0.0;
    while (instances < 1000) {
        const Vertex n = 4 + static_cast<Vertex>(rng() % 17);  // 4..20
        const Tree t = testing::random_tree(rng, n);
        const auto swap = find_improving_swap(t);
        if (!swap) continue;
        ++instances;
        Tree after = t;
        try {
            after = apply_swap(t, *swap);
        } catch (const Error& e) {
            o.pass = false;
            o.detail = std::string(" apply failed: ") + e.what();
            break;
        }
        const double measured = sombor(after) - sombor(t);
        worst = std::max(worst, std::abs(measured - swap->predicted_delta));
        if (degrees(after) != degrees(t) || after.edge_count() != t.edge_count() ||
            std::abs(measured - swap->predicted_delta) > kExactTol || !(measured < 0.0)) {
            o.pass = false;
        }
    }
    std::ostringstream s;
    s << instances << " swaps, max |measured-predicted| = " << worst << o.detail;
    o.detail = s.str();
    return o;
}

// 4. Local search from every labeled tree with n <= 9 reaches a path-condition
// fixed point no better than greedy.
Outcome local_search_convergence() {
    Outcome o;
    std::uint64_t starts = 0, fixed_points_at_greedy = 0, total_steps = 0;
    for (const auto& d : sequences_up_to(9)) {
        const double greedy = sombor(build_greedy_tree(d).tree);
        for (const Tree& t : enumerate_trees(d)) {
            ++starts;
            try {
                const SearchResult r = local_search(t);
                total_steps += r.steps;
                if (!check_path_condition(r.tree).holds || r.final_sombor < greedy - kOracleTol) o.pass = false;
                if (std::abs(r.final_sombor - greedy) <= kOracleTol) ++fixed_points_at_greedy;
            } catch (const Error& e) {
                o.pass = false;
                o.detail = std::string(" error on ") + d.to_string() + ": " + e.what();
            }
        }
    }
    std::ostringstream s;
    s << starts << " starts, " << total_steps << " swaps, " << fixed_points_at_greedy
      << " fixed points at the greedy value" << o.detail;
    o.detail = s.str();
    return o;
}

// 5. Incremental replay of the decomposition reproduces the index.
Outcome incremental_formula() {
    std::mt19937_64 rng(1337);
    Outcome o;
    double worst = 0.0;
    std::uint64_t intermediates = 0;
    for (int i = 0; i < 500; ++i) {
        const auto seq = testing::random_sequence(rng, 1 + static_cast<int>(rng() % 8), 7);
        const Tree t = build_greedy_tree(seq).tree;
        try {
            const Decomposition d = decompose(t);
            worst = std::max(worst, std::abs(replay(d) - sombor(t)));
            if (std::abs(replay(d) - sombor(t)) > kExactTol) o.pass = false;
            for (const Tree& step : d.trees) {
                ++intermediates;
                if (!check_path_condition(step).holds) o.pass = false;
            }
        } catch (const Error& e) {
            o.pass = false;
            o.detail = std::string(" error on ") + seq.to_string() + ": " + e.what();
        }
    }
    std::ostringstream s;
    s << "500 greedy trees, " << intermediates << " intermediate trees, max |replay-direct| = " << worst << o.detail;
    o.detail = s.str();
    return o;
}

// 6. Star and path closed forms.
Outcome closed_forms() {
    double worst = 0.0;
    for (Vertex m = 1; m <= 100; ++m) {
        const double md = m;
        worst = std::max(worst, std::abs(sombor(make_star(m)) - md * std::sqrt(md * md + 1.0)));
    }
    for (Vertex n = 3; n <= 100; ++n) {
        const double expected = 2.0 * std::sqrt(5.0) + (n - 3) * 2.0 * std::sqrt(2.0);
        worst = std::max(worst, std::abs(sombor(make_path(n)) - expected));
    }
    std::ostringstream s;
    s << "stars m<=100, paths n<=100, max error = " << worst;
    return {worst <= kExactTol, s.str()};
}

// 7. Pruefer bijection and enumeration cardinality.
Outcome prufer_bijection() {
    Outcome o;
    std::mt19937_64 rng(99);
    for (int i = 0; i < 10'000; ++i) {
        const Vertex n = 2 + static_cast<Vertex>(rng() % 29);  // 2..30
        PruferCode code(static_cast<std::size_t>(n) - 2);
        for (auto& c : code) c = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
        const Tree t = prufer_decode(code, n);
        if (prufer_encode(t) != code) o.pass = false;
        const Tree shuffled = relabel(t, testing::random_permutation(rng, n));
        if (prufer_decode(prufer_encode(shuffled), n) != shuffled) o.pass = false;
    }
    std::uint64_t exhaustive = 0;
    for (Vertex n = 2; n <= 7; ++n) {
        PruferCode code(static_cast<std::size_t>(n) - 2, 0);
        for (;;) {
            ++exhaustive;
            const Tree t = prufer_decode(code, n);
            if (prufer_encode(t) != code || prufer_decode(prufer_encode(t), n) != t) o.pass = false;
            std::size_t i = 0;
            while (i < code.size() && ++code[i] == n) code[i++] = 0;
            if (i == code.size()) break;
        }
    }
    std::uint64_t sequences = 0;
    for (const auto& d : sequences_up_to(13)) {
        const std::uint64_t expected = factorial_multinomial(d);
        if (d.total_vertices() > 11 && expected > 1'000'000) continue;
        ++sequences;
        std::uint64_t walked = 0;
        TreeEnumerator(d, 10'000'000).for_each([&](std::span<const Vertex>, std::span<const Edge>) { ++walked; });
        if (walked != expected || labeled_tree_count(d) != expected) {
            o.pass = false;
            o.detail += " count mismatch " + d.to_string();
        }
    }
    std::ostringstream s;
    s << "10000 random codes, " << exhaustive << " exhaustive codes n<=7, cardinality on " << sequences
      << " sequences" << o.detail;
    o.detail = s.str();
    return o;
}

}  // namespace sombor::acceptance

int main() {
    using namespace sombor::acceptance;
    using sombor::acceptance::Outcome;
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"1 main-theorem oracle equivalence", &oracle_equivalence},
        {"2 monotonicity of g and h", &monotonicity},
        {"3 swap soundness", &swap_soundness},
        {"4 local-search convergence", &local_search_convergence},
        {"5 incremental-formula exactness", &incremental_formula},
        {"6 closed forms", &closed_forms},
        {"7 Pruefer bijection", &prufer_bijection},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::printf("[%s] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
