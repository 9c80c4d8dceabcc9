#pragma once

// Command-line front end. `run` takes argv-style arguments and two streams so
// tests can drive it in-process.
//
// Exit codes: 0 success / all pass, 1 usage error, 2 validation error,
// 3 verification failure, 4 budget exceeded.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sombor/json_io.hpp"
#include "sombor/sombor.hpp"

namespace sombor::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    validation_error = 2,
    verification_failure = 3,
    budget_exceeded = 4,
};

enum class Format { text, json, dot, csv };

struct RunConfig {
    std::string command;
    std::optional<DegreeSequence> degree_sequence;
    std::optional<std::string> input_path;
    Format output_format = Format::text;
    std::uint64_t budget = TreeEnumerator::default_budget;
    double tolerance = 1e-9;
    std::uint64_t seed = 1;
    std::int64_t max_n = 9;
    unsigned threads = 1;
    bool trace = false;
    bool best_improvement = false;
    std::uint64_t step_limit = 0;
};

namespace detail {

struct Fixed9 {
    double value;
    friend std::ostream& operator<<(std::ostream& os, Fixed9 f) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(9) << f.value;
        return os << s.str();
    }
};

inline Fixed9 num(double v) { return {v}; }

inline std::string edge_str(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

inline Tree load_tree(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
        in = &file;
    }
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        try {
            return tree_from_json(Json::parse(*in));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::invalid_argument, std::string("malformed JSON: ") + e.what());
        }
    }
    return read_edge_list(*in);
}

/// Random labeled tree realizing D: a shuffled Pruefer multiset.
inline Tree random_tree(const DegreeSequence& d, std::uint64_t seed) {
    if (d.empty()) return Tree::validate(2, {{0, 1}});
    PruferCode code;
    for (std::size_t i = 0; i < d.size(); ++i)
        code.insert(code.end(), static_cast<std::size_t>(d[i] - 1), static_cast<Vertex>(i));
    std::mt19937_64 rng(seed);
    std::shuffle(code.begin(), code.end(), rng);
    return prufer_decode(code, d.total_vertices());
}

inline void write_tree(std::ostream& out, const Tree& t, Format f) {
    switch (f) {
        case Format::dot: write_dot(out, t); break;
        case Format::json: out << to_json(t).dump(2) << '\n'; break;
        case Format::csv:
            out << "u,v,d_u,d_v,weight\n";
            for (const Edge& e : t.edges()) {
                out << e.u << ',' << e.v << ',' << t.degree(e.u) << ',' << t.degree(e.v) << ','
                    << num(edge_weight(t.degree(e.u), t.degree(e.v))) << '\n';
            }
            break;
        case Format::text: write_edge_list(out, t); break;
    }
}

class Runner {
public:
    Runner(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    int greedy() {
        const RootedTree g = build_greedy_tree(*cfg_.degree_sequence);
        const double so = sombor(g.tree);
        if (cfg_.output_format == Format::json) {
            out_ << Json{{"command", "greedy"},
                         {"degree_sequence", to_json(*cfg_.degree_sequence)},
                         {"root", g.root},
                         {"tree", to_json(g.tree)},
                         {"sombor", round9(so)}}
                        .dump(2)
                 << '\n';
            return ok;
        }
        write_tree(out_, g.tree, cfg_.output_format);
        if (cfg_.output_format == Format::text) out_ << "# SO = " << num(so) << '\n';
        return ok;
    }

    int index() {
        const Tree t = subject_tree();
        if (cfg_.output_format == Format::json) {
            Json values = Json::object();
            for (const auto& idx : indices::all) values[idx.name] = round9(sombor::index(t, idx.weight));
            out_ << Json{{"command", "index"},
                         {"degree_sequence", to_json(internal_degree_sequence(t))},
                         {"tree", to_json(t)},
                         {"indices", std::move(values)}}
                        .dump(2)
                 << '\n';
        } else if (cfg_.output_format == Format::csv) {
            out_ << "index,value\n";
            for (const auto& idx : indices::all) out_ << idx.name << ',' << num(sombor::index(t, idx.weight)) << '\n';
        } else {
            out_ << "degree_sequence = " << internal_degree_sequence(t) << '\n';
            for (const auto& idx : indices::all) out_ << idx.name << " = " << num(sombor::index(t, idx.weight)) << '\n';
        }
        return ok;
    }

    int optimize() {
        const Tree start = cfg_.input_path ? load_tree(*cfg_.input_path) : random_tree(*cfg_.degree_sequence, cfg_.seed);
        SearchOptions options;
        options.step_limit = cfg_.step_limit;
        options.best_improvement = cfg_.best_improvement;
        Json trace = Json::array();
        options.on_step = [&](const SearchStep& s) {
            if (!cfg_.trace) return;
            if (cfg_.output_format == Format::json) {
                Json j = to_json(s.swap);
                j["sombor"] = round9(s.sombor_after);
                trace.push_back(std::move(j));
            } else if (cfg_.output_format == Format::text) {
                out_ << "# swap -" << edge_str(s.swap.removed[0]) << " -" << edge_str(s.swap.removed[1]) << " +"
                     << edge_str(s.swap.added[0]) << " +" << edge_str(s.swap.added[1])
                     << " delta=" << num(s.swap.predicted_delta) << " SO=" << num(s.sombor_after) << '\n';
            }
        };
        const SearchResult r = local_search(start, options);
        if (cfg_.output_format == Format::json) {
            Json j{{"command", "optimize"},
                   {"initial_sombor", round9(r.initial_sombor)},
                   {"final_sombor", round9(r.final_sombor)},
                   {"steps", r.steps},
                   {"tree", to_json(r.tree)}};
            if (cfg_.trace) j["trace"] = std::move(trace);
            out_ << j.dump(2) << '\n';
            return ok;
        }
        write_tree(out_, r.tree, cfg_.output_format);
        if (cfg_.output_format == Format::text) {
            out_ << "# swaps = " << r.steps << '\n';
            out_ << "# SO = " << num(r.final_sombor) << '\n';
        }
        return ok;
    }

    int enumerate() {
        const DegreeSequence& d = *cfg_.degree_sequence;
        TreeEnumerator walk(d, cfg_.budget);
        struct ClassInfo {
            std::uint64_t labeled = 0;
            double sombor = 0.0;
        };
        std::map<std::string, ClassInfo> classes;
        const std::uint64_t total = walk.for_each([&](std::span<const Vertex>, std::span<const Edge> edges) {
            const Tree t = Tree::validate(walk.vertex_count(), edges);
            auto& info = classes[canonical_form(t)];
            if (info.labeled++ == 0) info.sombor = sombor(t);
        });
        if (cfg_.output_format == Format::json) {
            Json list = Json::array();
            for (const auto& [canon, info] : classes)
                list.push_back(Json{{"canonical", canon}, {"labeled_count", info.labeled}, {"sombor", round9(info.sombor)}});
            out_ << Json{{"command", "enumerate"},
                         {"degree_sequence", to_json(d)},
                         {"labeled_count", total},
                         {"isomorphism_classes", classes.size()},
                         {"classes", std::move(list)}}
                        .dump(2)
                 << '\n';
            return ok;
        }
        if (cfg_.output_format == Format::text) {
            out_ << "# degree_sequence = " << d << '\n';
            out_ << "# labeled trees = " << total << '\n';
            out_ << "# isomorphism classes = " << classes.size() << '\n';
        }
        out_ << "canonical,labeled_count,sombor\n";
        for (const auto& [canon, info] : classes) out_ << canon << ',' << info.labeled << ',' << num(info.sombor) << '\n';
        return ok;
    }

    int verify() {
        VerifyOptions options{cfg_.budget, cfg_.tolerance, true};
        const VerificationReport r = verify_minimality(*cfg_.degree_sequence, options);
        if (cfg_.output_format == Format::json) {
            out_ << to_json(r).dump(2) << '\n';
        } else if (cfg_.output_format == Format::csv) {
            out_ << csv_header() << '\n' << csv_row(r) << '\n';
        } else {
            out_ << "degree_sequence = " << r.degree_sequence << '\n'
                 << "greedy_value = " << num(r.greedy_value) << '\n'
                 << "oracle_min = " << num(r.oracle_min) << '\n'
                 << "labeled_count = " << r.labeled_count << '\n'
                 << "isomorphism_classes = " << *r.isomorphism_classes << '\n'
                 << "minimizer_classes = " << r.minimizer_classes << '\n'
                 << "argmin = " << r.argmin_canonical << '\n'
                 << "result = " << (r.pass ? "pass" : "FAIL") << '\n';
        }
        return r.pass ? ok : verification_failure;
    }

    int sweep() {
        const auto sequences = sequences_up_to(cfg_.max_n);
        VerifyOptions options{cfg_.budget, cfg_.tolerance, false};
        const auto entries = verify_all(sequences, options, cfg_.threads);
        std::size_t failed = 0, skipped = 0;
        if (cfg_.output_format == Format::json) {
            Json list = Json::array();
            for (const auto& e : entries) {
                if (e.report) {
                    list.push_back(to_json(*e.report));
                } else {
                    list.push_back(Json{{"degree_sequence", to_json(e.degree_sequence)},
                                        {"skipped", true},
                                        {"required", e.required}});
                }
            }
            out_ << list.dump(2) << '\n';
        } else {
            out_ << csv_header() << '\n';
            for (const auto& e : entries) {
                if (e.report) {
                    out_ << csv_row(*e.report) << '\n';
                } else {
                    out_ << '"' << e.degree_sequence.to_string() << "\"," << e.degree_sequence.total_vertices()
                         << ",,," << e.required << ",skipped\n";
                }
            }
        }
        for (const auto& e : entries) {
            if (!e.report) ++skipped;
            else if (!e.report->pass) ++failed;
        }
        if (failed) return verification_failure;
        if (skipped) return budget_exceeded;
        return ok;
    }

    int decompose() {
        const Tree t = subject_tree();
        const Decomposition d = sombor::decompose(t);
        if (cfg_.output_format == Format::json) {
            Json j = to_json(d);
            j["sombor"] = round9(sombor(t));
            out_ << j.dump(2) << '\n';
            return ok;
        }
        if (cfg_.output_format == Format::text) out_ << "# base SO = " << num(d.base_value) << '\n';
        out_ << "t,d_t,d_p,attached_at,delta,running_total\n";
        double running = d.base_value;
        for (const auto& s : d.steps) {
            running = incremental_sombor(running, s.degree, s.parent_degree);
            out_ << s.index_t << ',' << s.degree << ',' << s.parent_degree << ',' << s.attached_at << ','
                 << num(s.delta) << ',' << num(running) << '\n';
        }
        if (cfg_.output_format == Format::text) out_ << "# SO = " << num(sombor(t)) << '\n';
        return ok;
    }

private:
    Tree subject_tree() const {
        if (cfg_.input_path) return load_tree(*cfg_.input_path);
        return build_greedy_tree(*cfg_.degree_sequence).tree;
    }

    static std::string csv_header() {
        return "degree_sequence,n,greedy_value,oracle_min,labeled_count,result";
    }

    static std::string csv_row(const VerificationReport& r) {
        std::ostringstream s;
        s << '"' << r.degree_sequence.to_string() << "\"," << r.degree_sequence.total_vertices() << ','
          << num(r.greedy_value) << ',' << num(r.oracle_min) << ',' << r.labeled_count << ','
          << (r.pass ? "pass" : "FAIL");
        return s.str();
    }

    const RunConfig& cfg_;
    std::ostream& out_;
};

inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::budget_exceeded: return budget_exceeded;
        case ErrorKind::step_limit: return verification_failure;
        default: return validation_error;
    }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string degrees_text;
    std::string format_text = "text";

    CLI::App app{"Greedy trees and the Sombor index: construction, local search and exhaustive verification",
                 "sombor"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{
        {"text", Format::text}, {"json", Format::json}, {"dot", Format::dot}, {"csv", Format::csv}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json", "dot", "csv"}));
        sub->add_option("--budget", cfg.budget, "Maximum number of labeled trees to enumerate")
            ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
        sub->add_option("--tol", cfg.tolerance, "Absolute tolerance for value comparisons")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Seed for random start trees");
    };
    auto add_degrees = [&](CLI::App* sub) {
        return sub->add_option("-d,--degrees", degrees_text, "Degree sequence, e.g. 4,3,3,2 (1s are dropped)");
    };
    auto add_input = [&](CLI::App* sub) {
        return sub->add_option("--input", cfg.input_path, "Tree file: edge list, or JSON when ending in .json ('-' = stdin)");
    };

    auto* greedy = app.add_subcommand("greedy", "Build the greedy tree for a degree sequence");
    add_degrees(greedy)->required();
    add_common(greedy);

    auto* index = app.add_subcommand("index", "Degree-based indices of a tree (or of the greedy tree for -d)");
    auto* index_in = add_input(index);
    add_degrees(index)->excludes(index_in);
    add_common(index);

    auto* optimize = app.add_subcommand("optimize", "Run improving edge swaps until none applies");
    auto* opt_in = add_input(optimize);
    add_degrees(optimize)->excludes(opt_in);
    optimize->add_flag("--trace", cfg.trace, "Report every swap");
    optimize->add_flag("--best", cfg.best_improvement, "Best-improvement instead of first-improvement");
    optimize->add_option("--max-steps", cfg.step_limit, "Step guard (default 10 n^2)");
    add_common(optimize);

    auto* enumerate = app.add_subcommand("enumerate", "List isomorphism classes of all labeled trees for a sequence");
    add_degrees(enumerate)->required();
    add_common(enumerate);

    auto* verify = app.add_subcommand("verify", "Check greedy minimality against exhaustive enumeration");
    add_degrees(verify)->required();
    add_common(verify);

    auto* sweep = app.add_subcommand("sweep", "Verify every sequence up to a vertex-count bound");
    sweep->add_option("--max-n", cfg.max_n, "Largest total vertex count")->check(CLI::Range(2, 64));
    sweep->add_option("--threads", cfg.threads, "Worker threads (0 = hardware concurrency)");
    add_common(sweep);

    auto* decompose = app.add_subcommand("decompose", "Peel a path-condition tree down to a star");
    auto* dec_in = add_input(decompose);
    add_degrees(decompose)->excludes(dec_in);
    add_common(decompose);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    cfg.output_format = formats.at(format_text);
    if (cfg.threads == 0) cfg.threads = std::max(1u, std::thread::hardware_concurrency());

    try {
        if (!degrees_text.empty()) cfg.degree_sequence = DegreeSequence::parse(degrees_text);
        const bool needs_subject = cfg.command == "index" || cfg.command == "optimize" || cfg.command == "decompose";
        if (needs_subject && !cfg.degree_sequence && !cfg.input_path) {
            err << "error: " << cfg.command << " needs -d or --input\n";
            return usage_error;
        }
        detail::Runner runner(cfg, out);
        if (cfg.command == "greedy") return runner.greedy();
        if (cfg.command == "index") return runner.index();
        if (cfg.command == "optimize") return runner.optimize();
        if (cfg.command == "enumerate") return runner.enumerate();
        if (cfg.command == "verify") return runner.verify();
        if (cfg.command == "sweep") return runner.sweep();
        return runner.decompose();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return detail::exit_code_for(e.kind());
    }
}

}  // namespace sombor::cli
