#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "rtdg/errors.hpp"
#include "rtdg/expr.hpp"
#include "rtdg/graph.hpp"
#include "rtdg/graph_io.hpp"
#include "rtdg/space.hpp"
#include "rtdg/verify.hpp"

namespace {

using namespace rtdg;

/// Domain error already attributed to a CLI field; printed as "error: <msg>".
struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SpaceSpec parse_space_arg(const std::string& text) {
    try {
        return SpaceSpec::parse(text);
    } catch (const Error& e) {
        throw CliError(std::string("--space: ") + e.what());
    }
}

DistanceSet parse_distances_arg(const std::string& text, const SpaceSpec& spec) {
    try {
        DistanceSet d = DistanceSet::parse(text);
        d.require_valid_for(spec);
        return d;
    } catch (const Error& e) {
        throw CliError(std::string("--distances: ") + e.what());
    }
}

BigInt parse_degree_arg(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) {
            return std::isdigit(c);
        })) {
        throw CliError("--degree: '" + text + "' is not a nonnegative integer");
    }
    return BigInt(text);
}

void write_output(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError("--out: cannot open '" + path + "' for writing");
    out << content;
}

struct BuildArgs {
    std::string space;
    std::string distances;
    std::string format = "json";
    std::string out;
    std::size_t max_points = kDefaultMaxPoints;
};

int run_build(const BuildArgs& args) {
    SpaceSpec spec = parse_space_arg(args.space);
    DistanceSet dist = parse_distances_arg(args.distances, spec);
    DistanceGraph dg = build_distance_graph(spec, dist, args.max_points);
    GraphDocument doc = GraphDocument::from_distance_graph(dg);

    std::string path = args.out.empty() ? (args.format == "dot" ? "graph.dot" : "graph.json")
                                        : args.out;
    write_output(path, args.format == "dot" ? document_to_dot(doc) : document_to_json(doc));

    ComponentPartition parts = connected_components(dg.graph);
    std::ostringstream summary;
    summary << spec.display_name() << ", distances {" << dist.to_string() << "}: "
            << dg.graph.vertex_count() << " vertices, " << dg.graph.edges().size() << " edges, "
            << parts.component_count << " component(s)";
    if (auto deg = is_regular(dg.graph)) summary << ", degree " << *deg;
    std::cout << summary.str() << "\n";
    std::cout << "wrote " << path << "\n";
    return 0;
}

struct FormulaArgs {
    std::string space;
    std::string distances;
};

int run_formula(const FormulaArgs& args) {
    SpaceSpec spec = parse_space_arg(args.space);
    DistanceSet dist = parse_distances_arg(args.distances, spec);
    GraphExpr e = expr_for_space(spec, dist);
    std::cout << expr_to_string(e) << "\n";
    std::cout << "vertices=" << expr_vertex_count(e) << " edges=" << expr_edge_count(e)
              << " degree=" << expr_degree(e) << " components=" << expr_component_count(e)
              << " chi=" << expr_chromatic(e) << "\n";
    return 0;
}

struct VerifyArgs {
    std::string space;
    std::string distances;
    bool all_distance_sets = false;
    std::vector<std::string> claims{"structure"};
    std::size_t max_sets = 1024;
    unsigned jobs = 1;
    std::uint64_t seed = VerifyLimits{}.seed;
    bool timings = false;
    std::string out;
    std::size_t max_points = kDefaultMaxPoints;
    std::uint64_t solver_budget = 0;
};

int run_verify(const VerifyArgs& args) {
    SpaceSpec spec = parse_space_arg(args.space);
    VerifyLimits limits;
    limits.max_points = args.max_points;
    limits.seed = args.seed;
    if (args.solver_budget > 0) {
        limits.coloring.node_budget = static_cast<long long>(args.solver_budget);
        limits.iso.node_budget = static_cast<long long>(args.solver_budget);
    }

    static const std::vector<std::string> kPerSetClaims = {"structure", "regularity",
                                                           "connectivity", "chromatic", "embedding"};
    static const std::vector<std::string> kPerSpaceClaims = {"distinctness", "metric-axioms"};
    bool needs_sets = false;
    for (const std::string& claim : args.claims) {
        bool per_set = std::find(kPerSetClaims.begin(), kPerSetClaims.end(), claim) !=
                       kPerSetClaims.end();
        bool per_space = std::find(kPerSpaceClaims.begin(), kPerSpaceClaims.end(), claim) !=
                         kPerSpaceClaims.end();
        if (!per_set && !per_space) throw CliError("--claims: unknown claim '" + claim + "'");
        if (claim == "embedding" && spec.kind() != SpaceKind::sn) {
            throw CliError("--claims: embedding requires a permutation space");
        }
        needs_sets = needs_sets || per_set;
    }

    std::vector<DistanceSet> sets;
    if (needs_sets) {
        if (args.all_distance_sets == !args.distances.empty()) {
            throw CliError("--distances: exactly one of --distances and --all-distance-sets "
                           "is required for per-distance-set claims");
        }
        if (args.all_distance_sets) {
            sets = all_nonempty_distance_sets(spec);
            if (sets.size() > args.max_sets) {
                throw CliError("--max-sets: " + std::to_string(sets.size()) +
                               " distance sets requested, cap is " + std::to_string(args.max_sets));
            }
        } else {
            sets.push_back(parse_distances_arg(args.distances, spec));
        }
    }

    std::vector<std::function<VerificationReport()>> tasks;
    for (const std::string& claim : args.claims) {
        if (claim == "structure") {
            for (const DistanceSet& d : sets) {
                tasks.emplace_back([spec, d, limits] { return verify_structure_theorem(spec, d, limits); });
            }
        } else if (claim == "regularity") {
            for (const DistanceSet& d : sets) {
                tasks.emplace_back([spec, d, limits] { return verify_regularity(spec, d, limits); });
            }
        } else if (claim == "connectivity") {
            for (const DistanceSet& d : sets) {
                tasks.emplace_back([spec, d, limits] { return verify_connectivity(spec, d, limits); });
            }
        } else if (claim == "chromatic") {
            for (const DistanceSet& d : sets) {
                tasks.emplace_back([spec, d, limits] { return verify_chromatic(spec, d, limits); });
            }
        } else if (claim == "embedding") {
            for (const DistanceSet& d : sets) {
                tasks.emplace_back([spec, d, limits] { return verify_sn_embedding(spec.n(), d, limits); });
            }
        } else if (claim == "distinctness") {
            tasks.emplace_back([spec, limits] { return verify_distinctness(spec, limits); });
        } else if (claim == "metric-axioms") {
            tasks.emplace_back([spec, limits] { return verify_metric_axioms(spec, limits); });
        }
    }

    std::vector<std::optional<VerificationReport>> results(tasks.size());
    std::vector<std::exception_ptr> failures(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            try {
                results[i] = tasks[i]();
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    unsigned jobs = std::max(1u, args.jobs);
    if (jobs == 1 || tasks.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, tasks.size()); ++t) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& e : failures) {
        if (e) std::rethrow_exception(e);
    }

    std::vector<VerificationReport> reports;
    reports.reserve(results.size());
    for (auto& r : results) reports.push_back(std::move(*r));
    sort_reports(reports);

    std::ostringstream lines;
    bool all_verified = true;
    for (const VerificationReport& r : reports) {
        lines << report_to_json_line(r, args.timings) << "\n";
        all_verified = all_verified && r.status == VerifyStatus::verified;
    }
    if (args.out.empty()) {
        std::cout << lines.str();
    } else {
        write_output(args.out, lines.str());
    }
    return all_verified ? 0 : 1;
}

struct ChromaticArgs {
    std::string space;
    std::string distances;
    std::size_t max_points = kDefaultMaxPoints;
    std::uint64_t solver_budget = 0;
};

int run_chromatic(const ChromaticArgs& args) {
    SpaceSpec spec = parse_space_arg(args.space);
    DistanceSet dist = parse_distances_arg(args.distances, spec);
    BigInt formula = chromatic_formula(spec, dist);
    ColoringLimits limits;
    // An explicit chromatic request lifts the per-component solver cap up to
    // whatever the point limit allows.
    limits.max_component_vertices =
        static_cast<int>(std::min<std::size_t>(args.max_points, 1000000));
    if (args.solver_budget > 0) limits.node_budget = static_cast<long long>(args.solver_budget);
    DistanceGraph dg = build_distance_graph(spec, dist, args.max_points);
    ChromaticResult res = chromatic_number_exact(dg.graph, limits);
    if (res.exact) {
        bool agree = BigInt(res.upper) == formula;
        std::cout << "formula " << formula << ", exact " << res.upper << ", "
                  << (agree ? "agree" : "disagree") << "\n";
        return agree ? 0 : 2;
    }
    bool consistent = formula >= res.lower && formula <= res.upper;
    std::cout << "formula " << formula << ", exact in [" << res.lower << ", " << res.upper << "], "
              << (consistent ? "inconclusive" : "disagree") << "\n";
    return consistent ? 0 : 2;
}

struct RecoverArgs {
    std::string family;
    int q = 0;
    std::string degree;
};

int run_recover(const RecoverArgs& args) {
    BigInt degree = parse_degree_arg(args.degree);
    try {
        DistanceSet d;
        if (args.family == "zq") {
            if (args.q < 2) throw CliError("--q: required (>= 2) for the zq family");
            d = recover_distance_set_zq(args.q, degree);
        } else if (args.family == "sn") {
            d = recover_distance_set_sn(degree);
        } else {
            throw CliError("--family: must be 'zq' or 'sn'");
        }
        std::cout << d.to_string() << "\n";
    } catch (const NoPreimageError&) {
        std::cout << "no preimage\n";
    }
    return 0;
}

struct ExportArgs {
    std::string in;
    std::string format = "json";
    std::string out;
};

int run_export(const ExportArgs& args) {
    std::ifstream in(args.in, std::ios::binary);
    if (!in) throw CliError("--in: cannot open '" + args.in + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    GraphDocument doc;
    try {
        doc = document_from_json(buffer.str());
    } catch (const Error& e) {
        throw CliError(std::string("--in: ") + e.what());
    }
    std::string content = args.format == "dot" ? document_to_dot(doc) : document_to_json(doc);
    if (args.out.empty()) {
        std::cout << content;
    } else {
        write_output(args.out, content);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance graphs of finite spaces under the Rosenbloom-Tsfasman metric"};
    app.require_subcommand(1);

    BuildArgs build_args;
    CLI::App* build = app.add_subcommand("build", "Construct a distance graph and write it to disk");
    build->add_option("--space", build_args.space, "Space spec, e.g. zq:q=2,n=3 / sn:n=4 / product:sizes=2,3,2")->required();
    build->add_option("--distances", build_args.distances, "Comma-separated distance set, e.g. 1,3")->required();
    build->add_option("--format", build_args.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    build->add_option("--out", build_args.out, "Output path (default graph.json / graph.dot)");
    build->add_option("--max-points", build_args.max_points, "Point limit")->envname("RTDG_MAX_POINTS");

    FormulaArgs formula_args;
    CLI::App* formula = app.add_subcommand("formula", "Print the closed-form decomposition and its stats");
    formula->add_option("--space", formula_args.space, "Space spec")->required();
    formula->add_option("--distances", formula_args.distances, "Distance set")->required();

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run machine checks and stream JSON-line reports");
    verify->add_option("--space", verify_args.space, "Space spec")->required();
    verify->add_option("--distances", verify_args.distances, "Single distance set");
    verify->add_flag("--all-distance-sets", verify_args.all_distance_sets, "Every nonempty subset of dist(space)");
    verify->add_option("--claims", verify_args.claims,
                       "Claims to check: structure, regularity, connectivity, chromatic, distinctness, metric-axioms, embedding")
        ->delimiter(',');
    verify->add_option("--max-sets", verify_args.max_sets, "Cap on enumerated distance sets");
    verify->add_option("--jobs", verify_args.jobs, "Parallel verification workers");
    verify->add_option("--seed", verify_args.seed, "Seed for sampled checks");
    verify->add_flag("--timings", verify_args.timings, "Emit measured wall times instead of 0.0");
    verify->add_option("--out", verify_args.out, "Write reports to a file instead of stdout");
    verify->add_option("--max-points", verify_args.max_points, "Point limit")->envname("RTDG_MAX_POINTS");
    verify->add_option("--solver-budget", verify_args.solver_budget, "Node budget for coloring/isomorphism search");

    ChromaticArgs chromatic_args;
    CLI::App* chromatic = app.add_subcommand("chromatic", "Compare closed-form and exact chromatic numbers");
    chromatic->add_option("--space", chromatic_args.space, "Space spec")->required();
    chromatic->add_option("--distances", chromatic_args.distances, "Distance set")->required();
    chromatic->add_option("--max-points", chromatic_args.max_points, "Point limit")->envname("RTDG_MAX_POINTS");
    chromatic->add_option("--solver-budget", chromatic_args.solver_budget, "Node budget for the exact solver");

    RecoverArgs recover_args;
    CLI::App* recover = app.add_subcommand("recover", "Reconstruct the distance set from a regular degree");
    recover->add_option("--family", recover_args.family, "zq or sn")->required();
    recover->add_option("--q", recover_args.q, "Alphabet size (zq family)");
    recover->add_option("--degree", recover_args.degree, "Regular degree")->required();

    ExportArgs export_args;
    CLI::App* exp = app.add_subcommand("export", "Re-emit a stored graph as JSON or DOT");
    exp->add_option("--in", export_args.in, "Graph JSON file")->required();
    exp->add_option("--format", export_args.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    exp->add_option("--out", export_args.out, "Output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return run_build(build_args);
        if (formula->parsed()) return run_formula(formula_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (chromatic->parsed()) return run_chromatic(chromatic_args);
        if (recover->parsed()) return run_recover(recover_args);
        if (exp->parsed()) return run_export(export_args);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
