// Command-line front end: instance generation, coloring constructions,
// verification, bounds, matrix checks and the exact solver.
//
// Exit codes: 0 success/verified, 1 verification failure or infeasible,
// 2 usage/parse error, 3 search budget exhausted.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ivec/coloring.hpp"
#include "ivec/constructions.hpp"
#include "ivec/graph.hpp"
#include "ivec/matrix.hpp"
#include "ivec/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_stream(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ivec::ParseError(0, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_stream(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ivec::ParseError(0, "cannot open file for writing: " + path);
    out << content;
}

ivec::Side parse_side(const std::string& s) {
    if (s == "X" || s == "x") return ivec::Side::X;
    if (s == "Y" || s == "y") return ivec::Side::Y;
    throw CLI::ValidationError("--side", "must be X or Y");
}

struct GenOptions {
    std::vector<int> complete, biregular;
    int cycle = 0;
    std::uint64_t seed = 0;
    std::string output = "-";
};

int run_gen(const GenOptions& o) {
    int modes = (!o.complete.empty()) + (o.cycle > 0) + (!o.biregular.empty());
    if (modes != 1) {
        std::cerr << "gen: exactly one of --complete/--cycle/--biregular required\n";
        return kExitUsage;
    }
    ivec::BipartiteGraph g =
        !o.complete.empty()
            ? ivec::complete_bipartite(o.complete[0], o.complete[1])
        : o.cycle > 0
            ? ivec::even_cycle(o.cycle)
            : ivec::random_biregular(o.biregular[0], o.biregular[1],
                                     o.biregular[2], o.biregular[3], o.seed);
    write_stream(o.output, ivec::emit_graph(g));
    std::cerr << "RESULT m=" << g.x_count() << " n=" << g.y_count()
              << " edges=" << g.edge_count() << "\n";
    return kExitOk;
}

struct ColorOptions {
    std::string graph_file;
    std::string side_str = "X";
    std::string method;
    int t = 0;
    std::string output = "-";
    std::int64_t max_nodes = 50'000'000;
    int max_t = 62;
    int jobs = 1;
};

int run_color(const ColorOptions& o) {
    ivec::BipartiteGraph g = ivec::parse_graph(read_stream(o.graph_file));
    ivec::Side side = parse_side(o.side_str);
    std::string method = o.method;
    if (method.empty()) method = o.t > 0 ? "range" : (side == ivec::Side::X ? "block" : "persistent");

    ivec::SearchBudget budget{o.max_nodes, o.max_t, 0};
    ivec::EdgeColoring c;
    if (method == "block") {
        c = ivec::block_interval_coloring(g, side);
    } else if (method == "persistent") {
        c = ivec::persistent_interval_coloring_on(g, side);
    } else if (method == "max") {
        c = ivec::max_coloring(g, side);
    } else if (method == "range") {
        if (o.t < 1) {
            std::cerr << "color: --method range requires --t\n";
            return kExitUsage;
        }
        c = ivec::range_coloring(g, side, o.t, budget);
    } else if (method == "exact") {
        if (o.t > 0) {
            ivec::FeasibilityResult r = ivec::feasible(g, side, o.t, budget, o.jobs);
            if (r.verdict == ivec::Verdict::Unknown) return kExitBudget;
            if (r.verdict == ivec::Verdict::Infeasible) {
                std::cerr << "RESULT t=" << o.t << " verdict=infeasible\n";
                return kExitFail;
            }
            c = *r.witness;
        } else {
            ivec::ExactResult r = ivec::exact_min_width(g, side, budget, o.jobs);
            if (r.verdict != ivec::Verdict::Feasible) return kExitBudget;
            c = *r.witness;
        }
    } else {
        std::cerr << "color: unknown method '" << method << "'\n";
        return kExitUsage;
    }
    if (!ivec::verify(g, c, side, ivec::CheckMode::Interval).passed) {
        std::cerr << "color: internal error, coloring failed verification\n";
        return kExitFail;
    }
    write_stream(o.output, ivec::emit_coloring(g, c));
    std::cerr << "RESULT t=" << c.t << " side=" << ivec::side_name(side)
              << " method=" << method << "\n";
    return kExitOk;
}

struct VerifyOptions {
    std::string graph_file, coloring_file;
    std::string side_str = "X";
    bool persistent = false;
};

int run_verify(const VerifyOptions& o) {
    ivec::BipartiteGraph g = ivec::parse_graph(read_stream(o.graph_file));
    ivec::EdgeColoring c = ivec::parse_coloring(read_stream(o.coloring_file), g);
    ivec::Side side = parse_side(o.side_str);
    ivec::VerificationReport report = ivec::verify(
        g, c, side,
        o.persistent ? ivec::CheckMode::Persistent : ivec::CheckMode::Interval);
    for (const auto& check : report.checks) {
        std::cout << check.name << ": " << (check.passed ? "pass" : "FAIL");
        if (!check.witness.empty()) std::cout << " (" << check.witness << ")";
        std::cout << "\n";
    }
    std::cout << "RESULT verified=" << (report.passed ? "true" : "false")
              << " t=" << c.t << "\n";
    return report.passed ? kExitOk : kExitFail;
}

struct BoundOptions {
    std::string graph_file;
    std::string side_str = "X";
};

int run_bound(const BoundOptions& o) {
    ivec::BipartiteGraph g = ivec::parse_graph(read_stream(o.graph_file));
    ivec::Side side = parse_side(o.side_str);
    auto sig = ivec::classify_biregular(g);
    if (!sig) {
        std::cout << "graph is not biregular; no bounds apply\n";
        std::cout << "RESULT biregular=false\n";
        return kExitOk;
    }
    int chi = sig->k;
    int size = g.part_size(side);
    int d = g.degree(side, 1);
    int upper = d * ((size + d - 1) / d);
    bool complete = g.edge_count() == g.x_count() * g.y_count();

    std::cout << "chromatic_index " << chi << "\n";
    std::cout << "upper " << upper << "\n";
    std::ostringstream result;
    result << "RESULT chi=" << chi << " upper=" << upper;
    if (complete) {
        int exact = ivec::kmn_min_width(g.x_count(), g.y_count(), side);
        std::cout << "exact " << exact << "\n";
        result << " exact=" << exact;
        if (size >= g.part_size(ivec::opposite(side))) {
            int lower = ivec::collected_width_bound(size, g.part_size(ivec::opposite(side)));
            std::cout << "lower " << lower << "\n";
            result << " lower=" << lower;
        }
    } else {
        std::cout << "exact unknown -- run exact\n";
        result << " exact=unknown";
    }
    std::cout << result.str() << "\n";
    return kExitOk;
}

struct ExactOptions {
    std::string graph_file;
    std::string side_str = "X";
    std::string witness_file;
    std::int64_t max_nodes = 50'000'000;
    int max_t = 62;
    int jobs = 1;
};

int run_exact(const ExactOptions& o) {
    ivec::BipartiteGraph g = ivec::parse_graph(read_stream(o.graph_file));
    ivec::Side side = parse_side(o.side_str);
    ivec::SearchBudget budget{o.max_nodes, o.max_t, 0};
    ivec::ExactResult r = ivec::exact_min_width(g, side, budget, o.jobs);
    if (r.verdict != ivec::Verdict::Feasible) {
        std::cout << "RESULT verdict=unknown bracket=[" << r.lower << ","
                  << r.upper << "] nodes=" << r.nodes << "\n";
        return kExitBudget;
    }
    std::cout << "RESULT w_R=" << r.value << " side=" << ivec::side_name(side)
              << " nodes=" << r.nodes << "\n";
    if (!o.witness_file.empty())
        write_stream(o.witness_file, ivec::emit_coloring(g, *r.witness));
    return kExitOk;
}

struct MatrixCheckOptions {
    std::string file;
    int b = 0, c = 0;
};

int run_matrix_check(const MatrixCheckOptions& o) {
    ivec::BinaryMatrix h = ivec::parse_matrix(read_stream(o.file));
    bool collected = ivec::is_collected(h);
    std::cout << "collected " << (collected ? "true" : "false") << "\n";
    bool ok = collected;
    std::ostringstream result;
    result << "RESULT collected=" << (collected ? "true" : "false");
    if (o.b > 0) {
        bool reg = ivec::is_row_regular(h, o.b);
        std::cout << "regular(" << o.b << ") " << (reg ? "true" : "false") << "\n";
        result << " regular=" << (reg ? "true" : "false");
        ok = ok && reg;
    }
    if (o.c > 0) {
        bool comp = ivec::is_column_compressed(h, o.c);
        std::cout << "compressed(" << o.c << ") " << (comp ? "true" : "false") << "\n";
        result << " compressed=" << (comp ? "true" : "false");
        ok = ok && comp;
    }
    std::cout << result.str() << "\n";
    return ok ? kExitOk : kExitFail;
}

struct MatrixCensusOptions {
    int m = 0, n = 0, wmax = 0;
};

int run_matrix_census(const MatrixCensusOptions& o) {
    auto w = ivec::census_min_width(o.m, o.n, o.wmax);
    if (w) {
        std::cout << "RESULT min_width=" << *w << "\n";
        return kExitOk;
    }
    std::cout << "RESULT min_width=none wmax=" << o.wmax << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval edge colorings of bipartite graphs"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate a graph instance");
    cmd_gen->add_option("--complete", gen.complete, "complete bipartite K_{m,n}")
        ->expected(2);
    cmd_gen->add_option("--cycle", gen.cycle, "even cycle C_{2s}");
    cmd_gen->add_option("--biregular", gen.biregular, "random instance m l n k")
        ->expected(4);
    cmd_gen->add_option("--seed", gen.seed, "PRNG seed for --biregular");
    cmd_gen->add_option("-o,--output", gen.output, "output file, - for stdout");

    ColorOptions color;
    auto* cmd_color = app.add_subcommand("color", "construct a verified coloring");
    cmd_color->add_option("--graph", color.graph_file, "graph file, - for stdin")
        ->required();
    cmd_color->add_option("--side", color.side_str, "X or Y");
    cmd_color->add_option("--t", color.t, "target color count");
    cmd_color->add_option("--method", color.method,
                          "block|persistent|max|range|exact");
    cmd_color->add_option("-o,--output", color.output, "output file");
    cmd_color->add_option("--max-nodes", color.max_nodes, "search node budget");
    cmd_color->add_option("--max-t", color.max_t, "search color ceiling");
    cmd_color->add_option("--jobs", color.jobs, "solver branch parallelism")
        ->check(CLI::PositiveNumber);

    VerifyOptions verify_opts;
    auto* cmd_verify = app.add_subcommand("verify", "verify a coloring");
    cmd_verify->add_option("--graph", verify_opts.graph_file)->required();
    cmd_verify->add_option("--coloring", verify_opts.coloring_file)->required();
    cmd_verify->add_option("--side", verify_opts.side_str, "X or Y");
    cmd_verify->add_flag("--persistent", verify_opts.persistent,
                         "require spectra anchored at color 1");

    BoundOptions bound;
    auto* cmd_bound = app.add_subcommand("bound", "print applicable bounds");
    cmd_bound->add_option("--graph", bound.graph_file)->required();
    cmd_bound->add_option("--side", bound.side_str, "X or Y");

    ExactOptions exact;
    auto* cmd_exact = app.add_subcommand("exact", "exact minimum color count");
    cmd_exact->add_option("--graph", exact.graph_file)->required();
    cmd_exact->add_option("--side", exact.side_str, "X or Y");
    cmd_exact->add_option("--witness", exact.witness_file, "witness output file");
    cmd_exact->add_option("--max-nodes", exact.max_nodes, "search node budget");
    cmd_exact->add_option("--max-t", exact.max_t, "search color ceiling");
    cmd_exact->add_option("--jobs", exact.jobs, "solver branch parallelism")
        ->check(CLI::PositiveNumber);

    auto* cmd_matrix = app.add_subcommand("matrix", "collected-matrix tools");
    cmd_matrix->require_subcommand(1);
    MatrixCheckOptions mcheck;
    auto* cmd_mcheck = cmd_matrix->add_subcommand("check", "predicate checks");
    cmd_mcheck->add_option("--file", mcheck.file)->required();
    cmd_mcheck->add_option("--b", mcheck.b, "row-regularity value");
    cmd_mcheck->add_option("--c", mcheck.c, "column-compression value");
    MatrixCensusOptions mcensus;
    auto* cmd_mcensus =
        cmd_matrix->add_subcommand("census", "exhaustive minimum width");
    cmd_mcensus->add_option("--m", mcensus.m)->required();
    cmd_mcensus->add_option("--n", mcensus.n)->required();
    cmd_mcensus->add_option("--wmax", mcensus.wmax)->required();

    try {
        app.parse(argc, argv);
        if (*cmd_gen) return run_gen(gen);
        if (*cmd_color) return run_color(color);
        if (*cmd_verify) return run_verify(verify_opts);
        if (*cmd_bound) return run_bound(bound);
        if (*cmd_exact) return run_exact(exact);
        if (*cmd_mcheck) return run_matrix_check(mcheck);
        if (*cmd_mcensus) return run_matrix_census(mcensus);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const ivec::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ivec::BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ivec::ConstructionError& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return kExitFail;
    } catch (const ivec::GenerationError& e) {
        std::cerr << "generation failed: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
