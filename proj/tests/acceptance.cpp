// Acceptance suite: end-to-end checks of the exact solver, the
// constructions, the matrix census and the CLI against each other.
// Prints one PASS/FAIL line per criterion; exits nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ivec/constructions.hpp"
#include "ivec/matrix.hpp"
#include "ivec/solver.hpp"

using namespace ivec;

namespace {

std::string g_cli;
std::filesystem::path g_dir;
int g_failures = 0;

void criterion(int number, const std::string& name, double limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (limit_s > 0 && elapsed > limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    std::printf("criterion %d [%s]: %s (%.2fs)%s%s\n", number, name.c_str(),
                ok ? "PASS" : "FAIL", elapsed, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// All simple-graph-feasible biregular signatures with m <= 20, l <= 5,
// paired with cycling seeds until `count` instances exist.
struct Instance { int m, l, n, k; std::uint64_t seed; };

std::vector<Instance> biregular_pool(int count, int max_k = 99) {
    std::vector<Instance> out;
    std::uint64_t seed = 1;
    while (static_cast<int>(out.size()) < count) {
        for (int m = 2; m <= 20 && static_cast<int>(out.size()) < count; ++m)
            for (int l = 1; l <= 5 && static_cast<int>(out.size()) < count; ++l)
                for (int n = 1; n <= m; ++n) {
                    if ((m * l) % n != 0) continue;
                    int k = m * l / n;
                    if (k > m || l > n || k > max_k) continue;
                    out.push_back({m, l, n, k, seed});
                    if (static_cast<int>(out.size()) == count) break;
                }
        ++seed;
    }
    return out;
}

bool kmn_exactness(std::string& detail) {
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= m && m * n <= 12; ++n) {
            auto g = complete_bipartite(m, n);
            auto rx = exact_min_width(g, Side::X);
            auto ry = exact_min_width(g, Side::Y);
            if (rx.verdict != Verdict::Feasible ||
                rx.value != kmn_min_width(m, n, Side::X)) {
                detail = "X mismatch at K_{" + std::to_string(m) + "," +
                         std::to_string(n) + "}";
                return false;
            }
            if (ry.verdict != Verdict::Feasible || ry.value != m) {
                detail = "Y mismatch at K_{" + std::to_string(m) + "," +
                         std::to_string(n) + "}";
                return false;
            }
        }
    return true;
}

bool kmn_construction(std::string& detail) {
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= m; ++n) {
            auto g = complete_bipartite(m, n);
            auto c = block_interval_coloring(g);
            if (c.t != kmn_min_width(m, n, Side::X) ||
                !verify(g, c, Side::X, CheckMode::Interval).passed) {
                detail = "coloring failed at K_{" + std::to_string(m) + "," +
                         std::to_string(n) + "}";
                return false;
            }
            auto p = spectrum_matrix(g, c);
            if (!is_collected(p) || !is_row_regular(p, n) ||
                !is_column_compressed(p, n)) {
                detail = "matrix predicates failed at K_{" + std::to_string(m) +
                         "," + std::to_string(n) + "}";
                return false;
            }
        }
    return true;
}

bool upper_bound_construction(std::string& detail) {
    for (const Instance& inst : biregular_pool(200)) {
        auto g = random_biregular(inst.m, inst.l, inst.n, inst.k, inst.seed);
        auto c = block_interval_coloring(g);
        int expected = inst.l * ((inst.m + inst.l - 1) / inst.l);
        // The verified witness itself certifies exact_w <= t.
        if (c.t != expected || !verify(g, c, Side::X, CheckMode::Interval).passed) {
            detail = "Bip(" + std::to_string(inst.m) + "," +
                     std::to_string(inst.l) + "," + std::to_string(inst.n) +
                     "," + std::to_string(inst.k) + ") seed " +
                     std::to_string(inst.seed);
            return false;
        }
    }
    return true;
}

bool census_both_directions(std::string& detail) {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 6; ++m) {
            auto w = census_min_width(m, n, 10);
            if (!w || *w != collected_width_bound(m, n)) {
                detail = "census mismatch at m=" + std::to_string(m) +
                         " n=" + std::to_string(n);
                return false;
            }
            if ((m + n - 1) / n < 2) continue;
            bool ok = true;
            for (int width = n; width <= 10; ++width)
                for_each_collected(m, n, width, [&](const BinaryMatrix& p) {
                    if (row_start(p, n + 1) < n + 1) ok = false;
                    auto q = peel(p, n);
                    if (!is_collected(q) || !is_row_regular(q, n) ||
                        !is_column_compressed(q, n))
                        ok = false;
                });
            if (!ok) {
                detail = "peeling failed at m=" + std::to_string(m) +
                         " n=" + std::to_string(n);
                return false;
            }
        }
    return true;
}

bool range_criterion(std::string& detail) {
    std::vector<std::pair<std::string, BipartiteGraph>> instances{
        {"C6", even_cycle(3)},
        {"C10", even_cycle(5)},
        {"K42", complete_bipartite(4, 2)},
        {"K33", complete_bipartite(3, 3)}};
    for (auto& [name, g] : instances)
        for (Side side : {Side::X, Side::Y}) {
            auto [lo, hi] = side_range(g, side);
            for (int t = lo; t <= hi; ++t) {
                auto c = range_coloring(g, side, t);
                if (c.t != t || !verify(g, c, side, CheckMode::Interval).passed) {
                    detail = name + " side " + side_name(side) + " t=" +
                             std::to_string(t);
                    return false;
                }
            }
            auto exact = exact_min_width(g, side);
            if (exact.verdict != Verdict::Feasible) {
                detail = name + " exact search did not finish";
                return false;
            }
            for (int t = 1; t < exact.value; ++t)
                if (feasible(g, side, t).verdict != Verdict::Infeasible) {
                    detail = name + " side " + side_name(side) +
                             ": t=" + std::to_string(t) + " not infeasible";
                    return false;
                }
        }
    return true;
}

bool persistent_contract(std::string& detail) {
    for (const Instance& inst : biregular_pool(100, 5)) {
        // Transposed, the smaller part plays X with uniform degree k = max
        // degree, which is the hypothesis the construction needs.
        auto g = transpose(
            random_biregular(inst.m, inst.l, inst.n, inst.k, inst.seed));
        auto c = persistent_interval_coloring(g);
        if (c.t != g.max_degree()) {
            detail = "t != max degree";
            return false;
        }
        for (int x = 1; x <= g.x_count(); ++x) {
            auto sp = spectrum(g, c, Side::X, x);
            if (sp.min() != 1 || sp.max() != g.degree_x(x) ||
                !sp.is_interval()) {
                detail = "spectrum not [1,d(x)]";
                return false;
            }
        }
    }
    return true;
}

bool contiguity(std::string& detail) {
    for (auto& [name, g] :
         std::vector<std::pair<std::string, BipartiteGraph>>{
             {"C6", even_cycle(3)},
             {"K32", complete_bipartite(3, 2)},
             {"K22", complete_bipartite(2, 2)}}) {
        auto exact = exact_min_width(g, Side::X);
        if (exact.verdict != Verdict::Feasible) {
            detail = name + ": exact search did not finish";
            return false;
        }
        auto profile = feasibility_profile(g, Side::X, 1, g.edge_count());
        for (auto& [t, verdict] : profile) {
            Verdict expected =
                t < exact.value ? Verdict::Infeasible : Verdict::Feasible;
            if (verdict != expected) {
                detail = name + ": wrong verdict at t=" + std::to_string(t);
                return false;
            }
        }
    }
    return true;
}

int shell(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool cli_round_trip(std::string& detail) {
    auto gp = (g_dir / "g.txt").string();
    auto cp = (g_dir / "g.col").string();

    auto pipeline = [&](const std::string& gen_args) {
        if (shell(g_cli + " gen " + gen_args + " -o " + gp + " 2>/dev/null") != 0)
            return false;
        if (shell(g_cli + " color --graph " + gp + " --side X -o " + cp +
                  " 2>/dev/null") != 0)
            return false;
        return shell(g_cli + " verify --graph " + gp + " --coloring " + cp +
                     " --side X >/dev/null") == 0;
    };

    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= m; ++n)
            if (!pipeline("--complete " + std::to_string(m) + " " +
                          std::to_string(n))) {
                detail = "complete pipeline failed at K_{" + std::to_string(m) +
                         "," + std::to_string(n) + "}";
                return false;
            }
    for (const Instance& inst : biregular_pool(200)) {
        std::string args = "--biregular " + std::to_string(inst.m) + " " +
                           std::to_string(inst.l) + " " + std::to_string(inst.n) +
                           " " + std::to_string(inst.k) + " --seed " +
                           std::to_string(inst.seed);
        if (!pipeline(args)) {
            detail = "biregular pipeline failed: " + args;
            return false;
        }
    }

    // determinism: rerunning a pipeline is byte-identical
    std::string snapshot_g = slurp(gp), snapshot_c = slurp(cp);
    const Instance last = biregular_pool(200).back();
    std::string args = "--biregular " + std::to_string(last.m) + " " +
                       std::to_string(last.l) + " " + std::to_string(last.n) +
                       " " + std::to_string(last.k) + " --seed " +
                       std::to_string(last.seed);
    if (!pipeline(args) || slurp(gp) != snapshot_g || slurp(cp) != snapshot_c) {
        detail = "rerun not byte-identical";
        return false;
    }

    // a tampered color must flip verify to exit 1: copy edge (1,2)'s color
    // onto edge (1,1), forcing a duplicate at x1
    if (!pipeline("--complete 3 3")) {
        detail = "tamper setup failed";
        return false;
    }
    std::string col = slurp(cp);
    auto line1_end = col.find('\n', col.find("c 1 1"));
    col[line1_end - 1] = col[col.find('\n', line1_end + 1) - 1];
    std::ofstream(g_dir / "bad.col") << col;
    int rc = shell(g_cli + " verify --graph " + gp + " --coloring " +
                   (g_dir / "bad.col").string() + " --side X >/dev/null");
    if (rc != 1) {
        detail = "tampered verify exited " + std::to_string(rc);
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-cli>\n", argv[0]);
        return 2;
    }
    g_cli = argv[1];
    g_dir = std::filesystem::temp_directory_path() / "ivec_acceptance";
    std::filesystem::create_directories(g_dir);

    criterion(1, "complete-bipartite exactness", 60, kmn_exactness);
    criterion(2, "complete-bipartite construction + matrix", 5, kmn_construction);
    criterion(3, "biregular upper bound", 30, upper_bound_construction);
    criterion(4, "collected-matrix census", 60, census_both_directions);
    criterion(5, "full color range", 120, range_criterion);
    criterion(6, "persistent-interval contract", 10, persistent_contract);
    criterion(7, "feasibility contiguity", 60, contiguity);
    criterion(8, "CLI round trip", 0, cli_round_trip);

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
