// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "fixtures.hpp"

#include <cama/datagen.hpp>
#include <cama/evaluator.hpp>
#include <cama/graph.hpp>
#include <cama/report.hpp>
#include <cama/rwr.hpp>
#include <cama/target_selector.hpp>
#include <cama/transition.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace cama;
using namespace cama::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0 && elapsed >= budget_s) {
        o.require(false, "took " + std::to_string(elapsed) + " s, budget " + std::to_string(budget_s) + " s");
    }
    if (!o.pass) ++failures;
    std::printf("%s %d %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, name, elapsed,
                o.pass ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Relative path -> contents for every regular file under root.
std::map<std::string, std::string> tree(const fs::path& root) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::recursive_directory_iterator(root)) {
        if (e.is_regular_file()) files[fs::relative(e.path(), root).generic_string()] = slurp(e.path());
    }
    return files;
}

bool connected(const HeteroGraph& g) {
    std::vector<bool> seen(g.node_count(), false);
    std::vector<NodeIndex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (NodeIndex y : g.neighbors(x)) {
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == g.node_count();
}

double linf(std::span<const double> a, std::span<const double> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

int main() {
    criterion(1, "worked example: cama1 = 1/2, cama2 = 3/5, selected at (0.4, 0.5)", 0, [](Outcome& o) {
        const auto c = example_corpus();
        const auto s = cama_scores(ListenerId{0}, c);
        o.require(s.cama1 == Ratio{5, 10}, "cama1 is not 5/10");
        o.require(s.cama2 == Ratio{3, 5}, "cama2 is not 3/5");
        o.require(s.cama1.value() == 0.5 && s.cama2.value() == 0.6, "decimal values differ");
        o.require(is_target(s, Thresholds{0.4, 0.5}), "listener not selected");
        o.require(select_targets(c, Thresholds{0.4, 0.5}) == std::vector<ListenerId>{ListenerId{0}},
                  "select_targets disagrees");
    });

    criterion(2, "counterexamples: chain cama1 = 9/45, split cama2 = 25/50", 0, [](Outcome& o) {
        const auto chain = cama_scores(ListenerId{0}, chain_corpus());
        o.require(chain.cama1 == Ratio{9, 45}, "chain cama1 is not 9/45");
        o.require(chain.cama1.value() == 0.2, "chain cama1 != 0.2");
        const auto half = cama_scores(ListenerId{0}, split_corpus());
        o.require(half.cama2 == Ratio{25, 50}, "split cama2 is not 25/50");
        o.require(half.cama2.value() == 0.5, "split cama2 != 0.5");
    });

    criterion(3, "transition rows sum to 1 within 1e-12, no listener-listener entries", 1.0, [](Outcome& o) {
        const auto c = generate(GenConfig{});
        o.require(c.listener_count() == 100 && c.song_count() == 50, "unexpected corpus size");
        const auto tp = build_transition(build_graph(c));
        std::size_t non_dangling = 0;
        for (NodeIndex row = 0; row < tp.dimension(); ++row) {
            const auto cols = tp.row_columns(row);
            const auto vals = tp.row_values(row);
            if (cols.empty()) continue;
            ++non_dangling;
            double sum = 0.0;
            for (double v : vals) sum += v;
            o.require(std::abs(sum - 1.0) <= 1e-12, "row " + std::to_string(row) + " sums to " + std::to_string(sum));
            if (row < tp.listener_count()) {
                for (NodeIndex col : cols) o.require(col >= tp.listener_count(), "listener-listener entry");
            }
        }
        for (NodeIndex a = 0; a < tp.listener_count(); ++a) {
            for (NodeIndex b = 0; b < tp.listener_count(); ++b) o.require(tp.at(a, b) == 0.0, "listener-listener entry");
        }
        o.require(row_stochastic_check(tp, 1e-12).empty(), "row_stochastic_check reports deviations");
        o.require(non_dangling > 0, "no rows");
    });

    criterion(4, "iterative walk matches the dense solve within 1e-9 on 100 random graphs", 10.0, [](Outcome& o) {
        Rng rng(2024);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto c = random_corpus(rng, 60);
            const auto tp = build_transition(build_graph(c));
            o.require(tp.dimension() <= 60, "graph too large");
            const auto source = static_cast<NodeIndex>(rng.below(c.listener_count()));
            for (double alpha : {0.2, 0.5, 0.8}) {
                const auto it = rwr_rank(tp, source, WalkConfig{alpha, 500, 1e-12});
                const auto ex = rwr_oracle(tp, source, alpha);
                worst = std::max(worst, linf(it.scores, ex.scores));
            }
        }
        o.require(worst <= 1e-9, "max L-inf difference " + std::to_string(worst));
    });

    criterion(5, "two-node graph at alpha 0.8 converges to (5/9, 4/9)", 0, [](Outcome& o) {
        const auto tp = build_transition(build_graph(make_corpus({{0}}, {{0}}, 1)));
        const auto s = rwr_rank(tp, 0, WalkConfig{0.8, 500, 1e-12});
        o.require(std::abs(s.scores[0] - 5.0 / 9.0) <= 1e-9, "listener score " + std::to_string(s.scores[0]));
        o.require(std::abs(s.scores[1] - 4.0 / 9.0) <= 1e-9, "song score " + std::to_string(s.scores[1]));
    });

    criterion(6, "total score stays 1 +- 1e-9 at every step on connected fixtures", 0, [](Outcome& o) {
        const std::vector<Corpus> fixtures{example_corpus(), make_corpus({{0}}, {{0}}, 1), chain_corpus(),
                                           generate(GenConfig{})};
        for (const auto& c : fixtures) {
            const auto g = build_graph(c);
            o.require(connected(g), "fixture is not connected");
            const auto tp = build_transition(g);
            for (double alpha : {0.2, 0.5, 0.8}) {
                std::size_t steps = 0;
                (void)rwr_rank(tp, 0, WalkConfig{alpha, 100, 0.0}, [&](std::size_t, std::span<const double> s) {
                    double total = 0.0;
                    for (double v : s) total += v;
                    o.require(std::abs(total - 1.0) <= 1e-9, "total " + std::to_string(total));
                    ++steps;
                });
                o.require(steps == 100, "observer not called every step");
            }
        }
    });

    criterion(7, "no recommended song is in the listener's training playlist", 0, [](Outcome& o) {
        Evaluation e(split(generate(GenConfig{}), 42), WalkConfig{});
        std::size_t lists = 0;
        std::size_t songs = 0;
        e.set_audit([&](ListenerId l, std::span<const SongId> recs) {
            ++lists;
            const auto train = e.split().train.playlist(l);
            for (SongId s : recs) {
                ++songs;
                o.require(std::find(train.begin(), train.end(), s) == train.end(), "training song recommended");
            }
        });
        (void)sweep(e, SweepSpec{});
        o.require(lists > 0 && songs > 0, "nothing was recommended");
    });

    criterion(8, "seeded sweep: metrics in [0,1], targets > 0, golden match, alpha grid, antitone", 60.0, [](Outcome& o) {
        const auto c = generate(GenConfig{});
        const auto rows = sweep(c, SweepSpec{}, 42);
        std::set<double> alphas;
        std::map<double, std::size_t> by_t1, by_t2;
        for (const auto& r : rows) {
            for (const auto& m : {r.precision, r.recall, r.f1}) {
                if (m) o.require(*m >= 0.0 && *m <= 1.0, "metric outside [0,1]");
            }
            o.require(r.precision.has_value() == (r.n_targets > 0), "metric presence mismatch");
            if (r.t1 == 0.4 && r.t2 == 0.5) alphas.insert(r.alpha);
            if (r.alpha == 0.8 && r.t2 == 0.5) by_t1[r.t1] = r.n_targets;
            if (r.alpha == 0.8 && r.t1 == 0.4) by_t2[r.t2] = r.n_targets;
            if (r.label == "base") o.require(r.n_targets > 0, "no targets at the default thresholds");
        }
        o.require(alphas == std::set<double>{0.2, 0.4, 0.6, 0.8}, "alpha grid differs");
        for (const auto* series : {&by_t1, &by_t2}) {
            std::size_t previous = SIZE_MAX;
            for (const auto& [t, n] : *series) {
                o.require(n <= previous, "target count rises with the threshold");
                previous = n;
            }
        }
        o.require(by_t1.size() == 7 && by_t2.size() == 9, "threshold series incomplete");

        std::ostringstream csv;
        write_report_csv(csv, rows);
        const auto golden = slurp(fs::path(CAMA_GOLDEN_DIR) / "sweep_seed42.csv");
        o.require(!golden.empty(), "golden file missing");
        o.require(csv.str() == golden, "report differs from the golden file");

        const auto row = evaluate(c, Thresholds{}, WalkConfig{}, 5, 42);
        std::ostringstream one;
        write_report_csv(one, std::span(&row, 1));
        o.require(one.str() == slurp(fs::path(CAMA_GOLDEN_DIR) / "evaluate_seed42.csv"),
                  "evaluate row differs from the golden file");
    });

    criterion(9, "two seed-42 pipeline runs give byte-identical output trees", 0, [](Outcome& o) {
#ifdef CAMA_CLI
        const fs::path root = CAMA_WORK_DIR;
        std::vector<fs::path> dirs{root / "run_a", root / "run_b"};
        for (const auto& dir : dirs) {
            fs::remove_all(dir);
            fs::create_directories(dir);
            for (const char* step : {"generate", "sweep", "plots"}) {
                const std::string cmd = std::string("\"") + CAMA_CLI + "\" --seed 42 --output-dir \"" + dir.string() +
                                        "\" " + step + " >/dev/null 2>&1";
                o.require(std::system(cmd.c_str()) == 0, std::string(step) + " failed");
            }
        }
        const auto a = tree(dirs[0]);
        const auto b = tree(dirs[1]);
        o.require(a.size() >= 14, "expected corpus, report, plots and sidecars");
        o.require(a == b, "output trees differ");
        o.require(a.count("sweep.csv") && a.at("sweep.csv") == slurp(fs::path(CAMA_GOLDEN_DIR) / "sweep_seed42.csv"),
                  "CLI sweep differs from the golden file");
#else
        o.require(false, "built without the cama tool");
#endif
    });

    return failures == 0 ? 0 : 1;
}
