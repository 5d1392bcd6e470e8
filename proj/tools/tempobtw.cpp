#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tempo/betweenness.hpp"
#include "tempo/counting.hpp"
#include "tempo/cost.hpp"
#include "tempo/generate.hpp"
#include "tempo/graph.hpp"
#include "tempo/oracle.hpp"
#include "tempo/predecessor.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitInfinite = 2;
constexpr int kExitMismatch = 3;

struct ModelOptions {
    std::string cost;
    int delta = 0;
    bool strict = false;
    bool non_strict = false;
};

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
    cmd->add_option("--cost", opts.cost,
                    "cost model: foremost | shortest | shortest-fastest | "
                    "shortest-restless | prefix-foremost")
        ->required();
    cmd->add_option("--delta", opts.delta, "waiting bound (shortest-restless only)");
    auto* strict = cmd->add_flag("--strict", opts.strict, "strictly increasing time labels");
    cmd->add_flag("--non-strict", opts.non_strict, "non-decreasing time labels (default)")
        ->excludes(strict);
}

tempo::CostModel make_model(const ModelOptions& opts) {
    auto kind = tempo::parse_cost_kind(opts.cost);
    if (!kind) throw std::runtime_error("unknown cost model '" + opts.cost + "'");
    switch (*kind) {
        case tempo::CostKind::shortest_restless_walk:
            if (opts.delta <= 0)
                throw std::runtime_error("shortest-restless requires --delta <positive int>");
            return tempo::CostModel::shortest_restless(opts.delta, opts.strict);
        case tempo::CostKind::strict_prefix_foremost_path:
            if (opts.non_strict)
                throw std::runtime_error("prefix-foremost is strict by definition");
            if (opts.delta > 0) throw std::runtime_error("--delta only applies to shortest-restless");
            return tempo::CostModel::prefix_foremost();
        default:
            if (opts.delta > 0) throw std::runtime_error("--delta only applies to shortest-restless");
            break;
    }
    switch (*kind) {
        case tempo::CostKind::foremost_walk: return tempo::CostModel::foremost(opts.strict);
        case tempo::CostKind::shortest_path: return tempo::CostModel::shortest(opts.strict);
        default: return tempo::CostModel::shortest_fastest(opts.strict);
    }
}

tempo::TemporalGraph load_graph(const std::string& path) {
    if (path == "-") return tempo::TemporalGraph::parse(std::cin);
    return tempo::TemporalGraph::parse_file(path);
}

int default_threads() {
    if (const char* env = std::getenv("TEMPO_BTW_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // library default: hardware threads
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

ordered_json json_number(double v) { return ordered_json::parse(format_double(v)); }

ordered_json model_json(const tempo::CostModel& model) {
    ordered_json j;
    j["kind"] = model.spelling();
    j["strict"] = model.strict;
    if (model.kind == tempo::CostKind::shortest_restless_walk)
        j["delta"] = model.delta;
    else
        j["delta"] = nullptr;
    return j;
}

int resolve_vertex(const tempo::TemporalGraph& g, const std::string& name) {
    int v = g.vertex_index(name);
    if (v < 0) throw std::runtime_error("unknown vertex '" + name + "'");
    return v;
}

template <typename V>
std::vector<int> top_order(const std::vector<V>& betweenness, int top) {
    std::vector<int> order(betweenness.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    if (top > 0 && top < static_cast<int>(order.size())) {
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return betweenness[static_cast<size_t>(b)] < betweenness[static_cast<size_t>(a)];
        });
        order.resize(static_cast<size_t>(top));
    }
    return order;
}

template <typename V>
void print_betweenness(const tempo::TemporalGraph& g, const tempo::BetweennessValues<V>& result,
                       const std::string& output, int top, int threads, double wall_time_s) {
    auto value_string = [](const V& v) {
        if constexpr (std::is_same_v<V, tempo::BigRat>)
            return v.to_string();
        else
            return format_double(v);
    };
    std::vector<int> order = top_order(result.betweenness, top);
    if (output == "csv") {
        std::cout << "vertex,betweenness,total_betweenness\n";
        for (int v : order) {
            std::cout << g.vertex_name(v) << "," << value_string(result.betweenness[static_cast<size_t>(v)])
                      << "," << value_string(result.total[static_cast<size_t>(v)]) << "\n";
        }
        return;
    }
    ordered_json j;
    j["model"] = model_json(result.model);
    j["mode"] = result.mode == tempo::Mode::exact ? "exact" : "fast";
    j["n"] = g.vertex_count();
    j["M"] = g.arc_count();
    j["T"] = g.lifetime();
    j["threads"] = threads;
    j["wall_time_s"] = json_number(wall_time_s);
    j["results"] = ordered_json::array();
    for (int v : order) {
        ordered_json row;
        row["vertex"] = g.vertex_name(v);
        if constexpr (std::is_same_v<V, tempo::BigRat>) {
            row["betweenness"] = result.betweenness[static_cast<size_t>(v)].to_string();
            row["total_betweenness"] = result.total[static_cast<size_t>(v)].to_string();
        } else {
            row["betweenness"] = json_number(result.betweenness[static_cast<size_t>(v)]);
            row["total_betweenness"] = json_number(result.total[static_cast<size_t>(v)]);
        }
        j["results"].push_back(row);
    }
    std::cout << j.dump(2) << "\n";
}

int run_betweenness(const std::string& input, const ModelOptions& mopts, bool exact,
                    const std::string& output, int top, int threads) {
    tempo::TemporalGraph g = load_graph(input);
    tempo::CostModel model = make_model(mopts);
    auto started = std::chrono::steady_clock::now();
    if (exact) {
        auto result = tempo::betweenness_all_exact(g, model, threads);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        print_betweenness(g, result, output, top, threads, secs);
    } else {
        auto result = tempo::betweenness_all_fast(g, model, threads);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        print_betweenness(g, result, output, top, threads, secs);
    }
    return 0;
}

int run_count(const std::string& input, const ModelOptions& mopts, const std::string& source,
              const std::string& target, const std::string& output) {
    tempo::TemporalGraph g = load_graph(input);
    tempo::CostModel model = make_model(mopts);
    int s = resolve_vertex(g, source);
    tempo::CostModel prepared = tempo::prepare(model, g, s);
    tempo::PredecessorGraph pg = tempo::build_predecessor_graph(g, s, prepared);
    tempo::WalkCounts counts = tempo::count_walks(pg);
    auto count_string = [&](int v) -> std::string {
        const tempo::WalkCount& c = counts.per_vertex[static_cast<size_t>(v)];
        return c.infinite ? "inf" : c.value.to_decimal();
    };
    std::vector<int> rows;
    if (!target.empty()) {
        rows.push_back(resolve_vertex(g, target));
    } else {
        for (int v = 0; v < g.vertex_count(); ++v) rows.push_back(v);
    }
    if (output == "csv") {
        std::cout << "vertex,count\n";
        for (int v : rows) std::cout << g.vertex_name(v) << "," << count_string(v) << "\n";
        return 0;
    }
    ordered_json j;
    j["model"] = model_json(model);
    j["source"] = g.vertex_name(s);
    j["counts"] = ordered_json::array();
    for (int v : rows) {
        ordered_json row;
        row["vertex"] = g.vertex_name(v);
        row["count"] = count_string(v);
        j["counts"].push_back(row);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_finiteness(const std::string& input, const ModelOptions& mopts, const std::string& output) {
    tempo::TemporalGraph g = load_graph(input);
    tempo::CostModel model = make_model(mopts);
    std::vector<bool> finite(static_cast<size_t>(g.vertex_count()));
    for (int s = 0; s < g.vertex_count(); ++s) {
        tempo::CostModel prepared = tempo::prepare(model, g, s);
        tempo::PredecessorGraph pg = tempo::build_predecessor_graph(g, s, prepared);
        finite[static_cast<size_t>(s)] = tempo::is_finite(pg);
    }
    if (output == "csv") {
        std::cout << "vertex,finite\n";
        for (int s = 0; s < g.vertex_count(); ++s)
            std::cout << g.vertex_name(s) << "," << (finite[static_cast<size_t>(s)] ? "true" : "false")
                      << "\n";
        return 0;
    }
    ordered_json j;
    j["model"] = model_json(model);
    j["finiteness"] = ordered_json::array();
    for (int s = 0; s < g.vertex_count(); ++s) {
        ordered_json row;
        row["vertex"] = g.vertex_name(s);
        row["finite"] = static_cast<bool>(finite[static_cast<size_t>(s)]);
        j["finiteness"].push_back(row);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_predgraph(const std::string& input, const ModelOptions& mopts, const std::string& source) {
    tempo::TemporalGraph g = load_graph(input);
    tempo::CostModel model = make_model(mopts);
    int s = resolve_vertex(g, source);
    tempo::CostModel prepared = tempo::prepare(model, g, s);
    tempo::PredecessorGraph pg = tempo::build_predecessor_graph(g, s, prepared);
    pg.to_dot(std::cout);
    return 0;
}

int run_oracle(const std::string& input, const ModelOptions& mopts, const std::string& output,
               int top, int cap) {
    tempo::TemporalGraph g = load_graph(input);
    tempo::CostModel model = make_model(mopts);
    auto started = std::chrono::steady_clock::now();
    auto result = tempo::oracle_betweenness(g, model, cap);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    print_betweenness(g, result, output, top, 1, secs);
    return 0;
}

int run_compare(const std::string& input, const ModelOptions& mopts, int cap, int threads) {
    tempo::TemporalGraph g = load_graph(input);
    tempo::CostModel model = make_model(mopts);
    auto engine = tempo::betweenness_all_exact(g, model, threads);
    auto oracle = tempo::oracle_betweenness(g, model, cap);
    tempo::BigRat max_abs;
    int first_diff = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        tempo::BigRat db = tempo::abs(engine.betweenness[static_cast<size_t>(v)] -
                                      oracle.betweenness[static_cast<size_t>(v)]);
        tempo::BigRat dt =
            tempo::abs(engine.total[static_cast<size_t>(v)] - oracle.total[static_cast<size_t>(v)]);
        tempo::BigRat d = db < dt ? dt : db;
        if (!d.is_zero() && first_diff < 0) first_diff = v;
        if (max_abs < d) max_abs = d;
    }
    std::cout << "max absolute discrepancy: " << max_abs.to_string() << "\n";
    std::cout << "first differing vertex: " << (first_diff < 0 ? std::string("none") : g.vertex_name(first_diff))
              << "\n";
    return first_diff < 0 ? 0 : kExitMismatch;
}

int run_bench(const ModelOptions& mopts, int max_n, int max_m, int max_t, uint64_t seed,
              int repeat, int threads) {
    tempo::CostModel model = make_model(mopts);
    std::cout << "n,M,T,wall_time_s\n";
    const double scales[] = {0.25, 0.5, 1.0};
    for (double scale : scales) {
        int n = std::max(2, static_cast<int>(max_n * scale));
        int m = std::max(n, static_cast<int>(max_m * scale));
        int t = std::max(1, static_cast<int>(max_t * scale));
        tempo::TemporalGraph g = tempo::layered_random_graph(n, m, t, seed);
        double best = 0;
        std::vector<double> times;
        for (int r = 0; r < repeat; ++r) {
            auto started = std::chrono::steady_clock::now();
            auto result = tempo::betweenness_all_fast(g, model, threads);
            times.push_back(
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count());
            (void)result;
        }
        std::sort(times.begin(), times.end());
        best = times[times.size() / 2];
        std::cout << g.vertex_count() << "," << g.arc_count() << "," << g.lifetime() << ","
                  << format_double(best) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"temporal betweenness centrality for prefix-compatible cost models"};
    app.require_subcommand(1);

    std::string input, output = "csv", source, target;
    ModelOptions mopts;
    bool exact = false;
    int top = 0;
    int threads = default_threads();
    int cap = 40;
    int bench_n = 100, bench_m = 2000, bench_t = 50, bench_repeat = 3;
    uint64_t bench_seed = 1;

    auto* betweenness = app.add_subcommand("betweenness", "betweenness of every vertex");
    betweenness->add_option("input", input, "edge-list file, '-' for stdin")->required();
    add_model_options(betweenness, mopts);
    betweenness->add_flag("--exact", exact, "exact rational arithmetic (default: fast float)");
    betweenness->add_option("--output", output, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    betweenness->add_option("--top", top, "print only the k highest-ranked vertices");
    betweenness->add_option("--threads", threads, "worker threads (default: hardware)")->check(CLI::PositiveNumber);

    auto* count = app.add_subcommand("count", "optimal walk counts from one source");
    count->add_option("input", input, "edge-list file, '-' for stdin")->required();
    add_model_options(count, mopts);
    count->add_option("--source", source, "source vertex")->required();
    count->add_option("--target", target, "only this target vertex");
    count->add_option("--output", output, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* finiteness = app.add_subcommand("finiteness", "per-source finiteness table");
    finiteness->add_option("input", input, "edge-list file, '-' for stdin")->required();
    add_model_options(finiteness, mopts);
    finiteness->add_option("--output", output, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* predgraph = app.add_subcommand("predgraph", "predecessor graph in DOT format");
    predgraph->add_option("input", input, "edge-list file, '-' for stdin")->required();
    add_model_options(predgraph, mopts);
    predgraph->add_option("--source", source, "source vertex")->required();

    auto* oracle = app.add_subcommand("oracle", "exact betweenness by exhaustive enumeration");
    oracle->add_option("input", input, "edge-list file, '-' for stdin")->required();
    add_model_options(oracle, mopts);
    oracle->add_option("--output", output, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    oracle->add_option("--top", top, "print only the k highest-ranked vertices");
    oracle->add_option("--oracle-cap", cap, "max distinct head appearances (default 40, limit 64)")
        ->check(CLI::Range(1, 64));

    auto* compare = app.add_subcommand("compare", "engine vs oracle, exit 3 on mismatch");
    compare->add_option("input", input, "edge-list file, '-' for stdin")->required();
    add_model_options(compare, mopts);
    compare->add_option("--oracle-cap", cap, "max distinct head appearances (default 40, limit 64)")
        ->check(CLI::Range(1, 64));
    compare->add_option("--threads", threads, "worker threads (default: hardware)")->check(CLI::PositiveNumber);

    auto* bench = app.add_subcommand("bench", "timing over a generated scaling family");
    add_model_options(bench, mopts);
    bench->add_option("--max-n", bench_n, "vertices at full scale (default 100)");
    bench->add_option("--max-m", bench_m, "arcs at full scale (default 2000)");
    bench->add_option("--max-t", bench_t, "lifetime at full scale (default 50)");
    bench->add_option("--seed", bench_seed, "generator seed");
    bench->add_option("--repeat", bench_repeat, "runs per point, median reported (default 3)");
    bench->add_option("--threads", threads, "worker threads (default: hardware)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (app.got_subcommand(betweenness))
            return run_betweenness(input, mopts, exact, output, top, threads);
        if (app.got_subcommand(count)) return run_count(input, mopts, source, target, output);
        if (app.got_subcommand(finiteness)) return run_finiteness(input, mopts, output);
        if (app.got_subcommand(predgraph)) return run_predgraph(input, mopts, source);
        if (app.got_subcommand(oracle)) return run_oracle(input, mopts, output, top, cap);
        if (app.got_subcommand(compare)) return run_compare(input, mopts, cap, threads);
        if (app.got_subcommand(bench))
            return run_bench(mopts, bench_n, bench_m, bench_t, bench_seed, bench_repeat, threads);
    } catch (const tempo::ParseError& e) {
        std::cerr << "error: " << e.what() << " at line " << e.line << "\n";
        return kExitError;
    } catch (const tempo::InfiniteWalkError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfinite;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
