#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    std::string err_file = "cli_test_stderr.tmp";
    std::string cmd = env_prefix + TEMPOBTW_BIN + " " + args + " 2>" + err_file;
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out, slurp(err_file)};
}

const char* kRunningExample =
    "s a 1\ns c 1\ns d 2\na b 3\nb v 5\nc e 4\nd v 5\nv f 6\nv f 9\nf e 7\ne v 8\nf z 10\ne z 11\n";
const char* kDiamond = "s a 1\ns b 1\na z 2\nb z 2\n";
const char* kCycle = "s a 1\na b 1\nb a 1\n";

std::string write_file(const std::string& name, const std::string& content) {
    std::ofstream out(name);
    out << content;
    return name;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("betweenness CSV schema and the z row") {
    std::string file = write_file("cli_running.tg", kRunningExample);
    RunResult r = run("betweenness " + file + " --cost shortest");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "vertex,betweenness,total_betweenness\n"));
    CHECK(contains(r.out, "z,0,"));
    int rows = 0;
    for (char c : r.out)
        if (c == '\n') ++rows;
    CHECK(rows == 10);  // header + 9 vertices
}

TEST_CASE("exact mode renders rationals") {
    std::string file = write_file("cli_diamond.tg", kDiamond);
    RunResult r = run("betweenness " + file + " --cost shortest --exact");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "a,1/2,5/2\n"));
    CHECK(contains(r.out, "s,0,3\n"));
}

TEST_CASE("JSON output carries the metadata keys") {
    std::string file = write_file("cli_diamond.tg", kDiamond);
    RunResult r = run("betweenness " + file + " --cost shortest-restless --delta 2 --output json --threads 1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["model"]["kind"] == "shortest-restless");
    CHECK(j["model"]["strict"] == false);
    CHECK(j["model"]["delta"] == 2);
    CHECK(j["mode"] == "fast");
    CHECK(j["n"] == 4);
    CHECK(j["M"] == 4);
    CHECK(j["T"] == 2);
    CHECK(j["threads"] == 1);
    CHECK(j.contains("wall_time_s"));
    CHECK(j["results"].size() == 4);
    CHECK(j["results"][0].contains("vertex"));
    CHECK(j["results"][0].contains("betweenness"));
    CHECK(j["results"][0].contains("total_betweenness"));

    RunResult exact = run("betweenness " + file + " --cost shortest --exact --output json");
    auto je = nlohmann::json::parse(exact.out);
    CHECK(je["mode"] == "exact");
    bool found_rational = false;
    for (const auto& row : je["results"])
        if (row["betweenness"] == "1/2") found_rational = true;
    CHECK(found_rational);
}

TEST_CASE("top-k truncates the ranking") {
    std::string file = write_file("cli_diamond.tg", kDiamond);
    RunResult r = run("betweenness " + file + " --cost shortest --exact --top 2");
    CHECK(r.exit_code == 0);
    int rows = 0;
    for (char c : r.out)
        if (c == '\n') ++rows;
    CHECK(rows == 3);  // header + 2
    CHECK(contains(r.out, "a,1/2"));
    CHECK(contains(r.out, "b,1/2"));
}

TEST_CASE("count subcommand") {
    std::string file = write_file("cli_diamond.tg", kDiamond);
    RunResult r = run("count " + file + " --cost shortest --source s");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "vertex,count\n"));
    CHECK(contains(r.out, "z,2\n"));
    RunResult target = run("count " + file + " --cost shortest --source s --target z");
    CHECK(target.out == "vertex,count\nz,2\n");
    std::string cycle = write_file("cli_cycle.tg", kCycle);
    RunResult inf = run("count " + cycle + " --cost foremost --source s");
    CHECK(inf.exit_code == 0);
    CHECK(contains(inf.out, "a,inf\n"));
}

TEST_CASE("finiteness subcommand flags the forced cycle") {
    std::string file = write_file("cli_cycle.tg", kCycle);
    RunResult r = run("finiteness " + file + " --cost foremost --non-strict");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "vertex,finite\n"));
    CHECK(contains(r.out, "s,false\n"));
    RunResult strict = run("finiteness " + file + " --cost foremost --strict");
    CHECK(contains(strict.out, "s,true\n"));
    RunResult json = run("finiteness " + file + " --cost foremost --non-strict --output json");
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["finiteness"][0]["vertex"] == "s");
    CHECK(j["finiteness"][0]["finite"] == false);
}

TEST_CASE("predgraph emits DOT with v@t ids and cost attributes") {
    std::string file = write_file("cli_diamond.tg", kDiamond);
    RunResult r = run("predgraph " + file + " --cost shortest --source s");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "digraph"));
    CHECK(contains(r.out, "\"s@0\""));
    CHECK(contains(r.out, "\"z@2\" [cost=\"length 2\"]"));
    CHECK(contains(r.out, "\"a@1\" -> \"z@2\";"));
}

TEST_CASE("oracle subcommand equals exact betweenness output") {
    std::string file = write_file("cli_diamond.tg", kDiamond);
    RunResult engine = run("betweenness " + file + " --cost shortest --exact");
    RunResult oracle = run("oracle " + file + " --cost shortest");
    CHECK(oracle.exit_code == 0);
    CHECK(engine.out == oracle.out);
}

TEST_CASE("compare reports zero discrepancy and exits 0") {
    std::string file = write_file("cli_running.tg", kRunningExample);
    RunResult r = run("compare " + file + " --cost shortest-restless --delta 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "max absolute discrepancy: 0\n"));
    CHECK(contains(r.out, "first differing vertex: none\n"));
}

TEST_CASE("exit codes: parse errors are 1, infinite sets are 2") {
    std::string bad = write_file("cli_bad.tg", "s s 3\n");
    RunResult r = run("betweenness " + bad + " --cost shortest");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "error: self-loop at line 1"));

    std::string cycle = write_file("cli_cycle.tg", kCycle);
    RunResult inf = run("betweenness " + cycle + " --cost foremost");
    CHECK(inf.exit_code == 2);
    CHECK(contains(inf.err, "error: infinite optimal walk set"));
    CHECK(contains(inf.err, "'s'"));

    RunResult unknown = run("count " + cycle + " --cost shortest --source nope");
    CHECK(unknown.exit_code == 1);
    CHECK(contains(unknown.err, "error: unknown vertex 'nope'"));

    RunResult badflag = run("betweenness " + cycle + " --cost fastest");
    CHECK(badflag.exit_code == 1);
    CHECK(contains(badflag.err, "error:"));

    RunResult missing_delta = run("betweenness " + cycle + " --cost shortest-restless");
    CHECK(missing_delta.exit_code == 1);
    CHECK(contains(missing_delta.err, "--delta"));

    RunResult bad_strict = run("betweenness " + cycle + " --cost prefix-foremost --non-strict");
    CHECK(bad_strict.exit_code == 1);
    CHECK(contains(bad_strict.err, "strict by definition"));
}

TEST_CASE("reads stdin when the input is '-'") {
    std::string file = write_file("cli_diamond.tg", kDiamond);
    RunResult r = run("betweenness - --cost shortest --exact < " + file);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "a,1/2"));
}

TEST_CASE("TEMPO_BTW_THREADS mirrors --threads") {
    std::string file = write_file("cli_diamond.tg", kDiamond);
    RunResult env = run("betweenness " + file + " --cost shortest --output json",
                        "TEMPO_BTW_THREADS=1 ");
    CHECK(env.exit_code == 0);
    auto j = nlohmann::json::parse(env.out);
    CHECK(j["threads"] == 1);
}

TEST_CASE("--help documents the flags and exits 0") {
    RunResult top = run("--help");
    CHECK(top.exit_code == 0);
    for (const char* sub :
         {"betweenness", "count", "finiteness", "predgraph", "oracle", "compare", "bench"})
        CHECK(contains(top.out, sub));
    RunResult sub = run("betweenness --help");
    CHECK(sub.exit_code == 0);
    for (const char* flag : {"--cost", "--delta", "--strict", "--non-strict", "--exact",
                             "--output", "--top", "--threads"})
        CHECK(contains(sub.out, flag));
}

TEST_CASE("repeated runs are byte-identical") {
    std::string file = write_file("cli_running.tg", kRunningExample);
    RunResult a = run("betweenness " + file + " --cost shortest-fastest --threads 2");
    RunResult b = run("betweenness " + file + " --cost shortest-fastest --threads 1");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("bench prints the scaling family as CSV") {
    RunResult r = run("bench --cost shortest --max-n 10 --max-m 30 --max-t 5 --repeat 1 --threads 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "n,M,T,wall_time_s\n"));
    int rows = 0;
    for (char c : r.out)
        if (c == '\n') ++rows;
    CHECK(rows == 4);  // header + three scale points
}
