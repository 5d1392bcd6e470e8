#include "tempo/generate.hpp"

#include <cassert>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace tempo {

TemporalGraph layered_random_graph(int n, int m, int t, uint64_t seed) {
    assert(n >= 2 && t >= 1 && m >= n - 1);
    long possible = static_cast<long>(n) * (n - 1) * t;
    if (m > possible) m = static_cast<int>(possible);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_vertex(0, n - 1);
    std::uniform_int_distribution<int> pick_time(1, t);

    std::set<std::tuple<int, int, int>> used;
    std::vector<std::tuple<std::string, std::string, int>> triples;
    auto name = [](int v) { return "v" + std::to_string(v); };
    auto add = [&](int tail, int head, int time) {
        if (tail == head) return false;
        if (!used.insert({tail, head, time}).second) return false;
        triples.emplace_back(name(tail), name(head), time);
        return true;
    };

    // backbone chain through all vertices at non-decreasing times, so every
    // vertex exists and long time-respecting walks are present
    for (int i = 0; i + 1 < n; ++i) {
        int time = n > 2 ? 1 + static_cast<int>((static_cast<long>(i) * (t - 1)) / (n - 2)) : 1;
        add(i, i + 1, time);
    }
    // random fill; tails biased toward lower layers than heads keeps most
    // arcs usable by some walk
    while (static_cast<int>(triples.size()) < m) {
        int time = pick_time(rng);
        int tail = pick_vertex(rng);
        int head = pick_vertex(rng);
        if (rng() % 4 != 0 && tail > head) std::swap(tail, head);
        add(tail, head, time);
    }
    return TemporalGraph::from_triples(triples, t);
}

}  // namespace tempo
