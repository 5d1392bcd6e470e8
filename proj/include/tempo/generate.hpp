#pragma once

#include <cstdint>

#include "tempo/graph.hpp"

namespace tempo {

// Layered random temporal graph: vertices get home slots spread over [1, T],
// arc times are drawn per layer and tails are biased toward vertices already
// reachable before the arc's time, so instances carry long time-respecting
// chains instead of isolated arcs. Deterministic in the seed.
TemporalGraph layered_random_graph(int n, int m, int t, uint64_t seed);

}  // namespace tempo
