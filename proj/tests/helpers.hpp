#pragma once

#include <vgraph/vgraph.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testing_support {

// Independent chromatic-number oracle: dynamic programming over vertex
// subsets, peeling one maximal independent set per color. Shares no code
// path with the production solver.
inline int subset_dp_chromatic(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 0) return 0;
    std::vector<unsigned> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [i, j] : edges) {
        adj[static_cast<std::size_t>(i)] |= 1u << j;
        adj[static_cast<std::size_t>(j)] |= 1u << i;
    }
    const unsigned full = (1u << n) - 1;
    std::vector<int> best(full + 1, n + 1);
    best[0] = 0;
    for (unsigned s = 1; s <= full; ++s) {
        const int v = __builtin_ctz(s);
        // Independent subsets of s containing v, grown in increasing vertex
        // order so each one is visited exactly once.
        std::vector<unsigned> stack = {1u << v};
        while (!stack.empty()) {
            const unsigned ind = stack.back();
            stack.pop_back();
            if (best[s & ~ind] + 1 < best[s]) best[s] = best[s & ~ind] + 1;
            const int hi = 31 - __builtin_clz(ind);
            unsigned extensions = s & ~ind;
            while (extensions) {
                const int w = __builtin_ctz(extensions);
                extensions &= extensions - 1;
                if (w <= hi) continue;
                if ((adj[static_cast<std::size_t>(w)] & ind) == 0) stack.push_back(ind | (1u << w));
            }
        }
    }
    return best[full];
}

struct RandomGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

inline RandomGraph random_graph(std::mt19937& rng, int max_n) {
    RandomGraph g;
    g.n = static_cast<int>(rng() % static_cast<unsigned>(max_n)) + 1;
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            if (rng() % 2 == 0) g.edges.emplace_back(i, j);
        }
    }
    return g;
}

struct CliRun {
    int exit_code = -1;
    std::string out;
};

// Runs the command line under the shell, capturing stdout; stderr is
// discarded so diagnostics cannot perturb byte comparisons.
inline CliRun run_cli(const std::string& args) {
    const char* bin = std::getenv("VGRAPH_CLI");
    const std::string cmd = std::string(bin ? bin : "./vgraph") + " " + args + " 2>/dev/null";
    CliRun result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace testing_support
