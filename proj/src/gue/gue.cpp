#include "arcgap/gue/gue.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "arcgap/errors.hpp"
#include "arcgap/numerics/sturm.hpp"

namespace arcgap {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void fill(TridiagonalSample& out, int n, std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng(splitmix64(splitmix64(seed) ^ index));
    std::normal_distribution<double> normal(0.0, 1.0);
    out.n = n;
    out.seed = seed;
    out.index = index;
    out.d.resize(n);
    out.e.resize(n - 1);
    for (int i = 0; i < n; ++i) out.d[i] = normal(rng);
    for (int i = 1; i < n; ++i) {
        std::gamma_distribution<double> g(static_cast<double>(n - i), 1.0);
        out.e[i - 1] = std::sqrt(g(rng));
    }
}

}  // namespace

TridiagonalSample sample_tridiagonal(int n, std::uint64_t seed, std::uint64_t index) {
    if (n < 2) throw InvalidArgument("sample_tridiagonal: N must be at least 2");
    TridiagonalSample s;
    fill(s, n, seed, index);
    return s;
}

std::vector<GapEstimate> gap_probabilities(int n, const std::vector<double>& s_list, long trials, std::uint64_t seed,
                                           unsigned threads) {
    if (n < 200) throw InvalidArgument("gap_probability: N must be at least 200");
    if (trials < 1000) throw InvalidArgument("gap_probability: at least 1000 trials required");
    for (double s : s_list)
        if (!(s >= 0.0 && s <= 3.0)) throw InvalidArgument("gap_probability: s must lie in [0, 3]");

    const std::size_t m = s_list.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<long>(threads, trials));

    // per-thread hit counts; integer sums make the result independent of scheduling
    std::vector<std::vector<long>> hits(threads, std::vector<long>(m, 0));
    auto work = [&](unsigned t) {
        TridiagonalSample smp;
        for (long k = t; k < trials; k += threads) {
            fill(smp, n, seed, static_cast<std::uint64_t>(k));
            for (std::size_t j = 0; j < m; ++j) {
                const double a = s_list[j] * scale;
                if (a == 0.0) {
                    ++hits[t][j];
                    continue;
                }
                std::size_t inside = sturm_count_below(smp.d, smp.e, a) - sturm_count_below(smp.d, smp.e, -a);
                if (inside == 0) ++hits[t][j];
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();

    std::vector<GapEstimate> out(m);
    for (std::size_t j = 0; j < m; ++j) {
        long h = 0;
        for (unsigned t = 0; t < threads; ++t) h += hits[t][j];
        GapEstimate& g = out[j];
        g.s = s_list[j];
        g.trials = trials;
        g.hits = h;
        g.p_hat = static_cast<double>(h) / trials;
        g.std_error = std::sqrt(g.p_hat * (1.0 - g.p_hat) / trials);
    }
    return out;
}

GapEstimate gap_probability(int n, double s, long trials, std::uint64_t seed) {
    return gap_probabilities(n, {s}, trials, seed).front();
}

}  // namespace arcgap
