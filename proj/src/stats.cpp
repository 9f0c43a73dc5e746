#include "brickwall/stats.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "brickwall/engine.hpp"
#include "brickwall/joints.hpp"

namespace brickwall {

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial)
{
    return splitmix64(base_seed ^ trial)();
}

vmax_stats sample_vmax(const substitution_rule& rule, std::string_view seed_type, int n, const rational& p, int trials,
                       std::uint64_t base_seed, unsigned threads)
{
    return sample_vmax(bind_parameter(rule, p), seed_type, n, trials, base_seed, threads);
}

vmax_stats sample_vmax(const substitution_rule& rule, std::string_view seed_type, int n, int trials,
                       std::uint64_t base_seed, unsigned threads)
{
    if (trials < 1)
        throw error("trials must be at least 1");
    rule.type_index(seed_type);

    vmax_stats stats;
    stats.p = rule.parameter;
    stats.n = n;
    stats.trials = trials;
    stats.base_seed = base_seed;
    stats.samples.assign(static_cast<std::size_t>(trials), 0);

    if (threads == 0)
        threads = std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(trials));

    // Trials are independent; each worker fills a strided slice of the
    // trial-indexed sample vector.
    std::vector<std::exception_ptr> failures(threads);
    auto work = [&](unsigned worker) {
        try {
            for (std::size_t k = worker; k < stats.samples.size(); k += threads)
                stats.samples[k] = v_max_at(rule, seed_type, n, trial_seed(base_seed, k));
        }
        catch (...) {
            failures[worker] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    }
    else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }
    for (const auto& f : failures)
        if (f)
            std::rethrow_exception(f);

    stats.min = *std::min_element(stats.samples.begin(), stats.samples.end());
    stats.max = *std::max_element(stats.samples.begin(), stats.samples.end());
    double sum = 0;
    for (auto s : stats.samples) {
        sum += static_cast<double>(s);
        ++stats.histogram[s];
    }
    stats.mean = sum / trials;
    return stats;
}

}
