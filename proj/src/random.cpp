#include "collapsim/parallel.hpp"
#include "collapsim/random.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace collapsim {

Rng trial_stream(std::uint64_t master_seed, std::uint64_t trial_index)
{
    std::seed_seq seq{
        static_cast<std::uint32_t>(master_seed),
        static_cast<std::uint32_t>(master_seed >> 32),
        static_cast<std::uint32_t>(trial_index),
        static_cast<std::uint32_t>(trial_index >> 32),
    };
    return Rng(seq);
}

unsigned worker_count()
{
    unsigned requested = 0;
    if (const char* env = std::getenv("COLLAPSIM_THREADS")) {
        const char* end = env + std::strlen(env);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec == std::errc() && ptr == end)
            requested = value;
    }
    if (requested == 0)
        requested = std::max(1u, std::thread::hardware_concurrency());
    return requested;
}

} // namespace collapsim
