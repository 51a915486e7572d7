#pragma once

#include <boost/random/normal_distribution.hpp>

#include <cstdint>
#include <random>

namespace collapsim {

using Rng = std::mt19937_64;

// Generator for one trial, derived deterministically from the master seed
// and the trial index so results do not depend on which worker ran it.
Rng trial_stream(std::uint64_t master_seed, std::uint64_t trial_index);

// Standard normal draws. Boost's ziggurat gives the same sequence on every
// platform for a given engine state, unlike std::normal_distribution.
class NormalSource {
public:
    explicit NormalSource(Rng& rng) : rng_(&rng) {}
    double operator()() { return dist_(*rng_); }
    Rng& engine() { return *rng_; }

private:
    Rng* rng_;
    boost::random::normal_distribution<double> dist_;
};

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace collapsim
