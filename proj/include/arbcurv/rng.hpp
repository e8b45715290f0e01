#pragma once

#include <cstdint>

namespace arbcurv::rng {

// Counter-based deterministic random numbers.
//
// Every draw is a pure function of (seed, stream, counter), so any draw can
// be produced independently of any other, in any order, on any platform.
// Streams isolate logical sources (one per Brownian factor, per asset noise
// column, per Monte Carlo batch); counters index the draw within a stream.
// Adding streams never perturbs draws of existing streams.
//
// Construction of one 64-bit word:
//   key   = mix(seed ^ 0x6A09E667F3BCC909 + stream * 0x9E3779B97F4A7C15)
//   word  = mix(key + (counter + 1) * 0x9E3779B97F4A7C15)
// where mix is the SplitMix64 finalizer:
//   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27; z *= 0x94D049BB133111EB;
//   z ^= z >> 31;
//
// uniform01 maps the word to the open interval (0,1) with 53-bit resolution:
//   u = (word >> 11) * 2^-53 + 2^-54
// normal applies the AS241 rational approximation of the inverse standard
// normal CDF (absolute error below 1e-15) to uniform01.

uint64_t word(uint64_t seed, uint64_t stream, uint64_t counter);

double uniform01(uint64_t seed, uint64_t stream, uint64_t counter);

double normal(uint64_t seed, uint64_t stream, uint64_t counter);

// Inverse standard normal CDF (AS241 PPND16). Requires 0 < p < 1.
double inverse_normal_cdf(double p);

// Stream-id helpers. Tags keep draw sources disjoint by construction.
inline constexpr uint64_t TAG_FACTOR = 1; // simulator Brownian increments, one stream per factor
inline constexpr uint64_t TAG_NOISE  = 2; // observation noise, one stream per asset
inline constexpr uint64_t TAG_MC     = 3; // pricer Monte Carlo, one stream per factor
inline constexpr uint64_t TAG_MODEL  = 4; // random market construction

inline constexpr uint64_t stream_id(uint64_t tag, uint64_t index) {
    return (tag << 48) ^ index;
}

} // namespace arbcurv::rng
