#pragma once

#include "arbcurv/market_model.hpp"

#include <cstdint>

namespace arbcurv {

struct SimConfig {
    MarketModel model;
    int n_steps = 0;                  // number of rows T, >= 2
    uint64_t seed = 0;
    double microstructure_var = 0.0;  // eta^2 in log-price units squared, 0 disables
};

struct SimResult {
    PricePanel clean;
    PricePanel observed;       // equals clean when microstructure_var == 0
    Eigen::MatrixXd shocks;    // T x d; row t holds B(t) - B(t-1), row 0 is zero
};

/// Exact log-normal paths:
///   X_mu(t) = X_mu(0) exp[(drift_mu - 1/2 sum_a vol(mu,a)^2) t + sum_a vol(mu,a) B_a(t)]
/// with B_a cumulative sums of unit normal increments. No discretization
/// bias: the closed form is evaluated directly at every step.
///
/// Draws: increment B_a(t) - B_a(t-1) = rng::normal(seed, stream_id(TAG_FACTOR, a), t).
/// Identical (config, seed) gives bit-identical output.
SimResult simulate(const SimConfig& config);

/// Additive log-price observation noise: log X~_i(t) = log X_i(t) + eta_i(t),
/// eta iid N(0, eta_sq) over assets i >= 1 and all times. Asset 0 is the unit
/// of account (X_0 = 1) and is never contaminated.
/// Draws: eta_i(t) = sqrt(eta_sq) * rng::normal(seed, stream_id(TAG_NOISE, i), t).
SimResult contaminate(const SimResult& result, double eta_sq, uint64_t seed);

/// Randomized market with an exact embedded curvature, in the style of the
/// simulated validation runs: asset 0 is a zero-rate account (X_0 = 1,
/// zero vol row, zero drift), vol entries and risk premia are uniform draws,
/// and the null-space drift components are drawn uniformly in
/// [-arb_scale, arb_scale] over a seeded random orthonormal null basis.
struct RandomMarketConfig {
    int n_assets = 21;
    int n_factors = 18;
    int null_dim = 2;
    uint64_t seed = 0;
    double beta_scale = 1e-4;
    double vol_scale = 1e-3;
    double arb_scale = 1e-4;
};

struct RandomMarket {
    MarketModel model;
    Eigen::MatrixXd true_null_basis;  // N x k, orthonormal, sum-zero
    Eigen::VectorXd true_arb;         // k
    Eigen::VectorXd true_beta;        // d
    double curvature = 0.0;           // sum_A true_arb[A]^2
};

RandomMarket make_random_market(const RandomMarketConfig& config);

// Full orthonormal basis of the exact null space of the model
// (sum-zero vectors annihilating every vol column).
Eigen::MatrixXd null_space_basis(const MarketModel& model);

} // namespace arbcurv
