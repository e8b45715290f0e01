#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace arbcurv {

/// Constant-coefficient Ito market: dX_mu = X_mu (alpha_mu dt + sum_a sigma^a_mu dB_a).
///
/// Time is integer stepped with step size 1; drifts are per step and
/// volatility loadings per sqrt step. Row 0 conventionally holds the unit of
/// account (all-zero vol row, often zero drift) but is not required to.
struct MarketModel {
    int n_assets = 0;                 // N
    int n_factors = 0;                // d
    Eigen::VectorXd drift;            // length N
    Eigen::MatrixXd vol;              // N x d
    Eigen::VectorXd init_prices;      // length N, strictly positive

    Eigen::MatrixXd omega() const { return vol * vol.transpose(); }
};

// Throws a config error when fields are inconsistent or prices are not positive.
void validate_model(const MarketModel& model);

/// Split of the drift vector into a common (inflation) part, a risk-premium
/// part spanned by the centered vol columns, and a residual part lying in the
/// market null space (orthogonal to the all-ones vector and every vol column).
///
///   drift_mu = mean_drift + sum_a beta[a] * sigma_hat(mu,a)
///              + sum_A arb_components[A] * null_basis(mu,A)
///
/// null_basis columns are orthonormal, sum to zero and annihilate every vol
/// column. The residual part is what a riskless self-financing portfolio can
/// harvest; its squared norm sum_A arb_components[A]^2 is invariant under
/// both numeraire changes and rotations of the basis.
struct DriftDecomposition {
    double mean_drift = 0.0;          // alpha
    Eigen::VectorXd beta;             // length d, minimum-norm
    Eigen::VectorXd arb_components;   // length k
    Eigen::MatrixXd null_basis;       // N x k
    Eigen::MatrixXd sigma_hat;        // N x d, columns centered
    Eigen::VectorXd sigma_bar;        // length d, cross-sectional vol means

    // sum_A arb_components[A]^2
    double curvature() const { return arb_components.squaredNorm(); }
};

/// Aligned positive price series on integer time steps.
struct PricePanel {
    std::vector<std::string> asset_ids;   // length N
    std::vector<int64_t> times;           // length T, strictly increasing
    Eigen::MatrixXd prices;               // T x N, strictly positive

    int n_assets() const { return static_cast<int>(prices.cols()); }
    int n_times() const { return static_cast<int>(prices.rows()); }

    // Index of an asset id; throws a data error for unknown ids.
    int index_of(const std::string& id) const;
    // Row index of a time value; throws a data error when absent.
    int row_of(int64_t t) const;
};

// Throws a data error when invariants are broken (shape mismatch,
// non-positive prices, non-increasing times).
void validate_panel(const PricePanel& panel);

/// Decompose the model drift. k is the requested null dimension and must not
/// exceed the exact null dimension of vol*vol^T intersected with the sum-zero
/// hyperplane; otherwise a config error naming both values is thrown.
///
/// The basis is chosen deterministically: the first column points along the
/// projection of the drift onto the null space (when nonzero), so the
/// reconstruction identity holds exactly for every admissible k. Columns obey
/// the sign rule "first nonzero component positive".
DriftDecomposition decompose_drift(const MarketModel& model, int k);

// Dimension of the exact null space (sum-zero vectors annihilating all vol
// columns). Membership tolerance: |Omega v|_inf <= 1e-10 |Omega|_inf.
int null_dimension(const MarketModel& model);

/// Divide every column by the numeraire column. The numeraire's own column
/// becomes identically 1. Exact per cell (one division), invertible by
/// multiplying back.
PricePanel change_numeraire(const PricePanel& panel, int numeraire_index);
PricePanel change_numeraire(const PricePanel& panel, const std::string& numeraire_id);

/// The model seen from asset j as unit of account:
///   vol'_mu = vol_mu - vol_j,  drift'_mu = drift_mu - drift_j + sum_a vol_j(vol_j - vol_mu),
///   init' = init / init_j.
/// Simulating this model with the same shocks reproduces the per-column
/// division of the simulated panel.
MarketModel change_numeraire_model(const MarketModel& model, int numeraire_index);

/// Entry (t, mu) = log(X_mu(t+1) / X_mu(t)). Requires T >= 2.
Eigen::MatrixXd log_returns(const PricePanel& panel);

} // namespace arbcurv
