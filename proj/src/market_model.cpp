#include "arbcurv/market_model.hpp"

#include "arbcurv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace arbcurv {

namespace {

constexpr double NULL_MEMBER_TOL = 1e-10;

// Flip column signs so the first component exceeding a relative floor is
// positive. Eigenvector signs are otherwise arbitrary.
void apply_sign_rule(Eigen::MatrixXd& basis) {
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
        const double floor = 1e-12 * basis.col(c).cwiseAbs().maxCoeff();
        for (Eigen::Index r = 0; r < basis.rows(); ++r) {
            const double v = basis(r, c);
            if (std::fabs(v) > floor) {
                if (v < 0.0) basis.col(c) *= -1.0;
                break;
            }
        }
    }
}

// Orthonormal basis of the exact null space, computed from the eigenvectors
// of W = ones*ones^T + vol*vol^T. Null vectors of W are exactly the sum-zero
// vectors annihilating every vol column. Membership uses the stated
// tolerance on Omega itself plus the sum-zero check.
Eigen::MatrixXd exact_null_space(const MarketModel& model) {
    const int n = model.n_assets;
    const Eigen::MatrixXd omega = model.omega();
    Eigen::MatrixXd w = omega;
    w.array() += 1.0; // + ones*ones^T
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w);
    if (es.info() != Eigen::Success)
        throw_numerical("exact_null_space: eigendecomposition failed");

    const double omega_norm = omega.cwiseAbs().maxCoeff();
    const double omega_tol = NULL_MEMBER_TOL * std::max(omega_norm, 1e-300);
    const double sum_tol = NULL_MEMBER_TOL * std::sqrt(static_cast<double>(n));

    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
        const Eigen::VectorXd v = es.eigenvectors().col(i);
        const double omega_res = (omega * v).cwiseAbs().maxCoeff();
        const double sum_res = std::fabs(v.sum());
        if (omega_res <= omega_tol && sum_res <= sum_tol) keep.push_back(i);
    }
    Eigen::MatrixXd basis(n, static_cast<int>(keep.size()));
    for (size_t j = 0; j < keep.size(); ++j) basis.col(static_cast<int>(j)) = es.eigenvectors().col(keep[j]);
    return basis;
}

// Deterministic orthonormal basis of the null space with the first column
// aligned to `preferred` when that direction is present. Remaining columns
// come from projecting canonical axes and Gram-Schmidt, in axis order.
Eigen::MatrixXd adapted_null_basis(const Eigen::MatrixXd& space, const Eigen::VectorXd& preferred, int k) {
    const int n = static_cast<int>(space.rows());
    const int dim = static_cast<int>(space.cols());
    const Eigen::MatrixXd proj = space * space.transpose(); // projector onto the null space

    std::vector<Eigen::VectorXd> cols;
    const Eigen::VectorXd lead = proj * preferred;
    const double lead_scale = std::max(preferred.norm(), 1.0);
    if (lead.norm() > 1e-13 * lead_scale) cols.push_back(lead.normalized());

    // Complete greedily from projected canonical axes: per round take the
    // axis with the largest residual (ties resolved by axis order).
    while (static_cast<int>(cols.size()) < dim) {
        int best_axis = -1;
        double best_norm = 1e-12;
        Eigen::VectorXd best;
        for (int axis = 0; axis < n; ++axis) {
            Eigen::VectorXd v = proj.col(axis);
            for (const auto& c : cols) v -= c.dot(v) * c;
            const double nv = v.norm();
            if (nv > best_norm * (1.0 + 1e-9)) {
                best_norm = nv;
                best_axis = axis;
                best = v;
            }
        }
        if (best_axis < 0) break;
        cols.push_back(best.normalized());
    }
    if (static_cast<int>(cols.size()) < k)
        throw_internal("adapted_null_basis: could not complete basis");

    Eigen::MatrixXd basis(n, k);
    for (int j = 0; j < k; ++j) basis.col(j) = cols[static_cast<size_t>(j)];
    apply_sign_rule(basis);
    return basis;
}

} // namespace

void validate_model(const MarketModel& model) {
    if (model.n_assets <= 0)
        throw_config("model: n_assets must be positive");
    if (model.n_factors < 0)
        throw_config("model: n_factors must be non-negative");
    if (model.drift.size() != model.n_assets)
        throw_config("model: drift length " + std::to_string(model.drift.size()) +
                     " does not match n_assets " + std::to_string(model.n_assets));
    if (model.vol.rows() != model.n_assets || model.vol.cols() != model.n_factors)
        throw_config("model: vol must be n_assets x n_factors");
    if (model.init_prices.size() != model.n_assets)
        throw_config("model: init_prices length mismatch");
    if (!(model.init_prices.array() > 0.0).all())
        throw_config("model: init_prices must be strictly positive");
}

int PricePanel::index_of(const std::string& id) const {
    const auto it = std::find(asset_ids.begin(), asset_ids.end(), id);
    if (it == asset_ids.end())
        throw_data("panel: unknown asset id '" + id + "'");
    return static_cast<int>(it - asset_ids.begin());
}

int PricePanel::row_of(int64_t t) const {
    const auto it = std::lower_bound(times.begin(), times.end(), t);
    if (it == times.end() || *it != t)
        throw_data("panel: no row at time " + std::to_string(t));
    return static_cast<int>(it - times.begin());
}

void validate_panel(const PricePanel& panel) {
    const auto T = panel.prices.rows();
    const auto N = panel.prices.cols();
    if (N <= 0 || static_cast<Eigen::Index>(panel.asset_ids.size()) != N)
        throw_data("panel: asset_ids length does not match price columns");
    if (static_cast<Eigen::Index>(panel.times.size()) != T)
        throw_data("panel: times length does not match price rows");
    for (size_t i = 1; i < panel.times.size(); ++i)
        if (panel.times[i] <= panel.times[i - 1])
            throw_data("panel: times must be strictly increasing (row " + std::to_string(i) + ")");
    if (!(panel.prices.array() > 0.0).all())
        throw_data("panel: prices must be strictly positive everywhere");
}

int null_dimension(const MarketModel& model) {
    validate_model(model);
    return static_cast<int>(exact_null_space(model).cols());
}

DriftDecomposition decompose_drift(const MarketModel& model, int k) {
    validate_model(model);
    if (k < 0) throw_config("decompose_drift: k must be non-negative");

    const Eigen::MatrixXd space = exact_null_space(model);
    const int dim = static_cast<int>(space.cols());
    if (k > dim) {
        std::ostringstream msg;
        msg << "decompose_drift: requested null dimension " << k
            << " exceeds actual null dimension " << dim;
        throw_config(msg.str());
    }

    DriftDecomposition out;
    out.sigma_bar = model.vol.colwise().mean();
    out.sigma_hat = model.vol.rowwise() - out.sigma_bar.transpose();

    if (k > 0) {
        out.null_basis = adapted_null_basis(space, model.drift, k);
        out.arb_components = out.null_basis.transpose() * model.drift;
    } else {
        out.null_basis.resize(model.n_assets, 0);
        out.arb_components.resize(0);
    }

    // The null part is orthogonal to span{1, sigma_hat}; what remains splits
    // into the mean and a minimum-norm risk premium (centered columns are
    // orthogonal to the ones vector, so the mean separates exactly).
    const Eigen::VectorXd residual = model.drift - out.null_basis * out.arb_components;
    out.mean_drift = residual.mean();
    if (model.n_factors > 0) {
        const Eigen::VectorXd centered = residual.array() - out.mean_drift;
        out.beta = out.sigma_hat.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(centered);
    } else {
        out.beta.resize(0);
    }
    return out;
}

PricePanel change_numeraire(const PricePanel& panel, int numeraire_index) {
    if (numeraire_index < 0 || numeraire_index >= panel.n_assets())
        throw_data("change_numeraire: asset index " + std::to_string(numeraire_index) + " out of range");
    PricePanel out = panel;
    const Eigen::VectorXd num = panel.prices.col(numeraire_index);
    out.prices = panel.prices.array().colwise() / num.array();
    out.prices.col(numeraire_index).setOnes();
    return out;
}

PricePanel change_numeraire(const PricePanel& panel, const std::string& numeraire_id) {
    return change_numeraire(panel, panel.index_of(numeraire_id));
}

MarketModel change_numeraire_model(const MarketModel& model, int numeraire_index) {
    validate_model(model);
    if (numeraire_index < 0 || numeraire_index >= model.n_assets)
        throw_data("change_numeraire_model: asset index out of range");
    const Eigen::RowVectorXd vol_j = model.vol.row(numeraire_index);
    MarketModel out = model;
    out.vol = model.vol.rowwise() - vol_j;
    // Ito correction: new drift keeps log X_mu - log X_j an exact identity.
    for (int mu = 0; mu < model.n_assets; ++mu)
        out.drift(mu) = model.drift(mu) - model.drift(numeraire_index) +
                        vol_j.dot(vol_j - model.vol.row(mu));
    out.init_prices = model.init_prices / model.init_prices(numeraire_index);
    return out;
}

Eigen::MatrixXd log_returns(const PricePanel& panel) {
    const auto T = panel.prices.rows();
    if (T < 2)
        throw_data("log_returns: need at least 2 rows, have " + std::to_string(T));
    Eigen::MatrixXd out(T - 1, panel.prices.cols());
    for (Eigen::Index t = 0; t + 1 < T; ++t)
        out.row(t) = (panel.prices.row(t + 1).array() / panel.prices.row(t).array()).log();
    return out;
}

} // namespace arbcurv
