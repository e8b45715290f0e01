#include "arbcurv/stats.hpp"

#include <cmath>
#include <limits>

namespace arbcurv::stats {

double mean(const Eigen::VectorXd& x) {
    return x.size() == 0 ? 0.0 : x.mean();
}

double sample_std(const Eigen::VectorXd& x) {
    const auto n = x.size();
    if (n < 2) return 0.0;
    const double m = x.mean();
    const double ss = (x.array() - m).square().sum();
    return std::sqrt(ss / static_cast<double>(n - 1));
}

double standard_error(const Eigen::VectorXd& x) {
    const auto n = x.size();
    if (n == 0) return 0.0;
    return sample_std(x) / std::sqrt(static_cast<double>(n));
}

double skewness(const Eigen::VectorXd& x) {
    const auto n = x.size();
    if (n == 0) return 0.0;
    const double m = x.mean();
    const Eigen::ArrayXd d = x.array() - m;
    const double m2 = d.square().mean();
    if (m2 == 0.0) return 0.0;
    const double m3 = d.cube().mean();
    return m3 / std::pow(m2, 1.5);
}

double mean_std_ratio(const Eigen::VectorXd& x) {
    const double s = sample_std(x);
    const double m = mean(x);
    if (s == 0.0) {
        const double inf = std::numeric_limits<double>::infinity();
        return m < 0.0 ? -inf : inf;
    }
    return m / s;
}

} // namespace arbcurv::stats
