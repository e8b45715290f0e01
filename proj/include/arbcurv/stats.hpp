#pragma once

#include <Eigen/Dense>

namespace arbcurv::stats {

double mean(const Eigen::VectorXd& x);

// Sample standard deviation (n-1 denominator); 0 for n < 2.
double sample_std(const Eigen::VectorXd& x);

// Standard error of the mean: sample_std / sqrt(n).
double standard_error(const Eigen::VectorXd& x);

// Moment skewness m3 / m2^(3/2) with population moments; 0 when m2 == 0.
double skewness(const Eigen::VectorXd& x);

// mean/std; +inf or -inf (sign of the mean, + for zero mean) when std == 0.
double mean_std_ratio(const Eigen::VectorXd& x);

} // namespace arbcurv::stats
