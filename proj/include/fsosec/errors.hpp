// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace fsosec {

// Evaluation at a pole of the function's domain (e.g. Gamma at a non-positive integer).
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An iterative evaluation (series, quadrature refinement, ...) failed to reach its
// tolerance.  Carries the best value reached so callers can inspect partial results.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& msg,
                               double partial = std::numeric_limits<double>::quiet_NaN(),
                               double achieved_tol = std::numeric_limits<double>::quiet_NaN())
        : std::runtime_error(msg), partial_(partial), achieved_tol_(achieved_tol) {}

    double partial() const noexcept { return partial_; }
    double achieved_tolerance() const noexcept { return achieved_tol_; }

private:
    double partial_;
    double achieved_tol_;
};

// Numerical failure that is not a plain convergence issue: overflow, catastrophic
// cancellation, or an evaluation regime the implementation does not support.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fsosec
