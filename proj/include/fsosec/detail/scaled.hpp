// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>

namespace fsosec::detail {

// Compensated (Neumaier) summation.
class kahan_sum {
public:
    void add(double x) noexcept {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Signed log-magnitude representation: x = sign * exp(log).  sign == 0 encodes zero.
struct log_value {
    double log = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static log_value from(double x) {
        if (x == 0.0) return {};
        return {std::log(std::abs(x)), x > 0.0 ? 1 : -1};
    }
    static log_value from_log(double lg, int sg = 1) { return {lg, sg}; }

    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log);
    }
    log_value operator*(const log_value& o) const {
        if (sign == 0 || o.sign == 0) return {};
        return {log + o.log, sign * o.sign};
    }
    log_value operator/(const log_value& o) const {
        return {log - o.log, sign * o.sign};
    }
};

// Accumulates a sum of signed log-magnitude terms without leaving log scale.
// Largest-magnitude term seen so far is the running reference.
class scaled_accumulator {
public:
    void add(double lg, int sign) {
        if (sign == 0 || lg == -std::numeric_limits<double>::infinity()) return;
        if (ref_ == -std::numeric_limits<double>::infinity()) {
            ref_ = lg;
            acc_ = static_cast<double>(sign);
            max_abs_ = 1.0;
            return;
        }
        if (lg > ref_) {
            const double shrink = std::exp(ref_ - lg);
            acc_ *= shrink;
            max_abs_ *= shrink;
            ref_ = lg;
            acc_ += sign;
            if (std::abs(acc_) > max_abs_) max_abs_ = std::abs(acc_);
        } else {
            acc_ += sign * std::exp(lg - ref_);
            if (std::abs(acc_) > max_abs_) max_abs_ = std::abs(acc_);
        }
    }
    void add(const log_value& v) { add(v.log, v.sign); }

    log_value result() const {
        if (acc_ == 0.0 || ref_ == -std::numeric_limits<double>::infinity()) return {};
        return {ref_ + std::log(std::abs(acc_)), acc_ > 0.0 ? 1 : -1};
    }

    // log10 of (largest intermediate magnitude / |result|); a cancellation gauge.
    double digits_cancelled() const {
        if (acc_ == 0.0) return std::numeric_limits<double>::infinity();
        return std::log10(max_abs_ / std::abs(acc_));
    }

private:
    double ref_ = -std::numeric_limits<double>::infinity();
    double acc_ = 0.0;
    double max_abs_ = 0.0;
};

} // namespace fsosec::detail
