#pragma once

#include <cmath>

namespace pseudogas {

/// Neumaier compensated accumulator. Merging two partial sums keeps both
/// compensation terms, so reduction order does not leak into the result
/// beyond the last bit.
class CompensatedSum {
public:
    constexpr CompensatedSum() = default;

    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    CompensatedSum& operator+=(double x) noexcept {
        add(x);
        return *this;
    }

    CompensatedSum& operator+=(const CompensatedSum& other) noexcept {
        add(other.sum_);
        add(other.comp_);
        return *this;
    }

    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace pseudogas
