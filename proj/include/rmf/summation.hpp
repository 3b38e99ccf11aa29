#ifndef RMF_SUMMATION_HPP
#define RMF_SUMMATION_HPP

#include <cmath>
#include <limits>

namespace rmf {

// Neumaier-compensated accumulator with a running bound on the rounding
// error of the reported value.
//
// Each add() performs an exact error-free transformation (TwoSum), so the
// only roundings that escape are the ones inside `comp += err` and the final
// collapse `sum + comp`.  Both are tracked: err_accum_ absorbs the former,
// value-time eps*|value| the latter.  The bound is conservative but stays
// O(eps * |sum|) in practice, which is what sign decisions near zero need.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
        err_accum_ += kEps * std::abs(comp_);
    }

    // Collapsed value, rounded once to double.
    double value() const { return sum_ + comp_; }

    // Bound on |value() - exact sum of the inputs|.
    double error_bound() const {
        return err_accum_ + kEps * std::abs(value());
    }

    void reset() { sum_ = comp_ = err_accum_ = 0.0; }

private:
    static constexpr double kEps = std::numeric_limits<double>::epsilon();
    double sum_ = 0.0;
    double comp_ = 0.0;
    double err_accum_ = 0.0;
};

}  // namespace rmf

#endif
