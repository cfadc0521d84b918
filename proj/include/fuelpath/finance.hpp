#pragma once

#include "fuelpath/errors.hpp"

namespace fuelpath {

/// Capital-recovery and policy-duration arithmetic.
struct FinancialParams {
    double wacc = 0.1;
    int book_life_years = 15;
    double crf = 0.131; // dataset-pinned; reproduces published roundings

    void check() const {
        if (wacc <= 0.0 || wacc >= 1.0)
            raise(errc::invariant_violation, "wacc must be in (0,1)");
        if (book_life_years < 1)
            raise(errc::invalid_years, "book life must be >= 1 year");
    }
};

namespace finance {

/// Closed-form capital recovery factor r(1+r)^n / ((1+r)^n - 1); 1/n at r=0.
double crf(double wacc, int years);

/// Present value of a 1/yr annuity over m years at rate r (sum form).
double annuity(double rate, int years);

/// Policy derating factor: m-year over n-year annuity at the given rate.
/// Requires 1 <= m <= n; m > n is an error, never clamped.
double derating_factor(double wacc, int policy_years, int book_life);

/// Derating factor where a zero-duration policy simply contributes nothing.
inline double derating_factor_or_zero(double wacc, int policy_years, int book_life) {
    return policy_years == 0 ? 0.0 : derating_factor(wacc, policy_years, book_life);
}

} // namespace finance
} // namespace fuelpath
