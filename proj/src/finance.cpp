#include "fuelpath/finance.hpp"

#include <cmath>
#include <string>

namespace fuelpath::finance {

double crf(double wacc, int years) {
    if (years < 1)
        raise(errc::invalid_years, "crf: years must be >= 1, got " + std::to_string(years));
    if (wacc < 0.0)
        raise(errc::invariant_violation, "crf: wacc must be >= 0");
    if (wacc == 0.0) return 1.0 / years;
    const double growth = std::pow(1.0 + wacc, years);
    return wacc * growth / (growth - 1.0);
}

double annuity(double rate, int years) {
    double sum = 0.0;
    for (int t = 1; t <= years; ++t)
        sum += std::pow(1.0 + rate, -t);
    return sum;
}

double derating_factor(double wacc, int policy_years, int book_life) {
    if (policy_years < 1 || book_life < 1)
        raise(errc::invalid_years, "derating_factor: durations must be >= 1");
    if (policy_years > book_life)
        raise(errc::policy_exceeds_life,
              "derating_factor: policy duration " + std::to_string(policy_years) +
                  " exceeds book life " + std::to_string(book_life));
    return annuity(wacc, policy_years) / annuity(wacc, book_life);
}

} // namespace fuelpath::finance
