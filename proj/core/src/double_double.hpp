#pragma once

#include <cmath>

namespace dqpt::detail {

// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2.
struct DD {
    double hi;
    double lo;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD mul(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD sqrt(DD a) {
    if (a.hi <= 0.0) return {0.0, 0.0};
    const double x = std::sqrt(a.hi);
    // one Newton step: x + (a - x^2) / (2x)
    const DD x2 = two_prod(x, x);
    const double r = ((a.hi - x2.hi) - x2.lo + a.lo) / (2.0 * x);
    return quick_two_sum(x, r);
}

} // namespace dqpt::detail
