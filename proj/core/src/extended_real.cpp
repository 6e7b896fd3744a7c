#include "dqpt/extended_real.hpp"

#include "dqpt/errors.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace dqpt {

ExtendedReal ExtendedReal::finite(double value) {
    if (!std::isfinite(value)) {
        throw DomainError("ExtendedReal::finite: value is not finite");
    }
    ExtendedReal r;
    r.value_ = value;
    return r;
}

double ExtendedReal::value() const {
    if (unbounded_) {
        throw DomainError("ExtendedReal::value: quantity is unbounded");
    }
    return value_;
}

double ExtendedReal::as_double() const noexcept {
    if (unbounded_) {
        return sign_ * std::numeric_limits<double>::infinity();
    }
    return value_;
}

int ExtendedReal::sign() const noexcept {
    if (unbounded_) return sign_;
    return (value_ > 0.0) - (value_ < 0.0);
}

std::string to_string(const ExtendedReal& x) {
    if (x.is_unbounded()) {
        return x.sign() < 0 ? "-inf" : "inf";
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x.value());
    return std::string(buf, end);
}

} // namespace dqpt
