#pragma once

#include <compare>
#include <string>

namespace dqpt {

// A real number or a signed symbolic infinity.
//
// Matched postquench fields diverge when the prequench field cancels a grid
// cosine exactly; those cases are carried symbolically instead of as IEEE
// infinities so callers must decide explicitly how to treat them.
class ExtendedReal {
public:
    constexpr ExtendedReal() = default;

    static ExtendedReal finite(double value);
    static constexpr ExtendedReal unbounded(int sign) {
        ExtendedReal r;
        r.unbounded_ = true;
        r.sign_ = sign < 0 ? -1 : 1;
        return r;
    }

    [[nodiscard]] constexpr bool is_finite() const noexcept { return !unbounded_; }
    [[nodiscard]] constexpr bool is_unbounded() const noexcept { return unbounded_; }

    // Throws DomainError when unbounded.
    [[nodiscard]] double value() const;

    // Finite value, or +/-infinity.
    [[nodiscard]] double as_double() const noexcept;

    // -1, 0 or +1.
    [[nodiscard]] int sign() const noexcept;

    friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

private:
    double value_{0.0};
    bool unbounded_{false};
    int sign_{1};
};

// Shortest round-trip decimal; "inf"/"-inf" for unbounded values.
std::string to_string(const ExtendedReal& x);

} // namespace dqpt
