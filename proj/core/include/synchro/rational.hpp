#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace synchro {

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;
    /// Accepts "p/q" or "p".
    static Rational parse(std::string_view text);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace synchro
