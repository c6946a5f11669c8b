#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace moddom {

/// Natural number extended with a distinguished infinity. Infinity is a tag,
/// not a sentinel integer; comparisons are total and infinity is greater than
/// every finite value.
class ExtendedNat {
public:
    constexpr ExtendedNat() = default;
    constexpr ExtendedNat(std::uint64_t v) : finite_(true), v_(v) {}

    static constexpr ExtendedNat infinity() {
        ExtendedNat e;
        e.finite_ = false;
        return e;
    }

    constexpr bool is_finite() const { return finite_; }
    constexpr bool is_infinite() const { return !finite_; }

    constexpr std::uint64_t value() const {
        if (!finite_) throw std::logic_error("ExtendedNat: value() on infinity");
        return v_;
    }

    friend constexpr bool operator==(const ExtendedNat& a, const ExtendedNat& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
        if (a.finite_ && b.finite_) return a.v_ <=> b.v_;
        if (a.finite_) return std::strong_ordering::less;
        if (b.finite_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const { return finite_ ? std::to_string(v_) : "inf"; }

private:
    bool finite_ = true;
    std::uint64_t v_ = 0;
};

}  // namespace moddom
