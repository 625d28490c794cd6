#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "bs/errors.hpp"

namespace bs {

/// An integer extended by the sentinels +inf and -inf.
///
/// Degree sequences use +inf for the missing tail, root sequences use -inf.
/// Comparisons treat the sentinels as genuine extremes (inf == inf holds,
/// which is what the partial orders on sequences need; strict increase of
/// two inf entries is handled by the sequence validators, not here).
class ExtInt {
  public:
    constexpr ExtInt() : kind_(0), value_(0) {}
    constexpr ExtInt(long long v) : kind_(0), value_(v) {}

    static constexpr ExtInt pos_inf() { return ExtInt(+1, 0); }
    static constexpr ExtInt neg_inf() { return ExtInt(-1, 0); }

    constexpr bool finite() const { return kind_ == 0; }
    constexpr bool is_pos_inf() const { return kind_ > 0; }
    constexpr bool is_neg_inf() const { return kind_ < 0; }

    /// Finite value; throws on a sentinel.
    long long value() const {
        if (!finite()) throw error(errc::bad_input, "value() on an infinite entry");
        return value_;
    }

    friend constexpr bool operator==(ExtInt a, ExtInt b) {
        return a.kind_ == b.kind_ && (a.kind_ != 0 || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
        if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
        if (a.kind_ != 0) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

    /// Shift a finite entry; sentinels absorb shifts.
    constexpr ExtInt operator+(long long t) const {
        return finite() ? ExtInt(value_ + t) : *this;
    }
    constexpr ExtInt operator-(long long t) const { return *this + (-t); }

    std::string str() const {
        if (is_pos_inf()) return "inf";
        if (is_neg_inf()) return "-inf";
        return std::to_string(value_);
    }

    static ExtInt parse(const std::string& s) {
        if (s == "inf" || s == "+inf") return pos_inf();
        if (s == "-inf") return neg_inf();
        try {
            std::size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return ExtInt(v);
        } catch (const std::exception&) {
            throw error(errc::bad_input, "cannot parse integer entry: '" + s + "'");
        }
    }

  private:
    constexpr ExtInt(int kind, long long v) : kind_(kind), value_(v) {}

    int kind_;  // -1, 0, +1
    long long value_;
};

}  // namespace bs
