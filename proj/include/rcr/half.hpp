#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rcr {

// Exact half-integer arithmetic: value = num/2.  Riggings, vacancy numbers,
// weights and cocharge are all half-integral at worst (type A_{2n}^(2)dagger),
// so a scaled int64 avoids a full rational type.
struct Half {
    std::int64_t num = 0;  // twice the value

    static constexpr Half of_int(std::int64_t k) { return Half{2 * k}; }
    static constexpr Half of_halves(std::int64_t h) { return Half{h}; }

    constexpr bool is_integer() const { return num % 2 == 0; }
    constexpr std::int64_t to_int() const {
        return num / 2;  // caller checks is_integer()
    }
    constexpr double to_double() const { return static_cast<double>(num) / 2.0; }

    friend constexpr Half operator+(Half a, Half b) { return Half{a.num + b.num}; }
    friend constexpr Half operator-(Half a, Half b) { return Half{a.num - b.num}; }
    friend constexpr Half operator-(Half a) { return Half{-a.num}; }
    friend constexpr Half operator*(std::int64_t k, Half a) { return Half{k * a.num}; }
    friend constexpr Half operator*(Half a, std::int64_t k) { return Half{k * a.num}; }
    Half& operator+=(Half b) { num += b.num; return *this; }
    Half& operator-=(Half b) { num -= b.num; return *this; }
    friend constexpr auto operator<=>(Half a, Half b) = default;

    // division by 1 or 2 (scaling factors); must stay exactly representable
    Half div(std::int64_t k) const {
        if (num % k != 0) throw std::domain_error("Half::div: not divisible");
        return Half{num / k};
    }

    std::string str() const {
        if (is_integer()) return std::to_string(num / 2);
        return std::to_string(num) + "/2";
    }
};

inline constexpr Half half_zero{};
inline constexpr Half half_one{2};
inline constexpr Half one_half{1};

}  // namespace rcr
