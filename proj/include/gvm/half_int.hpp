/*
Copyright 2026 The gvmhom Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace gvm {

/// Exact element of (1/2)Z, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int value) : twice_(2 * static_cast<std::int64_t>(value)) {}

    static constexpr HalfInt from_twice(std::int64_t twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    /// numerator / 2
    static constexpr HalfInt halves(std::int64_t numerator) { return from_twice(numerator); }

    constexpr std::int64_t twice() const noexcept { return twice_; }

    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
    constexpr bool is_positive_integer() const noexcept { return is_integer() && twice_ > 0; }
    constexpr bool is_zero() const noexcept { return twice_ == 0; }

    /// Exact integer value; only meaningful when is_integer().
    constexpr std::int64_t as_integer() const noexcept { return twice_ / 2; }
    constexpr double as_double() const noexcept { return static_cast<double>(twice_) / 2.0; }

    constexpr HalfInt abs() const noexcept { return from_twice(twice_ < 0 ? -twice_ : twice_); }

    constexpr HalfInt operator-() const noexcept { return from_twice(-twice_); }
    constexpr HalfInt& operator+=(HalfInt o) noexcept {
        twice_ += o.twice_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) noexcept {
        twice_ -= o.twice_;
        return *this;
    }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) noexcept { return a += b; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) noexcept { return a -= b; }
    friend constexpr HalfInt operator*(std::int64_t c, HalfInt a) noexcept {
        return from_twice(c * a.twice_);
    }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    /// "p/2" for odd numerators, plain integer otherwise.
    std::string to_string() const {
        if (is_integer()) {
            return std::to_string(twice_ / 2);
        }
        return std::to_string(twice_) + "/2";
    }

private:
    std::int64_t twice_ = 0;
};

}  // namespace gvm

template <>
struct std::hash<gvm::HalfInt> {
    std::size_t operator()(gvm::HalfInt h) const noexcept { return std::hash<std::int64_t>{}(h.twice()); }
};
