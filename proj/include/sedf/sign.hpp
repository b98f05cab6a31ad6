#pragma once

#include <cstdint>

namespace sedf {

enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign negate(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr Sign sign_of(int v) { return v > 0 ? Sign::plus : Sign::minus; }

}  // namespace sedf
