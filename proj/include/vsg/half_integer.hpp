#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace vsg {

// Exact multiple of 1/2, stored as twice the value. Printing never uses decimals.
class HalfInt {
public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_halves(std::int64_t twice) {
    HalfInt x;
    x.twice_ = twice;
    return x;
  }
  static constexpr HalfInt whole(std::int64_t n) { return from_halves(2 * n); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // Precondition: is_integer().
  constexpr std::int64_t integer_value() const { return twice_ / 2; }
  constexpr bool is_odd_integer() const {
    return is_integer() && integer_value() % 2 != 0;
  }
  constexpr bool is_zero() const { return twice_ == 0; }

  constexpr HalfInt operator+(HalfInt o) const { return from_halves(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_halves(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return from_halves(-twice_); }
  constexpr HalfInt abs() const { return twice_ < 0 ? -*this : *this; }

  constexpr bool operator==(const HalfInt&) const = default;
  constexpr bool operator<(HalfInt o) const { return twice_ < o.twice_; }
  constexpr bool operator<=(HalfInt o) const { return twice_ <= o.twice_; }
  constexpr bool operator>(HalfInt o) const { return twice_ > o.twice_; }
  constexpr bool operator>=(HalfInt o) const { return twice_ >= o.twice_; }

  // "k" for integers, "k/2" otherwise, e.g. "-3/2".
  std::string str() const {
    if (is_integer()) return std::to_string(integer_value());
    return std::to_string(twice_) + "/2";
  }

private:
  std::int64_t twice_ = 0;
};

}  // namespace vsg
