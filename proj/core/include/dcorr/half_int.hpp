#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace dcorr {

/// A number in ½ℤ, stored as twice its value.
struct HalfInt {
  int x2 = 0;

  static constexpr HalfInt from_x2(int doubled) { return HalfInt{doubled}; }
  static constexpr HalfInt integer(int value) { return HalfInt{2 * value}; }

  /// Accepts "3", "-1", "9/2", "-1/2". Anything outside ½ℤ is a UsageError.
  static HalfInt parse(std::string_view text);

  constexpr bool is_integer() const { return x2 % 2 == 0; }

  /// "3", "-1/2", "9/2".
  std::string str() const;

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.x2 + b.x2}; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.x2 - b.x2}; }
};

}  // namespace dcorr
