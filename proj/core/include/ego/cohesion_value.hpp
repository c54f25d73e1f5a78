#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ego {

using uint128 = unsigned __int128;

/// Exact non-negative rational used for cohesion scores.
///
/// Always stored in lowest terms with a positive denominator. Ordering is
/// exact: operands are cross-multiplied into 256-bit products, never
/// converted to floating point.
class CohesionValue {
 public:
  constexpr CohesionValue() = default;

  /// Throws std::invalid_argument when den == 0.
  static CohesionValue fromRatio(uint128 num, uint128 den);

  /// tri_in^2 / (C(size, 3) * (tri_in + tri_out)); zero when size < 3 or tri_in == 0.
  static CohesionValue fromCounts(std::uint64_t triIn, std::uint64_t triOut, std::uint64_t size);

  uint128 numerator() const noexcept { return num_; }
  uint128 denominator() const noexcept { return den_; }
  double real() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool isZero() const noexcept { return num_ == 0; }

  /// "num/den" in decimal.
  std::string toString() const;

  friend bool operator==(const CohesionValue&, const CohesionValue&) = default;
  friend std::strong_ordering operator<=>(const CohesionValue& a, const CohesionValue& b);

 private:
  uint128 num_ = 0;
  uint128 den_ = 1;
};

/// C(n, 3) in 128 bits.
uint128 choose3(std::uint64_t n);

std::string toDecimalString(uint128 value);

}  // namespace ego
