#include "ego/cohesion_value.hpp"

#include <algorithm>
#include <stdexcept>

namespace ego {

namespace {

uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Wide {
  uint128 hi;
  uint128 lo;
};

// Full 256-bit product of two 128-bit operands.
Wide mulWide(uint128 a, uint128 b) {
  constexpr uint128 mask = (uint128{1} << 64) - 1;
  const uint128 a0 = a & mask, a1 = a >> 64;
  const uint128 b0 = b & mask, b1 = b >> 64;

  const uint128 p00 = a0 * b0;
  const uint128 p01 = a0 * b1;
  const uint128 p10 = a1 * b0;
  const uint128 p11 = a1 * b1;

  const uint128 mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
  Wide r;
  r.lo = (p00 & mask) | (mid << 64);
  r.hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return r;
}

}  // namespace

CohesionValue CohesionValue::fromRatio(uint128 num, uint128 den) {
  if (den == 0) throw std::invalid_argument("cohesion denominator is zero");
  CohesionValue v;
  if (num == 0) return v;
  const uint128 g = gcd128(num, den);
  v.num_ = num / g;
  v.den_ = den / g;
  return v;
}

CohesionValue CohesionValue::fromCounts(std::uint64_t triIn, std::uint64_t triOut,
                                        std::uint64_t size) {
  if (size < 3 || triIn == 0) return {};
  const uint128 in = triIn;
  return fromRatio(in * in, choose3(size) * (in + triOut));
}

std::strong_ordering operator<=>(const CohesionValue& a, const CohesionValue& b) {
  const Wide lhs = mulWide(a.num_, b.den_);
  const Wide rhs = mulWide(b.num_, a.den_);
  if (lhs.hi != rhs.hi) return lhs.hi < rhs.hi ? std::strong_ordering::less : std::strong_ordering::greater;
  if (lhs.lo != rhs.lo) return lhs.lo < rhs.lo ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string CohesionValue::toString() const {
  return toDecimalString(num_) + "/" + toDecimalString(den_);
}

uint128 choose3(std::uint64_t n) {
  if (n < 3) return 0;
  const uint128 m = n;
  return m * (m - 1) * (m - 2) / 6;
}

std::string toDecimalString(uint128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace ego
