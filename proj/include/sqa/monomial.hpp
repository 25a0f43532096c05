#pragma once

#include <array>
#include <string>

namespace sqa {

// Exponents of x1, x2, y1, y2.
using Monomial4 = std::array<int, 4>;

inline Monomial4 operator+(const Monomial4& a, const Monomial4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Monomial4 operator-(const Monomial4& a, const Monomial4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Monomial4 scaled(const Monomial4& a, int k) {
  return {k * a[0], k * a[1], k * a[2], k * a[3]};
}
inline bool nonnegative(const Monomial4& a) {
  return a[0] >= 0 && a[1] >= 0 && a[2] >= 0 && a[3] >= 0;
}
// a divides b in k[x1,x2,y1,y2].
inline bool divides(const Monomial4& a, const Monomial4& b) { return nonnegative(b - a); }
inline int degree(const Monomial4& a) { return a[0] + a[1] + a[2] + a[3]; }
inline bool is_unit(const Monomial4& a) { return a == Monomial4{0, 0, 0, 0}; }

// Degree first, then exponent vector.
inline bool graded_less(const Monomial4& a, const Monomial4& b) {
  int da = degree(a), db = degree(b);
  return da != db ? da < db : a < b;
}

constexpr Monomial4 kSigma{1, 1, 1, 1};

// "x1^2y1", or "1" for the unit monomial.
std::string monomial_string(const Monomial4& a);

}  // namespace sqa
