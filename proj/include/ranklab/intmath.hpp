#ifndef RANKLAB_INTMATH_HPP
#define RANKLAB_INTMATH_HPP

namespace ranklab {

// Exact division helpers. C++ '/' truncates toward zero, which is the wrong
// rounding for the residual arithmetic in identities.cpp whenever the
// numerator is negative; these round the way the math is stated.

// floor(x / y) for y > 0.
constexpr long long floor_div(long long x, long long y) {
    long long q = x / y;
    if (x % y != 0 && x < 0) --q;
    return q;
}

// ceil(x / y) for y > 0.
constexpr long long ceil_div(long long x, long long y) {
    return -floor_div(-x, y);
}

// x mod y in [0, y) for y > 0.
constexpr long long mod_floor(long long x, long long y) {
    return x - y * floor_div(x, y);
}

} // namespace ranklab

#endif
