#pragma once

// The three binomial-coefficient inequalities used by the probabilistic
// estimates:
//   (1) C(a,b) <= (e a / b)^b
//   (2) C(a-x,b) / C(a,b) <= ((a-b)/a)^x < e^{-bx/a}
//   (3) C(a-x,b-x) / C(a,b) <= (b/a)^x
// Binomial ratios are compared exactly over the rationals; sides involving
// e are compared in 100-digit binary floating point.

#include <cstdint>

namespace lchoose {

struct BinomialBounds {
    bool first = false;
    bool second = false;  // both links of the chain
    bool third = false;

    bool all() const { return first && second && third; }
};

/// Requires 0 <= x < b and b + x < a; throws std::invalid_argument otherwise.
/// At x = 0 the strict link of (2) degenerates to 1 = 1 and is accepted.
BinomialBounds binomial_bounds(std::uint64_t a, std::uint64_t b, std::uint64_t x);

}  // namespace lchoose
