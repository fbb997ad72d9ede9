#include "lchoose/bounds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lchoose {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_100;

namespace {

mp::cpp_int binomial(std::uint64_t a, std::uint64_t b)
{
    if (b > a)
        return 0;
    mp::cpp_int result = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

mp::cpp_rational power(const mp::cpp_rational& base, std::uint64_t e)
{
    mp::cpp_rational out = 1;
    for (std::uint64_t i = 0; i < e; ++i)
        out *= base;
    return out;
}

}  // namespace

BinomialBounds binomial_bounds(std::uint64_t a, std::uint64_t b, std::uint64_t x)
{
    if (!(x < b) || !(b + x < a))
        throw std::invalid_argument("binomial_bounds needs 0 <= x < b and b + x < a (got a=" + std::to_string(a) +
                                    " b=" + std::to_string(b) + " x=" + std::to_string(x) + ")");
    BinomialBounds out;
    const auto c_ab = binomial(a, b);

    const Real e = mp::exp(Real(1));
    out.first = Real(c_ab) <= mp::pow(e * Real(a) / Real(b), static_cast<long>(b));

    const mp::cpp_rational ratio2(binomial(a - x, b), c_ab);
    const mp::cpp_rational base2(mp::cpp_int(a - b), mp::cpp_int(a));
    const bool link1 = ratio2 <= power(base2, x);
    bool link2 = true;
    if (x > 0) {
        const Real lhs = mp::pow(Real(a - b) / Real(a), static_cast<long>(x));
        const Real rhs = mp::exp(-Real(b) * Real(x) / Real(a));
        link2 = lhs < rhs;
    }
    out.second = link1 && link2;

    const mp::cpp_rational ratio3(binomial(a - x, b - x), c_ab);
    out.third = ratio3 <= power(mp::cpp_rational(mp::cpp_int(b), mp::cpp_int(a)), x);
    return out;
}

}  // namespace lchoose
