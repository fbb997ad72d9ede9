#include "lchoose/construct.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <limits>
#include <sstream>

namespace lchoose {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_50;

namespace {

constexpr std::size_t max_doublings = 4096;

const char* const condition_names[] = {"short_cycles", "expansion", "labelling"};

Real minus_infinity()
{
    return -std::numeric_limits<Real>::infinity();
}

// Log of the quantity that must drop below 1, at n = exp(log_n).
Real margin(const ConstructionParams& p, std::size_t which, const Real& log_n)
{
    const Real eps = p.epsilon;
    const Real k = static_cast<double>(p.k);
    const Real n = mp::exp(log_n);
    switch (which) {
    case 0: {  // (g-3) k^{g-1} / n^eps
        if (p.g <= 3)
            return minus_infinity();
        return mp::log(Real(p.g - 3)) + Real(p.g - 1) * mp::log(k) - eps * log_n;
    }
    case 1: {  // e^{-n^{1+2eps}/(2t^2)} q (e t)^{2n/t}
        if (p.q == 0)
            return minus_infinity();
        const Real t = static_cast<double>(p.t);
        return -mp::exp((1 + 2 * eps) * log_n) / (2 * t * t) + mp::log(Real(p.q)) + (2 * n / t) * (1 + mp::log(t));
    }
    default: {  // q (e k r^k)^{2n} (1 - 1/r^2)^{n^{1+eps}/4}
        if (p.q == 0 || p.r <= 1)
            return minus_infinity();
        const Real r = static_cast<double>(p.r);
        return mp::log(Real(p.q)) + 2 * n * (1 + mp::log(k) + k * mp::log(r)) +
               mp::exp((1 + eps) * log_n) / 4 * mp::log1p(-1 / (r * r));
    }
    }
}

}  // namespace

double feasibility_margin(const ConstructionParams& params, std::size_t which, double log2_n)
{
    return static_cast<double>(margin(params, which, Real(log2_n) * mp::log(Real(2))));
}

FeasibilityReport feasibility_report(const ConstructionParams& params)
{
    FeasibilityReport report;
    const Real ln2 = mp::log(Real(2));
    for (std::size_t which = 0; which < 3; ++which) {
        LargenessCondition c;
        c.name = condition_names[which];
        const Real at_n = margin(params, which, mp::log(Real(params.n)));
        c.holds = at_n < 0;
        c.log_margin = static_cast<double>(at_n);
        for (std::size_t j = 0; j <= max_doublings; ++j)
            if (margin(params, which, Real(j) * ln2) < 0) {
                c.min_n_log2 = j;
                break;
            }
        report.conditions.push_back(std::move(c));
    }
    return report;
}

std::string FeasibilityReport::to_text() const
{
    std::ostringstream out;
    for (const auto& c : conditions) {
        out << "feasibility." << c.name << ".holds=" << (c.holds ? "true" : "false") << '\n';
        out << "feasibility." << c.name << ".log_margin=" << c.log_margin << '\n';
        out << "feasibility." << c.name << ".min_n=";
        if (c.min_n_log2)
            out << "2^" << *c.min_n_log2;
        else
            out << "none<=2^" << max_doublings;
        out << '\n';
    }
    return out.str();
}

}  // namespace lchoose
