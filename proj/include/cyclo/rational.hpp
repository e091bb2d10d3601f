#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace cyclo {

using Rational = boost::rational<std::int64_t>;

/// "num/den", always with an explicit denominator ("3/1", "-5/2").
inline std::string to_string(const Rational& x)
{
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

/// Largest integer <= x.
inline std::int64_t floor(const Rational& x)
{
    const auto num = x.numerator();
    const auto den = x.denominator();  // always positive after normalization
    auto q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

}  // namespace cyclo
