#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace ctn {

using Rational = boost::rational<std::int64_t>;

/// "3/4", or "2" for integers.
inline std::string to_string(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

} // namespace ctn
