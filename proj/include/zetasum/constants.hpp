#pragma once

#include <array>

namespace zetasum {

inline constexpr double kPi        = 3.14159265358979323846;
inline constexpr double kEulerC    = 0.57721566490153286061;  // Euler's constant C
inline constexpr double kCatalanG  = 0.91596559417721901505;  // Catalan's constant G
inline constexpr double kLog2      = 0.69314718055994530942;
inline constexpr double kLog2Pi    = 1.83787706640934548356;
inline constexpr double kLogPi     = 1.14472988584940017414;
inline constexpr double kLog8Pi    = 3.22417142752923610240;  // log(8*pi)

// B_{2k} for k = 1..12, used by the Euler-Maclaurin and Stirling tails.
inline constexpr std::array<double, 12> kBernoulli2k = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
};

} // namespace zetasum
