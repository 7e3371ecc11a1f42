#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "special.hpp"

namespace zetasum {

// Positive imaginary parts gamma_j of the non-trivial zeros, strictly
// increasing, all above the first ordinate 14.13...
struct ZeroTable {
    std::vector<double> ordinates;
    int source_precision = 9;  // decimal digits of the source file

    std::size_t count() const { return ordinates.size(); }
};

// One decimal ordinate per line, LF or CRLF, blank lines permitted.
inline ZeroTable parse_zeros(std::istream& in, int source_precision = 9) {
    ZeroTable table;
    table.source_precision = source_precision;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t");
        const std::string tok = line.substr(b, e - b + 1);

        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size() || !std::isfinite(v)) throw NonNumericLine(line_no);
        if (!(v > 14.0)) {
            if (!table.ordinates.empty() && v <= table.ordinates.back()) throw NonMonotonic(line_no);
            throw InvalidOrdinate(line_no);
        }
        if (!table.ordinates.empty() && v <= table.ordinates.back()) throw NonMonotonic(line_no);
        table.ordinates.push_back(v);
    }
    if (table.ordinates.empty()) throw EmptyInput();
    return table;
}

// Full-precision serialization; parse_zeros(serialize(t)) reproduces t exactly.
inline void serialize_zeros(const ZeroTable& t, std::ostream& out) {
    char buf[40];
    for (double g : t.ordinates) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", g);
        out << buf;
    }
}

inline ZeroTable truncated(const ZeroTable& t, std::size_t max_zeros) {
    if (max_zeros == 0) throw DomainError("max_zeros must be >= 1");
    ZeroTable out;
    out.source_precision = t.source_precision;
    const std::size_t n = std::min(max_zeros, t.ordinates.size());
    out.ordinates.assign(t.ordinates.begin(), t.ordinates.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
}

// Number of ordinates <= T.
inline long count_below(const ZeroTable& t, double T) {
    if (t.ordinates.empty() || T > t.ordinates.back()) {
        throw OutOfRange("T exceeds the coverage of the zero table");
    }
    auto it = std::upper_bound(t.ordinates.begin(), t.ordinates.end(), T);
    return static_cast<long>(it - t.ordinates.begin());
}

// Backlund's counting formula with the arg-zeta term S(T) omitted:
//   N(T) ~ theta(T)/pi + 1.
// S(T) stays well inside +-2 over the table's range.
inline double backlund_estimate(double T) {
    return theta_rs(T) / kPi + 1.0;
}

} // namespace zetasum
