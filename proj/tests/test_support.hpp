#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "zetasum/zetasum.hpp"

namespace testsupport {

inline std::string data_path(const std::string& name) {
    return std::string(ZETASUM_SOURCE_DIR) + "/data/" + name;
}

// Shared fixtures, loaded once per process.
inline const zetasum::ZeroTable& zeros10k() {
    static const zetasum::ZeroTable t = [] {
        std::ifstream in(data_path("zeros_10k.txt"));
        if (!in) throw std::runtime_error("zeros_10k.txt not found; run from the repo root");
        return zetasum::parse_zeros(in);
    }();
    return t;
}

inline const zetasum::ArithTable& arith1e6() {
    static const zetasum::ArithTable t = zetasum::build_table(1000000);
    return t;
}

} // namespace testsupport
