#pragma once

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "reduce.hpp"
#include "special.hpp"
#include "zeros.hpp"

namespace zetasum {

// Per-zero quantities that dominate the runtime of the Moebius and phi
// reconstructions: 1/zeta'(1/2 + i g_j) and zeta(-1/2 + i g_j)/zeta'(1/2 + i g_j).
// Built once per zero table and persisted as a text sidecar keyed by a hash
// of the ordinates, so a warm run only pays file IO.
struct ZeroFnCache {
    std::uint64_t zeros_hash = 0;
    std::vector<Complex> inv_zprime;
    std::vector<Complex> phi_ratio;
};

inline std::uint64_t hash_ordinates(const ZeroTable& zeros) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (double g : zeros.ordinates) {
        std::uint64_t bits;
        std::memcpy(&bits, &g, sizeof bits);
        for (int b = 0; b < 8; ++b) {
            h ^= (bits >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

inline ZeroFnCache build_zero_cache(const ZeroTable& zeros, std::size_t k,
                                    const EvalParams& ep = {}) {
    ep.validate();
    if (k > zeros.count()) k = zeros.count();
    ZeroFnCache cache;
    cache.zeros_hash = hash_ordinates(zeros);
    cache.inv_zprime.resize(k);
    cache.phi_ratio.resize(k);
    std::vector<char> too_small(k, 0);
    parallel_for_index(k, [&](std::size_t j) {
        const double g = zeros.ordinates[j];
        const ZetaDerivs d = zeta_derivs(Complex(0.5, g), 1, ep);
        if (std::abs(d.z1) < 1e-3) {
            too_small[j] = 1;
            return;
        }
        const Complex inv = 1.0 / d.z1;
        cache.inv_zprime[j] = inv;
        cache.phi_ratio[j] = zeta_em(Complex(-0.5, g), ep) * inv;
    });
    for (std::size_t j = 0; j < k; ++j) {
        if (too_small[j]) {
            throw DerivativeTooSmall("zeta'(1/2 + i g) below 1e-3 at zero index " + std::to_string(j));
        }
    }
    return cache;
}

namespace detail {

inline bool write_cache_file(const std::string& path, const char* kind, std::uint64_t hash,
                             const std::vector<Complex>& values) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) return false;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "# zetasum-zero-cache kind=%s hash=%016llx count=%zu\n", kind,
                  static_cast<unsigned long long>(hash), values.size());
    out << buf;
    for (std::size_t j = 0; j < values.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%zu %.17g %.17g\n", j, values[j].real(), values[j].imag());
        out << buf;
    }
    return static_cast<bool>(out);
}

inline bool read_cache_file(const std::string& path, const char* kind, std::uint64_t hash,
                            std::size_t min_count, std::vector<Complex>& values) {
    std::ifstream in(path);
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header)) return false;
    char expect[96];
    std::snprintf(expect, sizeof(expect), "# zetasum-zero-cache kind=%s hash=%016llx", kind,
                  static_cast<unsigned long long>(hash));
    if (header.rfind(expect, 0) != 0) return false;

    std::vector<Complex> loaded;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::size_t idx;
        double re, im;
        if (!(ls >> idx >> re >> im) || idx != loaded.size()) return false;
        loaded.emplace_back(re, im);
    }
    if (loaded.size() < min_count) return false;
    values = std::move(loaded);
    return true;
}

} // namespace detail

// Loads the sidecar pair from cache_dir if the hashes match, otherwise builds
// and writes it. stem names the files: <stem>.invzp.txt, <stem>.phiratio.txt.
inline ZeroFnCache obtain_zero_cache(const ZeroTable& zeros, std::size_t k,
                                     const std::filesystem::path& cache_dir,
                                     const std::string& stem, const EvalParams& ep = {}) {
    const std::uint64_t hash = hash_ordinates(zeros);
    if (k > zeros.count()) k = zeros.count();
    const std::string inv_path = (cache_dir / (stem + ".invzp.txt")).string();
    const std::string phi_path = (cache_dir / (stem + ".phiratio.txt")).string();

    ZeroFnCache cache;
    cache.zeros_hash = hash;
    if (detail::read_cache_file(inv_path, "inv_zprime", hash, k, cache.inv_zprime) &&
        detail::read_cache_file(phi_path, "phi_ratio", hash, k, cache.phi_ratio)) {
        return cache;
    }
    cache = build_zero_cache(zeros, k, ep);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    detail::write_cache_file(inv_path, "inv_zprime", hash, cache.inv_zprime);
    detail::write_cache_file(phi_path, "phi_ratio", hash, cache.phi_ratio);
    return cache;
}

} // namespace zetasum
