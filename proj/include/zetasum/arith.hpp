#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "constants.hpp"
#include "errors.hpp"

namespace zetasum {

// Sieved ground truth: Lambda(n) in natural-log units, mu(n) in {-1,0,1},
// phi(n). Index 0 and 1 are stored but carry the conventional values
// Lambda=0, mu(1)=1, phi(1)=1.
struct ArithTable {
    long n_max = 0;
    std::vector<double> mangoldt;
    std::vector<std::int8_t> moebius;
    std::vector<std::uint32_t> phi;
};

enum class ArithKind { Mangoldt, Moebius, Phi };

inline ArithTable build_table(long n_max) {
    if (n_max < 2) throw DomainError("arith table needs n_max >= 2");
    if (n_max > 100000000L) throw CapacityExceeded("arith table capped at 1e8");

    ArithTable t;
    t.n_max = n_max;
    const std::size_t size = static_cast<std::size_t>(n_max) + 1;
    t.mangoldt.assign(size, 0.0);
    t.moebius.assign(size, 1);
    t.phi.resize(size);
    for (std::size_t i = 0; i < size; ++i) t.phi[i] = static_cast<std::uint32_t>(i);
    t.moebius[0] = 0;

    std::vector<bool> composite(size, false);
    for (long p = 2; p <= n_max; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        const double logp = std::log(static_cast<double>(p));
        for (long q = p; q <= n_max; q += p) {
            if (q > p) composite[static_cast<std::size_t>(q)] = true;
            t.moebius[static_cast<std::size_t>(q)] = -t.moebius[static_cast<std::size_t>(q)];
            t.phi[static_cast<std::size_t>(q)] -= t.phi[static_cast<std::size_t>(q)] / static_cast<std::uint32_t>(p);
        }
        if (p <= n_max / p) {
            const long p2 = p * p;
            for (long q = p2; q <= n_max; q += p2) t.moebius[static_cast<std::size_t>(q)] = 0;
        }
        for (long q = p; q <= n_max; q = (q <= n_max / p) ? q * p : n_max + 1) {
            t.mangoldt[static_cast<std::size_t>(q)] = logp;
        }
    }
    return t;
}

// The paper treats Lambda, mu, phi as functions on the positive reals, zero
// off the integers. Values within 1e-9 of an integer snap to that integer.
inline double at_real(const ArithTable& t, double x, ArithKind which) {
    if (!(x > 0.0) || x > static_cast<double>(t.n_max)) throw OutOfRange("argument outside table range");
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-9) return 0.0;
    const std::size_t n = static_cast<std::size_t>(r);
    switch (which) {
        case ArithKind::Mangoldt: return t.mangoldt[n];
        case ArithKind::Moebius: return static_cast<double>(t.moebius[n]);
        case ArithKind::Phi: return static_cast<double>(t.phi[n]);
    }
    return 0.0;
}

// sum_{n < t} Lambda(n)/sqrt(n), strict at integer t
inline double weighted_psi_sqrt(const ArithTable& t, double x) {
    if (!(x > 0.0) || x > static_cast<double>(t.n_max)) throw OutOfRange("argument outside table range");
    double acc = 0.0;
    for (long n = 2; static_cast<double>(n) < x; ++n) {
        const double lg = t.mangoldt[static_cast<std::size_t>(n)];
        if (lg != 0.0) acc += lg / std::sqrt(static_cast<double>(n));
    }
    return acc;
}

// Truncated -zeta'/zeta(s) = sum Lambda(m) m^{-s} for real s > 1, grouped by
// primes (each prime contributes its full power tail log p/(p^s - 1)); the
// prime loop stops once log p * p^{-s} < eps.
inline double mangoldt_dirichlet_tail(double s, double eps) {
    if (!(s > 1.0)) throw DomainError("mangoldt_dirichlet_tail requires s > 1");
    if (!(eps > 0.0)) throw DomainError("eps must be positive");

    // smallest P with log(P) P^{-s} < eps, capped for memory
    long P = 16;
    while (P < 30000000L && std::log(static_cast<double>(P)) * std::pow(static_cast<double>(P), -s) >= eps) {
        P *= 2;
    }

    std::vector<bool> composite(static_cast<std::size_t>(P) + 1, false);
    double acc = 0.0;
    for (long p = 2; p <= P; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (long q = p * p; q <= P && q > 0; q += p) composite[static_cast<std::size_t>(q)] = true;
        const double term = std::log(static_cast<double>(p)) * std::pow(static_cast<double>(p), -s);
        if (term < eps) break;
        acc += term / (1.0 - std::pow(static_cast<double>(p), -s));
    }
    return acc;
}

} // namespace zetasum
