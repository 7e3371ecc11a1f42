#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "arith.hpp"
#include "cache.hpp"
#include "identities.hpp"

namespace zetasum {

// A sampled curve next to its sieved ground truth, for CSV/JSON emission.
struct SeriesGrid {
    std::vector<double> t_values;
    std::vector<double> values;
    std::vector<double> reference;
};

namespace detail {

inline double cot_half(double x) { return std::cos(0.5 * x) / std::sin(0.5 * x); }

// static tables of zeta at small integers, shared by the reconstruction tails
inline double zeta_real_cached(int k) {
    static const std::vector<double> table = [] {
        std::vector<double> t(262, 0.0);
        for (int i = 2; i <= 261; ++i) t[static_cast<std::size_t>(i)] = zeta_em(Complex(i, 0.0)).real();
        return t;
    }();
    if (k >= 2 && k <= 261) return table[static_cast<std::size_t>(k)];
    return 1.0;
}

} // namespace detail

// sum_g sinh(x g)/sinh(pi g) cos(g log t) at the params' x
inline double prime_kernel_limit(double t, const KernelParams& p, const ZeroTable& zeros) {
    p.validate();
    if (!(t > 1.0)) throw DomainViolation("t must exceed 1");
    const std::size_t K = detail::zeros_used(zeros, p);
    const double lt = std::log(t);
    return chunked_sum(K, [&](std::size_t j) {
        const double g = zeros.ordinates[j];
        return kernel_sinh_ratio(p.x, g) * std::cos(g * lt);
    });
}

// Corollary Eq. (with-all-zeros): the smooth Mangoldt representation
//   Lambda(t) ~ -4 pi sqrt(t) cot(x/2) sum_g sinh(xg)/sinh(pi g) cos(g log t)
//             + 2 pi cot(x/2) (t - 1/(t^2-1))
// The _unit variants carry everything except the final cot(x/2) factor, so
// rescaling in x is literally one multiplication.
inline double mangoldt_reconstruct_unit(double t, const KernelParams& p, const ZeroTable& zeros) {
    p.validate();
    if (!(t > 1.0)) throw DomainViolation("t must exceed 1");
    const double zsum = prime_kernel_limit(t, p, zeros);
    return -4.0 * kPi * std::sqrt(t) * zsum + 2.0 * kPi * (t - 1.0 / (t * t - 1.0));
}

inline double mangoldt_reconstruct(double t, const KernelParams& p, const ZeroTable& zeros) {
    return mangoldt_reconstruct_unit(t, p, zeros) * detail::cot_half(p.x);
}

// Landau's classical formula, the comparison baseline:
//   Lambda(t) ~ -(2 pi/T) sqrt(t) sum_{g <= T} cos(g log t)
inline double landau_mangoldt(double t, double T_cut, const ZeroTable& zeros) {
    if (!(t > 1.0)) throw DomainViolation("t must exceed 1");
    const long K = count_below(zeros, T_cut);
    const double lt = std::log(t);
    const double s = chunked_sum(static_cast<std::size_t>(K), [&](std::size_t j) {
        return std::cos(zeros.ordinates[j] * lt);
    });
    return -(2.0 * kPi / T_cut) * std::sqrt(t) * s;
}

// Corollary Eq. (eq-prime), the tan(x/2)-free combination with t = 2:
//   sum_g k(g)[ (log2/sqrt2) cos(g log t) - (Lambda(t)/sqrt t) cos(g log 2) ]
//     = (log2/sqrt2)(sqrt t/2 - 1/(2(t^2-1)sqrt t)) - (Lambda(t)/sqrt t) 5 sqrt2/12
inline IdentityReport combined_prime_identity(double t, const KernelParams& p,
                                              const ArithTable& arith, const ZeroTable& zeros) {
    p.validate();
    if (!(t > 1.0)) throw DomainViolation("t must exceed 1");
    const double lam_t = at_real(arith, t, ArithKind::Mangoldt);
    const double w2 = kLog2 / std::sqrt(2.0);
    const double wt = lam_t / std::sqrt(t);
    const double lt = std::log(t);
    const std::size_t K = detail::zeros_used(zeros, p);
    const double lhs = chunked_sum(K, [&](std::size_t j) {
        const double g = zeros.ordinates[j];
        const double k = kernel_sinh_ratio(p.x, g);
        return k * (w2 * std::cos(g * lt) - wt * std::cos(g * kLog2));
    });
    const double rhs = w2 * (std::sqrt(t) / 2.0 - 1.0 / (2.0 * (t * t - 1.0) * std::sqrt(t))) -
                       wt * 5.0 * std::sqrt(2.0) / 12.0;
    return detail::make_report("combined_prime_identity", Complex(lhs, 0.0), Complex(rhs, 0.0), p);
}

// Abel-power-series corollary and the (exploratory) conjecture weighting
// (1 - log N/N)^j. Reported, never asserted.
inline double abel_limit_series(double t, double z_abel, const KernelParams& p,
                                const ZeroTable& zeros, bool conjecture_weighting = false) {
    p.validate();
    if (!(t > 1.0)) throw DomainViolation("t must exceed 1");
    if (!(z_abel >= 0.0) || z_abel >= 1.0) throw DomainError("z_abel must lie in [0, 1)");
    const std::size_t K = detail::zeros_used(zeros, p);
    const double lt = std::log(t);
    const double w = conjecture_weighting
                         ? 1.0 - std::log(static_cast<double>(K)) / static_cast<double>(K)
                         : z_abel;
    // geometric weight accumulated sequentially; order matters, keep it serial
    double acc = 0.0;
    double wj = 1.0;
    for (std::size_t j = 0; j < K; ++j) {
        acc += std::cos(zeros.ordinates[j] * lt) * wj;
        wj *= w;
        if (wj < 1e-300) break;
    }
    return acc;
}

// Theorem 13 Eq. (staircase):
//   F(t) - sum_g sin(g log t)/g = Lambda(t)/(4 sqrt t) + (1/2) sum_{n<t} Lambda(n)/sqrt n
inline double staircase_F(double t) {
    const double st = std::sqrt(t);
    return st - 1.0 / st - 0.5 * std::atan((st - 1.0) / (st + 1.0)) -
           0.25 * std::log((st - 1.0) / (st + 1.0)) - 0.25 * (kLogPi + 3.0 * kLog2 + kEulerC);
}

inline IdentityReport staircase(double t, const KernelParams& p, const ArithTable& arith,
                                const ZeroTable& zeros) {
    p.validate();
    if (!(t > 1.0)) throw DomainViolation("t must exceed 1");
    const std::size_t K = detail::zeros_used(zeros, p);
    const double lt = std::log(t);
    const double zsum = chunked_sum(K, [&](std::size_t j) {
        const double g = zeros.ordinates[j];
        return std::sin(g * lt) / g;
    });
    const double lhs = staircase_F(t) - zsum;
    const double rhs = 0.25 * at_real(arith, t, ArithKind::Mangoldt) / std::sqrt(t) +
                       0.5 * weighted_psi_sqrt(arith, t);
    return detail::make_report("staircase", Complex(lhs, 0.0), Complex(rhs, 0.0), p);
}

// Theorem 12 Eq. (rep-moe). Needs the cached 1/zeta'(1/2 + i g). The trailing
// power series is the residue train at the negative odd integers.
inline double moebius_reconstruct_unit(double t, const KernelParams& p, const ZeroTable& zeros,
                                       const ZeroFnCache& cache) {
    p.validate();
    if (!(t >= 1.0)) throw DomainViolation("t must be >= 1");
    const std::size_t K = std::min(detail::zeros_used(zeros, p), cache.inv_zprime.size());
    const double lt = std::log(t);
    const double zsum = chunked_sum(K, [&](std::size_t j) {
        const double g = zeros.ordinates[j];
        const Complex c = cache.inv_zprime[j];
        return c.real() * kernel_sinh_ratio(p.x, g) * std::cos(g * lt) -
               c.imag() * kernel_cosh_ratio(p.x, g) * std::sin(g * lt);
    });
    double tail = 0.0;
    const double t2 = 1.0 / (t * t);
    double tp = 1.0;
    double coef = 1.0;  // (2 pi)^{2n}/(2n)!
    for (int n = 1; n <= 40; ++n) {
        tp *= t2;
        coef *= (2.0 * kPi / static_cast<double>(2 * n - 1)) * (2.0 * kPi / static_cast<double>(2 * n));
        const double term = (n % 2 == 0 ? 1.0 : -1.0) * coef /
                            detail::zeta_real_cached(2 * n + 1) * tp;
        tail += term;
        if (n > 4 && std::abs(term) < 1e-15) break;
    }
    return 4.0 * kPi * std::sqrt(t) * zsum + 4.0 * kPi * tail;
}

inline double moebius_reconstruct(double t, const KernelParams& p, const ZeroTable& zeros,
                                  const ZeroFnCache& cache) {
    return moebius_reconstruct_unit(t, p, zeros, cache) * detail::cot_half(p.x);
}

// Theorem 15 Eq. (rep-phi), with the cached zeta(-1/2+ig)/zeta'(1/2+ig).
inline double phi_reconstruct_unit(double t, const KernelParams& p, const ZeroTable& zeros,
                                   const ZeroFnCache& cache) {
    p.validate();
    if (!(t > 1.0)) throw DomainViolation("t must exceed 1");
    const std::size_t K = std::min(detail::zeros_used(zeros, p), cache.phi_ratio.size());
    const double lt = std::log(t);
    const double zsum = chunked_sum(K, [&](std::size_t j) {
        const double g = zeros.ordinates[j];
        const Complex c = cache.phi_ratio[j];
        return c.real() * kernel_sinh_ratio(p.x, g) * std::cos(g * lt) -
               c.imag() * kernel_cosh_ratio(p.x, g) * std::sin(g * lt);
    });
    double tail = 0.0;
    const double t2 = 1.0 / (t * t);
    double tp = 1.0;
    for (int n = 1; n <= 1000; ++n) {
        tp *= t2;
        const double term = (2.0 * n + 1.0) * detail::zeta_real_cached(2 * n + 2) /
                            detail::zeta_real_cached(2 * n + 1) * tp;
        tail += term;
        if (n > 4 && std::abs(term) < 1e-15) break;
    }
    return 4.0 * kPi * std::sqrt(t) * zsum + 12.0 / kPi * t * t - 2.0 / kPi * tail;
}

inline double phi_reconstruct(double t, const KernelParams& p, const ZeroTable& zeros,
                              const ZeroFnCache& cache) {
    return phi_reconstruct_unit(t, p, zeros, cache) * detail::cot_half(p.x);
}

enum class GridKind { Mangoldt, Moebius, Phi, Staircase };

// Samples a reconstruction against its sieved reference on [t_min, t_max].
// Reproduces the paper's three figures when dumped to CSV.
inline SeriesGrid emit_grid(GridKind which, double t_min, double t_max, double step,
                            const KernelParams& p, const ArithTable& arith,
                            const ZeroTable& zeros, const ZeroFnCache* cache = nullptr) {
    p.validate();
    if (!(step > 0.0)) throw DomainError("step must be positive");
    if (t_max > static_cast<double>(arith.n_max)) throw OutOfRange("grid exceeds the arith table bound");
    if ((which == GridKind::Moebius || which == GridKind::Phi) && cache == nullptr) {
        throw DomainError("moebius/phi grids need the per-zero cache");
    }
    SeriesGrid grid;
    const long npts = t_max < t_min ? 0 : static_cast<long>((t_max - t_min) / step + 1e-9) + 1;
    for (long i = 0; i < npts; ++i) {
        const double t = t_min + step * static_cast<double>(i);
        double value, ref;
        switch (which) {
            case GridKind::Mangoldt:
                value = mangoldt_reconstruct(t, p, zeros);
                ref = at_real(arith, t, ArithKind::Mangoldt);
                break;
            case GridKind::Moebius:
                value = moebius_reconstruct(t, p, zeros, *cache);
                ref = at_real(arith, t, ArithKind::Moebius);
                break;
            case GridKind::Phi:
                value = phi_reconstruct(t, p, zeros, *cache);
                ref = at_real(arith, t, ArithKind::Phi);
                break;
            default: {
                IdentityReport r = staircase(t, p, arith, zeros);
                value = r.lhs.real();
                ref = r.rhs.real();
                break;
            }
        }
        grid.t_values.push_back(t);
        grid.values.push_back(value);
        grid.reference.push_back(ref);
    }
    return grid;
}

} // namespace zetasum
