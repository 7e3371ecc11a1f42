#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "constants.hpp"
#include "errors.hpp"

namespace zetasum {

using Complex = std::complex<double>;

// Knobs for the Euler-Maclaurin evaluator and its finite-difference checks.
struct EvalParams {
    int em_terms = 50;       // minimum direct-sum length N
    int em_bernoulli = 8;    // number of B_{2k} corrections
    double fd_step = 1e-6;   // step for validation finite differences

    void validate() const {
        if (em_terms < 10) throw DomainError("em_terms must be >= 10");
        if (em_bernoulli < 2 || em_bernoulli > 12) throw DomainError("em_bernoulli must lie in [2, 12]");
        if (!(fd_step > 0.0) || fd_step > 1e-4) throw DomainError("fd_step must lie in (0, 1e-4]");
    }
};

// ---------------------------------------------------------------------------
// Stirling-series gamma machinery (log Gamma, digamma, trigamma) for Re z > 0.
// The recurrence shift keeps |z| large enough that the B_{2k}/z^{2k-1} tail
// reaches double precision with 12 terms.
// ---------------------------------------------------------------------------

inline Complex lgamma_complex(Complex z) {
    Complex shift(0.0, 0.0);
    while (std::abs(z) < 14.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    const Complex zinv = 1.0 / z;
    const Complex zinv2 = zinv * zinv;
    Complex tail(0.0, 0.0);
    Complex zp = zinv;
    for (std::size_t k = 0; k < kBernoulli2k.size(); ++k) {
        const double two_k = 2.0 * static_cast<double>(k + 1);
        tail += kBernoulli2k[k] / (two_k * (two_k - 1.0)) * zp;
        zp *= zinv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi + tail + shift;
}

inline Complex digamma_complex(Complex z) {
    Complex shift(0.0, 0.0);
    while (std::abs(z) < 14.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const Complex zinv = 1.0 / z;
    const Complex zinv2 = zinv * zinv;
    Complex tail(0.0, 0.0);
    Complex zp = zinv2;
    for (std::size_t k = 0; k < kBernoulli2k.size(); ++k) {
        tail += kBernoulli2k[k] / (2.0 * static_cast<double>(k + 1)) * zp;
        zp *= zinv2;
    }
    return std::log(z) - 0.5 * zinv - tail + shift;
}

inline Complex trigamma_complex(Complex z) {
    Complex shift(0.0, 0.0);
    while (std::abs(z) < 14.0) {
        shift += 1.0 / (z * z);
        z += 1.0;
    }
    const Complex zinv = 1.0 / z;
    const Complex zinv2 = zinv * zinv;
    Complex tail(0.0, 0.0);
    Complex zp = zinv * zinv2;
    for (std::size_t k = 0; k < kBernoulli2k.size(); ++k) {
        tail += kBernoulli2k[k] * zp;
        zp *= zinv2;
    }
    return zinv + 0.5 * zinv2 + tail + shift;
}

inline Complex gamma_complex(Complex z) { return std::exp(lgamma_complex(z)); }

// log sin w, stable for large |Im w| where sin itself would overflow.
inline Complex log_sin_complex(Complex w) {
    const double im = w.imag();
    if (im > 19.0) {
        // sin w ~ (i/2) e^{-iw}
        return Complex(0.0, -1.0) * w + std::log(Complex(0.0, 0.5)) +
               std::log(1.0 - std::exp(Complex(0.0, 2.0) * w));
    }
    if (im < -19.0) {
        return Complex(0.0, 1.0) * w + std::log(Complex(0.0, -0.5)) +
               std::log(1.0 - std::exp(Complex(0.0, -2.0) * w));
    }
    return std::log(std::sin(w));
}

inline Complex cot_complex(Complex w) {
    const double im = w.imag();
    if (im > 19.0) {
        const Complex q = std::exp(Complex(0.0, 2.0) * w);  // |q| tiny
        return Complex(0.0, -1.0) * (1.0 + 2.0 * q / (1.0 - q));
    }
    if (im < -19.0) {
        const Complex q = std::exp(Complex(0.0, -2.0) * w);
        return Complex(0.0, 1.0) * (1.0 + 2.0 * q / (1.0 - q));
    }
    return std::cos(w) / std::sin(w);
}

inline Complex inv_sin_sq_complex(Complex w) {
    const double im = w.imag();
    if (im > 19.0) {
        const Complex q = std::exp(Complex(0.0, 2.0) * w);
        const Complex d = 1.0 - q;
        return -4.0 * q / (d * d);
    }
    if (im < -19.0) {
        const Complex q = std::exp(Complex(0.0, -2.0) * w);
        const Complex d = 1.0 - q;
        return -4.0 * q / (d * d);
    }
    const Complex s = std::sin(w);
    return 1.0 / (s * s);
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin evaluation of zeta and its first two derivatives.
// ---------------------------------------------------------------------------

struct ZetaDerivs {
    Complex z;   // zeta(s)
    Complex z1;  // zeta'(s)
    Complex z2;  // zeta''(s)
};

namespace detail {

// Direct Euler-Maclaurin branch; requires Re s >= 0.5 (and s != 1).
//   zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//           + sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{1-s-2k}
// N grows with |Im s| so the Bernoulli tail stays convergent.
inline ZetaDerivs zeta_em_direct(Complex s, int order, const EvalParams& p) {
    const double sigma = s.real();
    const double t = s.imag();
    const long N = std::max<long>(p.em_terms, static_cast<long>(0.57 * std::abs(t)) + 20);
    const int K = p.em_bernoulli;

    Complex z0(0.0, 0.0), z1(0.0, 0.0), z2(0.0, 0.0);
    for (long n = 1; n < N; ++n) {
        const double ln = std::log(static_cast<double>(n));
        const double mag = std::exp(-sigma * ln);
        const double ph = t * ln;
        const Complex v(mag * std::cos(ph), -mag * std::sin(ph));
        z0 += v;
        if (order >= 1) z1 -= ln * v;
        if (order >= 2) z2 += (ln * ln) * v;
    }

    const double lnN = std::log(static_cast<double>(N));
    const Complex sm1 = s - 1.0;
    const Complex Npow1ms = std::exp((1.0 - s) * lnN);  // N^{1-s}
    const Complex NpowMs = Npow1ms / static_cast<double>(N);

    // pole term N^{1-s}/(s-1)
    const Complex pole = Npow1ms / sm1;
    z0 += pole;
    if (order >= 1) z1 -= pole * (lnN + 1.0 / sm1);
    if (order >= 2) z2 += pole * (lnN * lnN + 2.0 * lnN / sm1 + 2.0 / (sm1 * sm1));

    // half term N^{-s}/2
    const Complex halfterm = 0.5 * NpowMs;
    z0 += halfterm;
    if (order >= 1) z1 -= lnN * halfterm;
    if (order >= 2) z2 += lnN * lnN * halfterm;

    // Bernoulli corrections, built incrementally
    const double N2inv = 1.0 / (static_cast<double>(N) * static_cast<double>(N));
    Complex prod = s;                        // P_k(s) = s(s+1)...(s+2k-2)
    Complex dl1 = 1.0 / s;                   // sum 1/(s+j)
    Complex dl2 = 1.0 / (s * s);             // sum 1/(s+j)^2
    Complex Nfac = NpowMs / static_cast<double>(N);  // N^{1-s-2k} at k=1
    double fact = 2.0;                       // (2k)!
    for (int k = 1; k <= K; ++k) {
        if (k > 1) {
            const Complex a = s + static_cast<double>(2 * k - 3);
            const Complex b = s + static_cast<double>(2 * k - 2);
            prod *= a * b;
            dl1 += 1.0 / a + 1.0 / b;
            dl2 += 1.0 / (a * a) + 1.0 / (b * b);
            Nfac *= N2inv;
            fact *= static_cast<double>(2 * k - 1) * static_cast<double>(2 * k);
        }
        const Complex T = (kBernoulli2k[static_cast<std::size_t>(k - 1)] / fact) * prod * Nfac;
        z0 += T;
        if (order >= 1) z1 += T * (dl1 - lnN);
        if (order >= 2) {
            const Complex d = dl1 - lnN;
            z2 += T * (d * d - dl2);
        }
    }
    return {z0, z1, z2};
}

} // namespace detail

// zeta(s) and derivatives. For Re s < 1/2 the functional equation
//   zeta(s) = 2 (2 pi)^{s-1} Gamma(1-s) sin(pi s / 2) zeta(1-s)
// is applied with the Gamma and sin factors combined in log space, so the
// exponentially large pieces cancel before exponentiation.
inline ZetaDerivs zeta_derivs(Complex s, int order = 2, const EvalParams& p = {}) {
    p.validate();
    if (s == Complex(1.0, 0.0)) throw PoleAtOne();
    if (std::abs(s) < 1e-12) {
        // exact expansion point; avoids the 0 * pole product in the reflection
        return {Complex(-0.5, 0.0), Complex(-0.91893853320467274178, 0.0),
                Complex(-2.0063564559085848512, 0.0)};
    }
    if (s.real() >= 0.5) return detail::zeta_em_direct(s, order, p);

    const Complex u = 1.0 - s;
    const ZetaDerivs zu = detail::zeta_em_direct(u, order, p);
    const Complex logF = kLog2 + (s - 1.0) * kLog2Pi + lgamma_complex(u) +
                         log_sin_complex(0.5 * kPi * s);
    const Complex F = std::exp(logF);
    ZetaDerivs out;
    out.z = F * zu.z;
    if (order >= 1) {
        const Complex dlogF = kLog2Pi - digamma_complex(u) + 0.5 * kPi * cot_complex(0.5 * kPi * s);
        const Complex F1 = F * dlogF;
        out.z1 = F1 * zu.z - F * zu.z1;
        if (order >= 2) {
            const Complex d2logF = trigamma_complex(u) -
                                   0.25 * kPi * kPi * inv_sin_sq_complex(0.5 * kPi * s);
            const Complex F2 = F * (dlogF * dlogF + d2logF);
            out.z2 = F2 * zu.z - 2.0 * F1 * zu.z1 + F * zu.z2;
        }
    }
    return out;
}

inline Complex zeta_em(Complex s, const EvalParams& p = {}) { return zeta_derivs(s, 0, p).z; }
inline Complex zeta_prime(Complex s, const EvalParams& p = {}) { return zeta_derivs(s, 1, p).z1; }
inline Complex zeta_second(Complex s, const EvalParams& p = {}) { return zeta_derivs(s, 2, p).z2; }

// ---------------------------------------------------------------------------
// Hasse/Sondow globally convergent series,
//   zeta(s) = 1/(1-2^{1-s}) sum_n 2^{-(n+1)} sum_k (-1)^k C(n,k) (k+1)^{-s}.
// ---------------------------------------------------------------------------

inline Complex zeta_hasse(Complex s, int n_max, const EvalParams& = {}) {
    if (s == Complex(1.0, 0.0)) throw PoleAtOne();
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    if (n_max > 1000) throw DomainError("n_max beyond double-precision binomial range");

    const Complex den = 1.0 - std::exp((1.0 - s) * kLog2);
    if (std::abs(den) < 1e-12) {
        if (std::abs(s - 1.0) < 1e-6) throw PoleAtOne();
        throw DegenerateDenominator();
    }

    // (k+1)^{-s} reused across the outer sum
    std::vector<Complex> pw(static_cast<std::size_t>(n_max) + 1);
    for (int k = 0; k <= n_max; ++k) {
        pw[static_cast<std::size_t>(k)] = std::exp(-s * std::log(static_cast<double>(k + 1)));
    }

    Complex acc(0.0, 0.0);
    for (int n = 0; n <= n_max; ++n) {
        Complex inner(0.0, 0.0);
        double binom = 1.0;
        for (int k = 0; k <= n; ++k) {
            inner += (k % 2 == 0 ? binom : -binom) * pw[static_cast<std::size_t>(k)];
            binom = binom * static_cast<double>(n - k) / static_cast<double>(k + 1);
        }
        acc += std::ldexp(1.0, -(n + 1)) * inner;
    }
    return acc / den;
}

// ---------------------------------------------------------------------------
// Riemann-Siegel theta, asymptotic series through the T^{-5} term.
// ---------------------------------------------------------------------------

inline double theta_rs(double T) {
    if (T < 10.0) throw DomainError("theta_rs requires T >= 10");
    const double T3 = T * T * T;
    return 0.5 * T * std::log(T / (2.0 * kPi)) - 0.5 * T - kPi / 8.0 + 1.0 / (48.0 * T) +
           7.0 / (5760.0 * T3) + 31.0 / (80640.0 * T3 * T * T);
}

// psi(1/2 + n) = 2 h_n - C - 2 log 2, h_n = sum_{j<=n} 1/(2j-1)
inline double digamma_half(int n) {
    if (n < 0) throw DomainError("digamma_half requires n >= 0");
    double h = 0.0;
    for (int j = 1; j <= n; ++j) h += 1.0 / static_cast<double>(2 * j - 1);
    return 2.0 * h - kEulerC - 2.0 * kLog2;
}

// ---------------------------------------------------------------------------
// Overflow-free kernels. sinh(x g)/sinh(pi g) = e^{(x-pi)g} (1-e^{-2xg})/(1-e^{-2pi g});
// the naive ratio overflows once g exceeds ~230.
// ---------------------------------------------------------------------------

inline double kernel_sinh_ratio(double x, double gamma) {
    return std::exp((x - kPi) * gamma) * std::expm1(-2.0 * x * gamma) /
           std::expm1(-2.0 * kPi * gamma);
}

inline double kernel_cosh_ratio(double x, double gamma) {
    return std::exp((x - kPi) * gamma) * (1.0 + std::exp(-2.0 * x * gamma)) /
           (-std::expm1(-2.0 * kPi * gamma));
}

// ---------------------------------------------------------------------------
// zeta'/zeta at half-integers n + 1/2.
//
// For n >= 3 the Mangoldt-weighted Dirichlet series -sum Lambda(m) m^{-(n+1/2)}
// reaches ~1e-13 with a cutoff below 1e5. At n = 1, 2 the series converges
// like M^{1/2-n} and cannot reach the accuracy the identity evaluators need,
// so those two entries come from the term-differentiated Euler-Maclaurin
// ratio instead.
// ---------------------------------------------------------------------------

namespace detail {

// log p when m = p^k, else 0; trial division
inline double mangoldt_of(long m) {
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
        }
    }
    return m > 1 ? std::log(static_cast<double>(m)) : 0.0;
}

inline double lambda_series_halfint(int n) {
    const double s = static_cast<double>(n) + 0.5;
    double acc = 0.0;
    for (long m = 2; m <= 200000; ++m) {
        const double lg = mangoldt_of(m);
        if (lg == 0.0) continue;
        const double term = lg * std::pow(static_cast<double>(m), -s);
        if (term < 1e-16) break;
        acc += term;
    }
    return -acc;
}

inline const std::array<double, 65>& logderiv_halfint_table() {
    static const std::array<double, 65> table = [] {
        std::array<double, 65> t{};
        EvalParams p;
        for (int n = 1; n <= 2; ++n) {
            const Complex s(static_cast<double>(n) + 0.5, 0.0);
            const ZetaDerivs d = zeta_derivs(s, 1, p);
            t[static_cast<std::size_t>(n)] = (d.z1 / d.z).real();
        }
        for (int n = 3; n <= 64; ++n) t[static_cast<std::size_t>(n)] = lambda_series_halfint(n);
        return t;
    }();
    return table;
}

} // namespace detail

inline double logderiv_halfint(int n) {
    if (n < 1) throw DomainError("logderiv_halfint requires n >= 1");
    if (n <= 64) return detail::logderiv_halfint_table()[static_cast<std::size_t>(n)];
    return detail::lambda_series_halfint(n);  // only m = 2, 3 survive the cutoff
}

} // namespace zetasum
