#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "zetasum/special.hpp"

using namespace zetasum;

namespace {

// test grid over the strip Re s in [-2,4], |Im s| <= 30, away from s = 1
std::vector<Complex> strip_grid() {
    std::vector<Complex> pts;
    for (double sigma : {-2.0, -1.0, -0.5, 0.5, 1.5, 2.0, 3.0, 4.0}) {
        for (double t : {0.5, 2.0, 7.5, 14.0, 22.0, 30.0}) {
            pts.emplace_back(sigma, t);
        }
    }
    for (double sigma : {-2.0, -0.5, 0.5, 2.0, 4.0}) pts.emplace_back(sigma, 0.0);
    return pts;
}

// continuous arg Gamma(1/4 + iT/2) - (T/2) log pi, the Stirling-route oracle
double theta_oracle(double T) {
    return lgamma_complex(Complex(0.25, 0.5 * T)).imag() - 0.5 * T * kLogPi;
}

} // namespace

TEST_CASE("zeta_em classical values", "[special]") {
    CHECK(std::abs(zeta_em(Complex(2, 0)) - Complex(kPi * kPi / 6.0, 0)) < 1e-12);
    CHECK(std::abs(zeta_em(Complex(0.5, 0)) - Complex(-1.4603545088095868129, 0)) < 1e-12);
    CHECK(std::abs(zeta_em(Complex(-1, 0)) - Complex(-1.0 / 12.0, 0)) < 1e-14);
    CHECK(std::abs(zeta_em(Complex(0, 0)) - Complex(-0.5, 0)) < 1e-14);
    // first zero, ordinate at the table's 9-digit precision
    CHECK(std::abs(zeta_em(Complex(0.5, 14.134725142))) < 1e-6);
    CHECK_THROWS_AS(zeta_em(Complex(1.0, 0.0)), PoleAtOne);
}

TEST_CASE("zeta_em matches reference values off the real axis", "[special]") {
    struct Row {
        Complex s, want;
    };
    const Row rows[] = {
        {{2, 3}, {0.79802198514627572062, -0.11374430805293850022}},
        {{-1.5, 7}, {0.8161767728365667735, 1.0196443720204429417}},
        {{0.5, 30}, {-0.12064228759004369991, -0.58369121476370628876}},
        {{-2, 10}, {3.5291481638788527979, 0.73469244636978995397}},
        {{3, -17}, {1.1222515480014339441, -0.10592321322278636856}},
    };
    for (const Row& r : rows) {
        CAPTURE(r.s);
        CHECK(std::abs(zeta_em(r.s) - r.want) < 1e-12);
    }
}

TEST_CASE("EvalParams validation", "[special]") {
    EvalParams p;
    p.em_terms = 5;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    p.em_bernoulli = 13;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    p.fd_step = 1e-3;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("conjugate symmetry of zeta and derivatives", "[special][property]") {
    for (const Complex& s : strip_grid()) {
        if (s.imag() == 0.0) continue;
        const ZetaDerivs a = zeta_derivs(s, 2);
        const ZetaDerivs b = zeta_derivs(std::conj(s), 2);
        CAPTURE(s);
        CHECK(std::abs(std::conj(b.z) - a.z) < 1e-12 * (1.0 + std::abs(a.z)));
        CHECK(std::abs(std::conj(b.z1) - a.z1) < 1e-12 * (1.0 + std::abs(a.z1)));
        CHECK(std::abs(std::conj(b.z2) - a.z2) < 1e-12 * (1.0 + std::abs(a.z2)));
    }
}

TEST_CASE("Hasse series agrees with Euler-Maclaurin on the strip", "[special][property]") {
    for (const Complex& s : strip_grid()) {
        CAPTURE(s);
        CHECK(std::abs(zeta_hasse(s, 200) - zeta_em(s)) < 1e-8);
    }
}

TEST_CASE("functional equation residual on the strip", "[special][property]") {
    // zeta(1-s) = 2 (2pi)^{-s} Gamma(s) cos(pi s/2) zeta(s), checked where
    // Gamma(s) is pole-free; 1-s then sweeps the reflected half-strip.
    for (double sigma : {0.5, 1.5, 2.0, 3.0, 4.0}) {
        for (double t : {0.5, 2.0, 10.0, 30.0}) {
            const Complex s(sigma, t);
            const Complex lhs = zeta_em(1.0 - s);
            const Complex rhs = 2.0 * std::exp(-s * kLog2Pi) * gamma_complex(s) *
                                std::cos(0.5 * kPi * s) * zeta_em(s);
            CAPTURE(s);
            CHECK(std::abs(lhs - rhs) < 1e-8);
        }
    }
}

TEST_CASE("zeta_prime agrees with the central finite difference", "[special][property]") {
    const EvalParams p;
    for (const Complex& s : strip_grid()) {
        const Complex d = zeta_prime(s, p);
        const Complex fd =
            (zeta_em(s + p.fd_step, p) - zeta_em(s - p.fd_step, p)) / (2.0 * p.fd_step);
        CAPTURE(s);
        CHECK(std::abs(d - fd) < 1e-5 * std::abs(d));
    }
}

TEST_CASE("zeta_prime at 1/2: closed form of the log-derivative", "[special]") {
    const ZetaDerivs d = zeta_derivs(Complex(0.5, 0.0), 1);
    const double ratio = (d.z1 / d.z).real();
    const double closed = 0.5 * kEulerC + 0.5 * kLog8Pi + 0.25 * kPi;
    CHECK(std::abs(ratio - closed) < 1e-8);
    CHECK(std::abs(ratio - 2.6860917096128327911) < 1e-10);
}

TEST_CASE("zeta_prime bounded away from zero at the first ordinate", "[special]") {
    // simple zero: the denominators of the section-4 reconstructions are safe
    CHECK(std::abs(zeta_prime(Complex(0.5, 14.134725142))) > 0.5);
}

TEST_CASE("zeta_second against second differences and references", "[special]") {
    EvalParams p;
    p.fd_step = 1e-4;
    for (const Complex s : {Complex(0.5, 0.0), Complex(2, 3), Complex(-1.5, 7)}) {
        const Complex d2 = zeta_second(s, p);
        const Complex fd = (zeta_em(s + p.fd_step, p) - 2.0 * zeta_em(s, p) +
                            zeta_em(s - p.fd_step, p)) /
                           (p.fd_step * p.fd_step);
        CAPTURE(s);
        CHECK(std::abs(d2 - fd) < 1e-4 * std::abs(d2));
    }
    CHECK(std::abs(zeta_second(Complex(0.5, 0)) - Complex(-16.008357013928661423, 0)) < 1e-10);
    // real on the real axis
    CHECK(std::abs(zeta_second(Complex(3.0, 0.0)).imag()) < 1e-12);
}

TEST_CASE("zeta_hasse edge cases", "[special]") {
    CHECK(std::abs(zeta_hasse(Complex(2, 0), 60) - Complex(1.6449340668482264365, 0)) < 1e-10);
    CHECK(std::abs(zeta_hasse(Complex(0, 0), 60) - Complex(-0.5, 0)) < 1e-13);
    CHECK(std::abs(zeta_hasse(Complex(-1, 0), 120) - zeta_em(Complex(-1, 0))) < 1e-9);
    CHECK_THROWS_AS(zeta_hasse(Complex(1, 0), 60), PoleAtOne);
    // 2^{1-s} = 1 away from s=1: s = 1 + 2 pi i k/log 2
    CHECK_THROWS_AS(zeta_hasse(Complex(1.0, 2.0 * kPi / kLog2), 60), DegenerateDenominator);
    CHECK_THROWS_AS(zeta_hasse(Complex(2, 0), 0), DomainError);
}

TEST_CASE("theta_rs against the Stirling-series oracle", "[special]") {
    // frozen high-precision values of arg Gamma(1/4+iT/2) - (T/2) log pi
    CHECK(std::abs(theta_rs(100.0) - 87.972165231787219625) < 1e-12);
    CHECK(std::abs(theta_rs(50.0) - 26.461366070161409647) < 1e-12);
    CHECK(std::abs(theta_rs(14.0) - (-1.7829487004161499064)) < 5e-12);
    CHECK(std::abs(theta_rs(10.0) - (-3.0670743962898952917)) < 5e-11);
    // live Stirling route
    for (double T : {12.0, 25.0, 300.0, 5000.0}) {
        CAPTURE(T);
        CHECK(std::abs(theta_rs(T) - theta_oracle(T)) < 1e-10);
    }
    // the asymptotic error falls fast with T (FP noise floors it near 1e-13)
    const double e10 = std::abs(theta_rs(10.0) - theta_oracle(10.0));
    const double e20 = std::abs(theta_rs(20.0) - theta_oracle(20.0));
    const double e1000 = std::abs(theta_rs(1000.0) - theta_oracle(1000.0));
    CHECK(e10 > 1e-11);
    CHECK(e20 < 1e-12);
    CHECK(e10 > 20.0 * e20);
    CHECK(e1000 < 5e-13);
    CHECK_THROWS_AS(theta_rs(5.0), DomainError);
}

TEST_CASE("digamma_half", "[special]") {
    CHECK(std::abs(digamma_half(0) - (-kEulerC - 2.0 * kLog2)) < 1e-14);
    CHECK(std::abs(digamma_half(0) - (-1.9635100260214234794)) < 1e-12);
    CHECK(std::abs(digamma_half(1) - (2.0 - kEulerC - 2.0 * kLog2)) < 1e-14);
    // psi(x+1) = psi(x) + 1/x recurrence from psi(1/2)
    double psi = -kEulerC - 2.0 * kLog2;
    for (int j = 0; j < 5; ++j) psi += 1.0 / (0.5 + j);
    CHECK(std::abs(digamma_half(5) - psi) < 1e-14);
    CHECK(std::abs(digamma_half(5) - 1.6110931485817511237) < 1e-12);
    CHECK_THROWS_AS(digamma_half(-1), DomainError);
}

TEST_CASE("stable kernels against frozen 50-digit values", "[special]") {
    // oracle arguments use the binary double closest to 3.14
    CHECK(kernel_sinh_ratio(kPi, 123.456) == 1.0);
    CHECK(std::abs(kernel_sinh_ratio(3.14, 100.0) / 0.8527700387553376119 - 1.0) < 1e-13);
    CHECK(std::abs(kernel_sinh_ratio(3.14, 10000.0) / 1.2111372000919331171e-7 - 1.0) < 1e-11);
    CHECK(std::abs(kernel_cosh_ratio(3.14, 14.134725) / 0.97773977751539587146 - 1.0) < 1e-13);
    CHECK(std::isfinite(kernel_sinh_ratio(3.14, 1e6)));
}

TEST_CASE("stable kernels equal the naive ratios below the overflow wall", "[special][property]") {
    for (double x : {0.5, 1.5, 2.5, 3.0, 3.14}) {
        for (double g : {0.5, 5.0, 14.134725, 50.0, 120.0, 200.0}) {
            const double naive_s = std::sinh(x * g) / std::sinh(kPi * g);
            const double naive_c = std::cosh(x * g) / std::sinh(kPi * g);
            CAPTURE(x, g);
            CHECK(std::abs(kernel_sinh_ratio(x, g) / naive_s - 1.0) < 1e-13);
            CHECK(std::abs(kernel_cosh_ratio(x, g) / naive_c - 1.0) < 1e-13);
        }
    }
}

TEST_CASE("kernel ordering and large-gamma coincidence", "[special][property]") {
    for (double g : {0.5, 2.0, 11.0, 40.0, 300.0}) {
        CHECK(kernel_cosh_ratio(3.14, g) >= kernel_sinh_ratio(3.14, g));
    }
    for (double g : {10.5, 20.0, 100.0}) {
        CHECK(std::abs(kernel_cosh_ratio(3.14, g) - kernel_sinh_ratio(3.14, g)) < 1e-12);
    }
}

TEST_CASE("logderiv_halfint", "[special]") {
    // n = 1, 2 ride the Euler-Maclaurin ratio; frozen mpmath references
    CHECK(std::abs(logderiv_halfint(1) - (-1.5052353557882679194)) < 1e-10);
    CHECK(std::abs(logderiv_halfint(2) - (-0.28874068555819309897)) < 1e-10);
    // n >= 3 comes from the Mangoldt series; cross the route against the
    // Euler-Maclaurin ratio
    for (int n : {3, 4, 5, 8}) {
        const ZetaDerivs d = zeta_derivs(Complex(n + 0.5, 0.0), 1);
        CAPTURE(n);
        CHECK(std::abs(logderiv_halfint(n) - (d.z1 / d.z).real()) < 1e-10);
    }
    // asymptotic -Lambda(2)/sqrt(2) 2^{-n} + O(3^{-n})
    const double lead = kLog2 / std::sqrt(2.0);
    CHECK(std::abs(logderiv_halfint(20) + lead / 1048576.0) < 2.0 * std::pow(3.0, -20.0));
    CHECK(std::abs(logderiv_halfint(20) * 1048576.0 - (-0.49032015758391775131)) < 1e-9);
    CHECK(std::abs(logderiv_halfint(30) * std::pow(2.0, 30) - (-0.49013237990974912621)) < 1e-7);
    CHECK(std::abs(logderiv_halfint(70) * std::pow(2.0, 70) + lead) < 1e-5);
    CHECK_THROWS_AS(logderiv_halfint(0), DomainError);
}

TEST_CASE("complex gamma helpers against frozen references", "[special]") {
    CHECK(std::abs(lgamma_complex(Complex(0.25, 50)) -
                   Complex(-78.598880432701842504, 145.20865952425722833)) < 1e-11);
    CHECK(std::abs(digamma_complex(Complex(0.25, 5)) -
                   Complex(1.6090205127143304554, 1.6209229399442998332)) < 1e-12);
    // trigamma via the recurrence psi'(z) - psi'(z+1) = 1/z^2
    const Complex z(0.75, 2.5);
    CHECK(std::abs(trigamma_complex(z) - trigamma_complex(z + 1.0) - 1.0 / (z * z)) < 1e-13);
}
