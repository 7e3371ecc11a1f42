#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "test_support.hpp"
#include "zetasum/arith.hpp"

using namespace zetasum;
using testsupport::arith1e6;

namespace {

// trial-factorization Mangoldt, the test-side ground truth
double mangoldt_by_factoring(long m) {
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
        }
    }
    return m > 1 ? std::log(static_cast<double>(m)) : 0.0;
}

} // namespace

TEST_CASE("build_table definitional values", "[arith]") {
    const ArithTable t = build_table(12);
    CHECK(t.mangoldt[8] == std::log(2.0));
    CHECK(t.mangoldt[12] == 0.0);
    CHECK(t.moebius[6] == 1);
    CHECK(t.moebius[4] == 0);
    CHECK(t.phi[12] == 4);

    const ArithTable t2 = build_table(2);
    CHECK(t2.mangoldt[2] == std::log(2.0));
    CHECK(t2.moebius[2] == -1);
    CHECK(t2.phi[2] == 1);

    CHECK_THROWS_AS(build_table(1), DomainError);
    CHECK_THROWS_AS(build_table(100000001L), CapacityExceeded);
}

TEST_CASE("Lambda is exactly log p at prime powers", "[arith][property]") {
    const ArithTable& t = arith1e6();
    for (long m = 2; m <= 10000; ++m) {
        if (t.mangoldt[static_cast<std::size_t>(m)] != mangoldt_by_factoring(m)) {
            FAIL("mangoldt mismatch at " << m);
        }
    }
}

TEST_CASE("moebius multiplicativity on coprime pairs", "[arith][property]") {
    const ArithTable& t = arith1e6();
    for (long a = 2; a <= 40; ++a) {
        for (long b = a + 1; b <= 900; b += 7) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(t.moebius[static_cast<std::size_t>(a * b)] ==
                  t.moebius[static_cast<std::size_t>(a)] * t.moebius[static_cast<std::size_t>(b)]);
        }
    }
}

TEST_CASE("phi satisfies sum_{d|n} phi(d) = n", "[arith][property]") {
    const ArithTable& t = arith1e6();
    for (long n = 1; n <= 2000; ++n) {
        long acc = 0;
        for (long d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            acc += t.phi[static_cast<std::size_t>(d)];
            if (d != n / d) acc += t.phi[static_cast<std::size_t>(n / d)];
        }
        if (acc != n) FAIL("phi divisor sum broke at " << n);
    }
}

TEST_CASE("phi bounds and prime values", "[arith][property]") {
    const ArithTable& t = arith1e6();
    for (long n = 2; n <= 100000; n += 13) {
        const double ratio = static_cast<double>(t.phi[static_cast<std::size_t>(n)]) / n;
        if (!(ratio > 0.0 && ratio <= 1.0)) FAIL("phi/n out of (0,1] at " << n);
    }
    for (long p : {2L, 3L, 5L, 101L, 9973L, 999983L}) {
        CHECK(t.phi[static_cast<std::size_t>(p)] == static_cast<std::uint32_t>(p - 1));
    }
}

TEST_CASE("Chebyshev and Mertens sanity", "[arith][property]") {
    const ArithTable& t = arith1e6();
    double psi = 0.0;
    long mertens = 0;
    long next_check = 1000;
    for (long n = 1; n <= t.n_max; ++n) {
        psi += t.mangoldt[static_cast<std::size_t>(n)];
        mertens += t.moebius[static_cast<std::size_t>(n)];
        if (n == next_check) {
            CAPTURE(n);
            CHECK(std::abs(psi - static_cast<double>(n)) <= 0.15 * static_cast<double>(n));
            if (n >= 100) CHECK(std::abs(static_cast<double>(mertens)) <= 0.5 * static_cast<double>(n));
            next_check *= 10;
        }
    }
}

TEST_CASE("at_real snaps to integers and zeroes elsewhere", "[arith]") {
    const ArithTable& t = arith1e6();
    CHECK(at_real(t, 4.0, ArithKind::Mangoldt) == std::log(2.0));
    CHECK(at_real(t, 4.0 + 5e-10, ArithKind::Mangoldt) == std::log(2.0));
    CHECK(at_real(t, 4.5, ArithKind::Mangoldt) == 0.0);
    CHECK(at_real(t, 4.5, ArithKind::Moebius) == 0.0);
    CHECK(at_real(t, 6.0, ArithKind::Mangoldt) == 0.0);
    CHECK(at_real(t, 6.0, ArithKind::Moebius) == 1.0);
    CHECK(at_real(t, 10.0, ArithKind::Phi) == 4.0);
    CHECK_THROWS_AS(at_real(t, 2e6, ArithKind::Phi), OutOfRange);
    CHECK_THROWS_AS(at_real(t, -3.0, ArithKind::Phi), OutOfRange);
}

TEST_CASE("weighted_psi_sqrt with the strict cutoff", "[arith]") {
    const ArithTable& t = arith1e6();
    CHECK(weighted_psi_sqrt(t, 2.0) == 0.0);
    CHECK(std::abs(weighted_psi_sqrt(t, 3.0) - kLog2 / std::sqrt(2.0)) < 1e-15);
    // n in {2,3,4,5,7,8,9}; frozen high-precision reference
    CHECK(std::abs(weighted_psi_sqrt(t, 10.0) - 3.5375028142662490437) < 1e-13);
    CHECK(weighted_psi_sqrt(t, 10.0) == weighted_psi_sqrt(t, 9.5));
}

TEST_CASE("mangoldt_dirichlet_tail", "[arith]") {
    CHECK(std::abs(mangoldt_dirichlet_tail(2.0, 1e-12) - 0.5699609930945328064) < 1e-6);
    // s=10: dominated by Lambda(2)/2^10
    CHECK(std::abs(mangoldt_dirichlet_tail(10.0, 1e-14) - (-(-0.0006963404452840204366))) < 1e-12);
    CHECK(std::abs(mangoldt_dirichlet_tail(10.0, 1e-14) - kLog2 / 1024.0) < 2.5e-5);
    // coarse eps keeps it finite (and here empty)
    CHECK(mangoldt_dirichlet_tail(2.0, 1.0) == 0.0);
    CHECK_THROWS_AS(mangoldt_dirichlet_tail(1.0, 1e-6), DomainError);
    CHECK_THROWS_AS(mangoldt_dirichlet_tail(2.0, -1.0), DomainError);
}
