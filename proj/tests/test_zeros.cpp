#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include "test_support.hpp"
#include "zetasum/zeros.hpp"

using namespace zetasum;
using testsupport::zeros10k;

TEST_CASE("parse_zeros on the leading Odlyzko-format lines", "[zeros]") {
    std::istringstream in("14.134725142\n21.022039639\n");
    const ZeroTable t = parse_zeros(in);
    REQUIRE(t.count() == 2);
    CHECK(t.ordinates[0] == 14.134725142);
    CHECK(t.ordinates[1] == 21.022039639);
}

TEST_CASE("parse_zeros error paths", "[zeros]") {
    {
        std::istringstream in("");
        CHECK_THROWS_AS(parse_zeros(in), EmptyInput);
    }
    {
        std::istringstream in("\n   \n\n");
        CHECK_THROWS_AS(parse_zeros(in), EmptyInput);
    }
    {
        std::istringstream in("14.1\n13.9\n");
        try {
            parse_zeros(in);
            FAIL("expected NonMonotonic");
        } catch (const NonMonotonic& e) {
            CHECK(e.line_no == 2);
        }
    }
    {
        std::istringstream in("14.2\nfourteen\n");
        try {
            parse_zeros(in);
            FAIL("expected NonNumericLine");
        } catch (const NonNumericLine& e) {
            CHECK(e.line_no == 2);
        }
    }
    {
        std::istringstream in("13.0\n14.5\n");
        CHECK_THROWS_AS(parse_zeros(in), InvalidOrdinate);
    }
}

TEST_CASE("parse_zeros tolerates CRLF, whitespace and blank lines", "[zeros]") {
    std::istringstream in("  14.134725142 \r\n\r\n21.022039639\r\n");
    const ZeroTable t = parse_zeros(in);
    REQUIRE(t.count() == 2);
    CHECK(t.ordinates[1] == 21.022039639);
}

TEST_CASE("parse round-trips its own serialization", "[zeros][property]") {
    const ZeroTable& t = zeros10k();
    std::ostringstream out;
    serialize_zeros(t, out);
    std::istringstream in(out.str());
    const ZeroTable t2 = parse_zeros(in);
    REQUIRE(t2.count() == t.count());
    for (std::size_t i = 0; i < t.count(); i += 997) {
        CHECK(t2.ordinates[i] == t.ordinates[i]);
    }
    CHECK(t2.ordinates.back() == t.ordinates.back());
}

TEST_CASE("count_below on the bundled table", "[zeros]") {
    const ZeroTable& t = zeros10k();
    REQUIRE(t.count() == 10000);
    CHECK(count_below(t, 100.0) == 29);
    CHECK(count_below(t, 14.0) == 0);
    CHECK(count_below(t, 14.134725142) == 1);  // boundary is inclusive
    CHECK_THROWS_AS(count_below(t, 1e9), OutOfRange);
}

TEST_CASE("count_below is monotone in T", "[zeros][property]") {
    const ZeroTable& t = zeros10k();
    std::mt19937 rng(20260809);
    std::uniform_real_distribution<double> dist(14.0, t.ordinates.back());
    for (int i = 0; i < 200; ++i) {
        double a = dist(rng), b = dist(rng);
        if (a > b) std::swap(a, b);
        CHECK(count_below(t, a) <= count_below(t, b));
    }
}

TEST_CASE("backlund_estimate", "[zeros]") {
    const ZeroTable& t = zeros10k();
    CHECK(std::abs(backlund_estimate(100.0) - 29.0) < 1.0);
    CHECK(backlund_estimate(14.0) < 1.0);
    CHECK_THROWS_AS(backlund_estimate(5.0), DomainError);
    // the omitted arg-zeta term stays well inside +-2
    for (double T : {50.0, 100.0, 200.0, 500.0, 1000.0}) {
        CAPTURE(T);
        CHECK(std::abs(backlund_estimate(T) - static_cast<double>(count_below(t, T))) <= 2.0);
    }
}

TEST_CASE("truncated view", "[zeros]") {
    const ZeroTable& t = zeros10k();
    const ZeroTable t5 = truncated(t, 5);
    REQUIRE(t5.count() == 5);
    CHECK(t5.ordinates[4] == t.ordinates[4]);
    CHECK(truncated(t, 1 << 30).count() == t.count());
    CHECK_THROWS_AS(truncated(t, 0), DomainError);
}

TEST_CASE("bundled table invariants", "[zeros][property]") {
    const ZeroTable& t = zeros10k();
    CHECK(t.ordinates.front() > 14.0);
    for (std::size_t i = 1; i < t.count(); ++i) {
        if (!(t.ordinates[i] > t.ordinates[i - 1])) {
            FAIL("ordering violated at index " << i);
        }
    }
    // known landmarks
    CHECK(std::abs(t.ordinates[99] - 236.524229666) < 1e-6);
    CHECK(std::abs(t.ordinates.back() - 9877.782654) < 1e-5);
}
