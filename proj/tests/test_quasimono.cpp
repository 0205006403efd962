#include "support.hpp"

#include "cgeo/error.hpp"
#include "cgeo/quasimono.hpp"

#include <doctest.h>

using namespace cgeo;
using cgeo::testing::rq;
using cgeo::testing::sq;

namespace {

GeodesicSpec step1() {
    return GeodesicSpec(Decomposition({Rot{Turn(rq(4, 3) - sq(2, 1, 2))}, Rot{Turn(sq(2, 1, 2))}, N1Plus{-1}}), 4, 0);
}

GeodesicSpec single(int i1) { return GeodesicSpec(Decomposition({Rot{Turn(sq(2, 1, 2))}}), 2, i1); }

std::int64_t m1_oracle(const GeodesicSpec& s, std::int64_t threshold, std::int64_t scan) {
    std::int64_t last = 0;
    for (std::int64_t m = 1; m <= scan; ++m)
        if (chi_c(s, m) < threshold) last = m;
    return last + 1;
}

}  // namespace

TEST_CASE("chi_c") {
    CHECK(chi_c(step1(), 3) == 0);
    CHECK(chi_c(single(1), 2) == 2);
    GeodesicSpec neg(Decomposition({Rot{Turn(sq(2) - rq(7, 5))}, Rot{Turn(sq(2) - rq(7, 5))}}), 3, 0);
    CHECK_THROWS_AS(chi_c(neg, 1), Error);
}

TEST_CASE("m1 is the last crossing of the threshold") {
    CHECK(m1(single(1)) == 9);
    CHECK(m1(single(1)) == m1_oracle(single(1), 11, 500));
    CHECK(m1(step1()) == m1_oracle(step1(), 20, 1000));
}

TEST_CASE("alpha and beta minima") {
    AlphaBeta ab = alpha_beta(single(1), {0}, 3);
    // {m sqrt2/2} for m = 1, 2, 3 is smallest at m = 3
    CHECK(ab.alpha == sq(2, 3, 2) - rq(2));
    CHECK_FALSE(ab.beta);
    GeodesicSpec two(Decomposition({Rot{Turn(sq(2, 1, 2))}, Rot{Turn(sq(3) - rq(1))}}), 3, 2);
    AlphaBeta ab2 = alpha_beta(two, {0}, 3);
    REQUIRE(ab2.beta);
    ExactScalar b = sq(3) - rq(1);
    for (long m = 2; m <= 3; ++m) b = std::min(b, frac_exact((sq(3) - rq(1)) * rq(m)));
    CHECK(*ab2.beta == b);
}

TEST_CASE("certificate for a completely non-degenerate geodesic") {
    GeodesicSpec s(Decomposition({Rot{Turn(sq(2) - rq(1))}, Rot{Turn(sq(3) - rq(1))}, Hyp{1}}), 4, 2);
    auto cert = certificate(s, make_rational(1, 8), 1000000);
    REQUIRE(cert);
    CHECK(cert->A == 2);
    CHECK(cert->K1 == s.i1() + 2 * cert->A - 2);
    CHECK(cert->K2 == s.i1() - (2 * cert->A - 2));
    CertReport rep = verify_certificate(s, *cert, 10 * cert->T);
    CHECK(rep.ok());
    CHECK(max_jump(s, *cert) == 4);
}

TEST_CASE("rationally dependent pair forces one coordinate") {
    auto cert = certificate(step1(), make_rational(1, 8), 1000000);
    REQUIRE(cert);
    CHECK(cert->A == 1);
    CHECK(verify_certificate(step1(), *cert, 10 * cert->T).ok());
    CHECK_THROWS_AS(max_jump(step1(), *cert), Error);
}

TEST_CASE("maximal jump") {
    auto c1 = certificate(single(1), make_rational(1, 8), 100000);
    REQUIRE(c1);
    CHECK(max_jump(single(1), *c1) == 2);
    GeodesicSpec hyp(Decomposition({Rot{Turn(sq(2, 1, 2))}, Hyp{1}}), 3, 1);
    auto c2 = certificate(hyp, make_rational(1, 8), 100000);
    REQUIRE(c2);
    CHECK(max_jump(hyp, *c2) == 2);
    // Two independent turns with an odd index need the h_- block, which adds nothing to the jump.
    GeodesicSpec odd(Decomposition({Rot{Turn(sq(2) - rq(1))}, Rot{Turn(sq(3) - rq(1))}, Hyp{-1}}), 4, 1);
    auto c3 = certificate(odd, make_rational(1, 8), 1000000);
    REQUIRE(c3);
    CHECK(c3->A == 2);
    CHECK(max_jump(odd, *c3) == 3);
    CHECK(odd.index(c3->T + 1) - odd.index(c3->T) == 3);
}

TEST_CASE("verification below T only checks the lower side") {
    auto cert = certificate(single(1), make_rational(1, 8), 100000);
    REQUIRE(cert);
    CertReport rep = verify_certificate(single(1), *cert, cert->T);
    CHECK(rep.ok());
    CHECK(rep.checked_to == cert->T);
}
