#include "support.hpp"

#include "cgeo/error.hpp"
#include "cgeo/exact.hpp"

#include <doctest.h>

#include <random>

using namespace cgeo;
using cgeo::testing::rq;
using cgeo::testing::sq;

namespace {

// Integer square root by bisection, independent of the library.
Integer isqrt(const Integer& n) {
    Integer lo = 0, hi = n + 1;
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (mid * mid <= n) lo = mid;
        else hi = mid;
    }
    return lo;
}

// floor(a + b sqrt(n)) for integer a and rational b via |b| sqrt(n) = sqrt(num^2 n) / den.
Integer floor_oracle(const Integer& a, const Rational& b, std::uint64_t n) {
    Integer num = abs(b.get_num()), den = b.get_den();
    Integer rad = num * num * Integer(static_cast<unsigned long>(n));
    Integer r = isqrt(rad);
    bool exact = r * r == rad;
    Integer fl = r / den;  // floor of |b| sqrt(n)
    if (sgn(b) >= 0) return a + fl;
    bool integral = exact && r % den == 0;
    return a - (integral ? fl : fl + 1);
}

}  // namespace

TEST_CASE("floor, ceil and varphi on simple values") {
    CHECK(floor_exact(rq(3, 2)) == 1);
    CHECK(floor_exact(rq(-1, 2)) == -1);
    CHECK(floor_exact(sq(2)) == 1);
    CHECK(varphi_exact(rq(7)) == 0);
    CHECK(varphi_exact(rq(1, 2)) == 1);
    CHECK(ceil_exact(sq(2)) == 2);
    CHECK(varphi_exact(sq(2)) == 1);
}

TEST_CASE("compare orders exactly") {
    CHECK(compare(rq(1, 3), rq(1, 3)) == Ordering::equal);
    CHECK(compare(sq(2), rq(3, 2)) == Ordering::less);
    CHECK(compare(rq(4, 3) - sq(2, 1, 2), sq(2, 1, 2)) == Ordering::less);
    CHECK(compare(sq(2) + sq(3), sq(5) + rq(1)) == Ordering::less);
}

TEST_CASE("floor agrees with an integer square root oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> a(-50, 50), bn(-40, 40), bd(1, 13);
    const std::uint64_t rads[] = {2, 3, 5, 6, 7, 10, 13, 1000003};
    for (int it = 0; it < 3000; ++it) {
        long an = a(rng), num = bn(rng), den = bd(rng);
        if (num == 0) continue;
        std::uint64_t n = rads[it % std::size(rads)];
        ExactScalar x = rq(an) + ExactScalar::sqrt_of(n, make_rational(num, den));
        CHECK(floor_exact(x) == floor_oracle(Integer(an), make_rational(num, den), n));
    }
}

TEST_CASE("floor bracket and ceil relation hold on random scalars") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 500; ++it) {
        ExactScalar x = cgeo::testing::random_irrational_turn(rng) * make_rational(static_cast<long>(it % 17) - 8, 3) +
                        sq(3, static_cast<long>(it % 5), 7);
        Integer f = floor_exact(x);
        CHECK(ExactScalar(Rational(f)) <= x);
        CHECK(x < ExactScalar(Rational(f + 1)));
        CHECK(ceil_exact(x) - f == varphi_exact(x));
        CHECK(ceil_exact(x) == -floor_exact(-x));
        if (!x.is_rational())
            for (long m = 1; m <= 20; ++m) CHECK_FALSE(frac_exact(x * rq(m)).is_zero());
    }
}

TEST_CASE("ring laws on random scalars") {
    std::mt19937_64 rng(7);
    auto rnd = [&] {
        std::uniform_int_distribution<long> c(-9, 9), d(1, 9);
        ExactScalar x = rq(c(rng), d(rng));
        for (std::uint64_t n : {2, 3, 6}) x += ExactScalar::sqrt_of(n, make_rational(c(rng), d(rng)));
        return x;
    };
    for (int it = 0; it < 300; ++it) {
        ExactScalar a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK(a * inverse(a) == rq(1));
    }
}

TEST_CASE("canonical form folds square factors and cancels terms") {
    CHECK(ExactScalar::sqrt_of(8) == sq(2, 2));
    CHECK(ExactScalar::sqrt_of(9) == rq(3));
    CHECK((sq(6) - sq(2) * sq(3)).is_zero());
    CHECK(sq(2) * sq(2) == rq(2));
}

TEST_CASE("text form round-trips and rejects junk") {
    for (const char* s : {"4/3 + (-1/2)r{2}", "0", "-7/3", "(1/2)r{5} + -1/2", "r{2} - 1", "2r{3}"}) {
        ExactScalar x = ExactScalar::parse(s);
        CHECK(ExactScalar::parse(x.str()) == x);
    }
    CHECK(ExactScalar::parse("4/3 + (-1/2)r{2}") == rq(4, 3) - sq(2, 1, 2));
    CHECK(ExactScalar::parse("r{8}") == sq(2, 2));
    CHECK_THROWS_AS(ExactScalar::parse("1.5"), Error);
    CHECK_THROWS_AS(ExactScalar::parse("1/0"), Error);
    CHECK_THROWS_AS(ExactScalar::parse("1/2 +"), Error);
}

TEST_CASE("turns live in (0,1) without 1/2") {
    CHECK_NOTHROW(Turn(rq(1, 3)));
    CHECK_THROWS_AS(Turn(rq(1, 2)), Error);
    CHECK_THROWS_AS(Turn(rq(0)), Error);
    CHECK_THROWS_AS(Turn(sq(2)), Error);
    CHECK(Turn(rq(2, 6)).denominator() == 3);
    CHECK(Turn(sq(2, 1, 2)).denominator() == 0);
}

TEST_CASE("scaled floors match floor_exact") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        ExactScalar x = cgeo::testing::random_irrational_turn(rng) + sq(5, 1, 3);
        ScaledScalar s(x);
        for (long m = 1; m <= 200; m += 7) CHECK(s.floor_times(Integer(m)) == floor_exact(x * rq(m)));
    }
}
