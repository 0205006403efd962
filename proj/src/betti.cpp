#include "cgeo/betti.hpp"

#include "cgeo/error.hpp"

namespace cgeo {

namespace {

using Series = std::vector<std::int64_t>;

Series mul(const Series& a, const Series& b) {
    Series out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Series monomial(std::size_t len, int e, std::int64_t c = 1) {
    Series s(len, 0);
    if (e >= 0 && static_cast<std::size_t>(e) < len) s[e] = c;
    return s;
}

// a / (1 - t^e): running sum along residues mod e.
Series div_one_minus(Series a, int e) {
    for (std::size_t i = e; i < a.size(); ++i) a[i] += a[i - e];
    return a;
}

Series add(Series a, const Series& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Rational frac(const Rational& q) { return frac_rational(q); }
Rational R(std::int64_t n, std::int64_t d = 1) { return make_rational(static_cast<long>(n), static_cast<long>(d)); }
Integer fl(const Rational& q) { return floor_rational(q); }

}  // namespace

void require_valid_dh(int d, int h) {
    if (d < 2 || h < 1) fail(ErrorCode::precondition, "need d >= 2 and h >= 1");
    if (d % 2 == 1 && h != 1) fail(ErrorCode::precondition, "odd d forces h = 1");
}

int big_d(int d, int h) { return d * (h + 1) - 2; }

BettiTable betti_series(int d, int h, int q_max) {
    require_valid_dh(d, h);
    if (q_max < 0) fail(ErrorCode::precondition, "q_max must be >= 0");
    std::size_t len = static_cast<std::size_t>(q_max) + 1;
    Series s;
    if (d % 2 == 0) {
        int D = big_d(d, h);
        Series a = div_one_minus(monomial(len, 0), 2);
        Series b = div_one_minus(monomial(len, D), D);
        Series g = div_one_minus(add(monomial(len, 0), monomial(len, d * h, -1)), d);
        s = mul(mul(monomial(len, d - 1), add(a, b)), g);
    } else {
        // t^{d-1} (1/(1-t^2) + t^{d-1}/(1-t^{d-1}))
        Series a = div_one_minus(monomial(len, 0), 2);
        Series b = div_one_minus(monomial(len, d - 1), d - 1);
        s = mul(monomial(len, d - 1), add(a, b));
    }
    return BettiTable{d, h, q_max, std::move(s)};
}

std::int64_t betti_closed(int d, int h, int q) {
    require_valid_dh(d, h);
    if (q < 0) return 0;
    if (d % 2 == 1) {
        bool in_k = q % (d - 1) == 0 && q / (d - 1) >= 2;
        if (in_k) return 2;
        return (q >= d - 1 && (q - (d - 1)) % 2 == 0) ? 1 : 0;
    }
    if (h == 1) {
        bool in_k = q % (d - 1) == 0 && q / (d - 1) >= 3 && (q / (d - 1)) % 2 == 1;
        if (in_k) return 2;
        return (q >= d - 1 && (q - (d - 1)) % 2 == 0) ? 1 : 0;
    }
    if (q % 2 == 0 || q <= d - 2) return 0;
    int x = q - (d - 1);
    if (x < (h - 1) * d) return x / d + 1;
    // Omega(d,h): x = iD + jd with i >= 1 and 0 <= j <= h-1.
    int D = big_d(d, h);
    int i = x / D, rem = x % D;
    bool omega = i >= 1 && rem % d == 0 && rem / d <= h - 1;
    return omega ? h + 1 : h;
}

BettiTable betti_table(int d, int h, int q_max) {
    require_valid_dh(d, h);
    BettiTable t{d, h, q_max, {}};
    for (int q = 0; q <= q_max; ++q) t.values.push_back(betti_closed(d, h, q));
    return t;
}

Rational B_constant(int d, int h) {
    require_valid_dh(d, h);
    if (d % 2 == 0) return make_rational(-h * (h + 1) * d, 2 * d * (h + 1) - 4);
    return make_rational(d + 1, 2 * d - 2);
}

Rational epsilon_dh(int d, int h, std::int64_t k) {
    require_valid_dh(d, h);
    if (d % 2 == 1) return frac(R(k, d - 1)) + frac(R(k, 2));
    int D = big_d(d, h);
    Rational x = frac(R(k - (d - 1), D));
    return frac(R(D, h * d) * x) - (R(2, d) + R(d - 2, h * d)) * x - R(h) * frac(R(D, 2) * x) - frac(R(D, d) * x);
}

PartialSum partial_sum(int d, int h, std::int64_t k, bool signed_sum) {
    require_valid_dh(d, h);
    PartialSum ps;
    if (d % 2 == 1 || h == 1) {
        if (k < d - 1) fail(ErrorCode::precondition, "partial sum needs k >= d-1");
    } else if (k < static_cast<std::int64_t>(h) * d - 1) {
        fail(ErrorCode::precondition, "partial sum needs k >= hd-1");
    }
    std::int64_t direct = 0;
    for (std::int64_t q = 0; q <= k; ++q) direct += betti_closed(d, h, static_cast<int>(q));
    ps.direct = direct;
    Rational closed;
    bool agree = true;
    if (d % 2 == 1) {
        closed = Rational(fl(R(k, d - 1)) + fl(R(k, 2))) - R(d - 1, 2);
        ps.epsilon = epsilon_dh(d, h, k);
        Rational alt = R(k * (d + 1), 2 * (d - 1)) - R(d - 1, 2) - ps.epsilon;
        agree = alt == closed;
        ps.epsilon_in_bound = sgn(ps.epsilon) >= 0 && ps.epsilon < R(3, 2) - R(1, 2 * (d - 1));
    } else if (h == 1) {
        Integer c = fl(R(k, d - 1));
        Rational half_c(c + 1, 2);
        half_c.canonicalize();
        closed = Rational(fl(half_c) + fl(R(k + 1, 2))) - R(d, 2);
        Rational third = R(k * d, 2 * (d - 1)) - R(d - 2, 2) - frac(half_c) - frac(R(k + 1, 2)) -
                         R(1, 2) * frac(R(k, d - 1));
        // The general-h form specialises to h = 1 with its own correction term.
        ps.epsilon = epsilon_dh(d, 1, k);
        Rational general = R(2 * d, 2 * big_d(d, 1)) * R(k - (d - 1)) + 1 + ps.epsilon;
        Rational remark = R(k * d, 2 * (d - 1)) - R(d - 2, 2) - (frac(R(k - (d - 1), 2 * (d - 1))) + frac(R(k - (d - 1), 2)));
        agree = third == closed && general == closed && remark == closed;
        ps.epsilon_in_bound = ps.epsilon > R(-2) && sgn(ps.epsilon) <= 0;
    } else {
        int D = big_d(d, h);
        ps.epsilon = epsilon_dh(d, h, k);
        closed = R(h * (h + 1) * d, 2 * D) * R(k - (d - 1)) - R(h * (h - 1) * d, 4) + 1 + ps.epsilon;
        Rational upper = R(h) * (R(D, 2) + 1) * R(k - (d - 1), D) - R(h * (h - 1) * d, 4) + 1 +
                         frac(R(D, h * d) * frac(R(k - (d - 1), D)));
        Rational strict = R(h) * (R(D, 2) + 1) * R(k - (d - 1), D) - R(h * (h - 1) * d, 4) + 2;
        agree = closed <= upper && closed < strict;
        ps.epsilon_in_bound = ps.epsilon > R(-(h + 2)) && ps.epsilon < R(1);
    }
    if (signed_sum && d % 2 == 0) {
        ps.direct = -direct;
        closed = -closed;
    }
    ps.closed = closed;
    ps.matches = agree && Rational(ps.direct) == closed;
    return ps;
}

OddDegreeSum odd_degree_sum(int d, int h) {
    require_valid_dh(d, h);
    if (d % 2 == 1) fail(ErrorCode::precondition, "odd-degree sum is stated for even d");
    std::int64_t s = 0;
    for (int q = 1; q <= d * h - 3; q += 2) s += betti_closed(d, h, q);
    return OddDegreeSum{s, make_rational(d * h * (h - 1), 4)};
}

}  // namespace cgeo
