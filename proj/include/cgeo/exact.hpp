#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cgeo {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

// Rational plus a rational combination of square roots of distinct
// square-free integers >= 2. Terms are kept sorted by radicand with nonzero
// coefficients, so two scalars are equal iff they are structurally equal.
class ExactScalar {
public:
    struct Term {
        Rational coeff;
        std::uint64_t radicand;
    };

    ExactScalar() = default;
    ExactScalar(long v) : base_(v) {}
    ExactScalar(const Rational& q) : base_(q) {}

    // coeff * sqrt(n), n >= 1 arbitrary; square factors are pulled out.
    static ExactScalar sqrt_of(std::uint64_t n, const Rational& coeff = 1);

    const Rational& base() const { return base_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_rational() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty() && sgn(base_) == 0; }

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator*=(const Rational& q);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator*(ExactScalar a, const Rational& q) { return a *= q; }
    friend ExactScalar operator*(const Rational& q, ExactScalar a) { return a *= q; }
    // Division only by rationals; the field inverse is never needed.
    friend ExactScalar operator/(ExactScalar a, const Rational& q);

    friend bool operator==(const ExactScalar& a, const ExactScalar& b);
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b);

    // Text form: "p/q" or "p/q + (a/b)r{n} + ...". Whitespace is ignored on
    // input, "r{n}" alone means coefficient 1 and integers may omit "/1".
    std::string str() const;
    static ExactScalar parse(std::string_view text);

private:
    void add_term(const Rational& c, std::uint64_t n);

    Rational base_{0};
    std::vector<Term> terms_;
};

// Field inverse by successive conjugation; x must be nonzero.
ExactScalar inverse(const ExactScalar& x);
ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);

int sign(const ExactScalar& x);
Integer floor_exact(const ExactScalar& x);
Integer ceil_exact(const ExactScalar& x);
ExactScalar frac_exact(const ExactScalar& x);
int varphi_exact(const ExactScalar& x);

enum class Ordering { less, equal, greater };
Ordering compare(const ExactScalar& x, const ExactScalar& y);

Integer floor_rational(const Rational& q);
Integer ceil_rational(const Rational& q);
Rational frac_rational(const Rational& q);

// Rotation number in (0,1) \ {1/2}.
class Turn {
public:
    explicit Turn(ExactScalar v);
    const ExactScalar& value() const { return v_; }
    bool is_rational() const { return v_.is_rational(); }
    // Denominator of a rational turn; 0 for irrational turns.
    Integer denominator() const;
    friend bool operator==(const Turn& a, const Turn& b) { return a.v_ == b.v_; }

private:
    ExactScalar v_;
};

// Floors and fractional-part tests of m*x for many m without rebuilding
// big rationals: x is held as (A + sum B_i sqrt(n_i)) / Q over the integers.
class ScaledScalar {
public:
    explicit ScaledScalar(const ExactScalar& x);
    Integer floor_times(const Integer& m) const;
    // Sign of m*x - k - e for integer m, k and rational e.
    int sign_shifted(const Integer& m, const Integer& k, const Rational& e) const;
    bool is_rational() const { return b_.empty(); }

private:
    Integer q_;
    Integer a_;
    std::vector<std::pair<Integer, std::uint64_t>> b_;
};

}  // namespace cgeo
