#include "cgeo/exact.hpp"

#include "cgeo/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace cgeo {

Rational make_rational(long num, long den) {
    if (den == 0) fail(ErrorCode::invalid, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_rational(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_rational(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational frac_rational(const Rational& q) { return q - Rational(floor_rational(q)); }

namespace {

// Largest s with s^2 | n, and the square-free cofactor.
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t n) {
    std::uint64_t s = 1, t = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) t *= p;
    }
    return {s, t * n};
}

// floor(sqrt(n) * 2^bits), cached per thread.
const Integer& sqrt_floor_scaled(std::uint64_t n, unsigned bits) {
    thread_local std::map<std::pair<std::uint64_t, unsigned>, Integer> cache;
    auto key = std::make_pair(n, bits);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Integer v = n;
    v <<= 2 * bits;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
    return cache.emplace(key, std::move(s)).first->second;
}

constexpr unsigned kStartBits = 64;
constexpr unsigned kMaxBits = 1u << 22;

// Encloses 2^bits * (a + sum b_i sqrt(n_i)) strictly in (lo, hi).
void enclose(const Integer& a, const std::vector<std::pair<Integer, std::uint64_t>>& b, unsigned bits,
             Integer& lo, Integer& hi) {
    lo = a;
    lo <<= bits;
    hi = lo;
    for (const auto& [c, n] : b) {
        const Integer& s = sqrt_floor_scaled(n, bits);
        if (sgn(c) > 0) {
            lo += c * s;
            hi += c * (s + 1);
        } else {
            lo += c * (s + 1);
            hi += c * s;
        }
    }
}

// Sign of a + sum b_i sqrt(n_i) with nonzero b_i and distinct square-free n_i.
int sign_int(const Integer& a, const std::vector<std::pair<Integer, std::uint64_t>>& b) {
    if (b.empty()) return sgn(a);
    Integer lo, hi;
    for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
        enclose(a, b, bits, lo, hi);
        if (sgn(lo) >= 0) return 1;
        if (sgn(hi) <= 0) return -1;
    }
    fail(ErrorCode::internal, "sign refinement did not terminate");
}

// floor((a + sum b_i sqrt(n_i)) / q), q > 0.
Integer floor_int(const Integer& a, const std::vector<std::pair<Integer, std::uint64_t>>& b, const Integer& q) {
    Integer r;
    if (b.empty()) {
        mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
        return r;
    }
    Integer lo, hi, den, top;
    for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
        enclose(a, b, bits, lo, hi);
        den = q;
        den <<= bits;
        mpz_fdiv_q(r.get_mpz_t(), lo.get_mpz_t(), den.get_mpz_t());
        top = (r + 1) * den;
        if (hi <= top) return r;
    }
    fail(ErrorCode::internal, "floor refinement did not terminate");
}

struct IntForm {
    Integer q, a;
    std::vector<std::pair<Integer, std::uint64_t>> b;
};

IntForm int_form(const ExactScalar& x) {
    IntForm f;
    f.q = x.base().get_den();
    for (const auto& t : x.terms()) mpz_lcm(f.q.get_mpz_t(), f.q.get_mpz_t(), t.coeff.get_den_mpz_t());
    f.a = x.base().get_num() * (f.q / x.base().get_den());
    for (const auto& t : x.terms()) f.b.emplace_back(t.coeff.get_num() * (f.q / t.coeff.get_den()), t.radicand);
    return f;
}

}  // namespace

ExactScalar ExactScalar::sqrt_of(std::uint64_t n, const Rational& coeff) {
    ExactScalar r;
    r.add_term(coeff, n);
    return r;
}

void ExactScalar::add_term(const Rational& c, std::uint64_t n) {
    if (sgn(c) == 0 || n == 0) return;
    auto [s, t] = split_square(n);
    Rational cc = c * Rational(Integer(static_cast<unsigned long>(s)));
    if (t == 1) {
        base_ += cc;
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                               [](const Term& a, std::uint64_t v) { return a.radicand < v; });
    if (it != terms_.end() && it->radicand == t) {
        it->coeff += cc;
        if (sgn(it->coeff) == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{cc, t});
    }
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    r.base_ = -r.base_;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    base_ += o.base_;
    for (const auto& t : o.terms_) add_term(t.coeff, t.radicand);
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const Rational& q) {
    if (sgn(q) == 0) {
        *this = ExactScalar();
        return *this;
    }
    base_ *= q;
    for (auto& t : terms_) t.coeff *= q;
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    ExactScalar r(base_ * o.base_);
    for (const auto& t : o.terms_) r.add_term(base_ * t.coeff, t.radicand);
    for (const auto& t : terms_) {
        r.add_term(t.coeff * o.base_, t.radicand);
        for (const auto& u : o.terms_) {
            // sqrt(a) sqrt(b) = g sqrt(ab/g^2) with g = gcd(a,b) for square-free a, b.
            std::uint64_t g = std::gcd(t.radicand, u.radicand);
            Rational c = t.coeff * u.coeff * Rational(Integer(static_cast<unsigned long>(g)));
            r.add_term(c, (t.radicand / g) * (u.radicand / g));
        }
    }
    *this = std::move(r);
    return *this;
}

ExactScalar operator/(ExactScalar a, const Rational& q) {
    if (sgn(q) == 0) fail(ErrorCode::invalid, "division by zero");
    return a *= Rational(1) / q;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
    if (a.base_ != b.base_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].radicand != b.terms_[i].radicand || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
    int s = sign(a - b);
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string ExactScalar::str() const {
    std::string s = to_string(base_);
    for (const auto& t : terms_) s += " + (" + to_string(t.coeff) + ")r{" + std::to_string(t.radicand) + "}";
    return s;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool at_end() {
        skip();
        return i >= s.size();
    }
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorCode::parse, "at offset " + std::to_string(i) + " in \"" + std::string(s) + "\": " + what);
    }
    Integer digits() {
        skip();
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) error("expected digits");
        Integer v(std::string(s.substr(i, j - i)));
        i = j;
        return v;
    }
    Rational rational() {
        bool neg = false;
        while (true) {
            if (eat('-')) neg = !neg;
            else if (!eat('+')) break;
        }
        Integer num = digits();
        Integer den = 1;
        if (eat('/')) {
            den = digits();
            if (sgn(den) == 0) error("zero denominator");
        }
        Rational q(neg ? Integer(-num) : num, den);
        q.canonicalize();
        return q;
    }
    std::uint64_t radical() {
        if (!eat('r') || !eat('{')) error("expected r{n}");
        Integer n = digits();
        if (!eat('}')) error("expected '}'");
        if (n < 1 || !n.fits_ulong_p()) error("radicand out of range");
        return n.get_ui();
    }
};

}  // namespace

ExactScalar ExactScalar::parse(std::string_view text) {
    Cursor c{text};
    if (c.at_end()) c.error("empty scalar");
    ExactScalar r;
    bool first = true;
    while (!c.at_end()) {
        bool neg = false;
        if (!first) {
            if (c.eat('-')) neg = true;
            else if (!c.eat('+')) c.error("expected '+' or '-'");
        }
        first = false;
        c.skip();
        Rational coeff;
        bool has_coeff = false;
        if (c.eat('(')) {
            coeff = c.rational();
            if (!c.eat(')')) c.error("expected ')'");
            has_coeff = true;
        } else if (c.i < c.s.size() && c.s[c.i] != 'r') {
            coeff = c.rational();
            has_coeff = true;
        }
        c.skip();
        if (c.i < c.s.size() && c.s[c.i] == 'r') {
            std::uint64_t n = c.radical();
            if (!has_coeff) coeff = 1;
            r.add_term(neg ? Rational(-coeff) : coeff, n);
        } else {
            if (!has_coeff) c.error("expected a term");
            r.base_ += neg ? Rational(-coeff) : coeff;
        }
    }
    return r;
}

ExactScalar inverse(const ExactScalar& x) {
    if (x.is_zero()) fail(ErrorCode::invalid, "inverse of zero");
    if (x.is_rational()) return ExactScalar(Rational(1) / x.base());
    std::uint64_t n0 = x.terms().front().radicand, p = n0;
    for (std::uint64_t f = 2; f * f <= n0; ++f)
        if (n0 % f == 0) {
            p = f;
            break;
        }
    // x = a + b sqrt(p) with a, b free of sqrt(p); x (a - b sqrt(p)) = a^2 - p b^2.
    ExactScalar a(x.base()), b;
    for (const auto& t : x.terms()) {
        if (t.radicand % p == 0) b += ExactScalar::sqrt_of(t.radicand / p, t.coeff);
        else a += ExactScalar::sqrt_of(t.radicand, t.coeff);
    }
    ExactScalar conj = a - b * ExactScalar::sqrt_of(p);
    ExactScalar norm = a * a - b * b * Rational(Integer(static_cast<unsigned long>(p)));
    return conj * inverse(norm);
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * inverse(b); }

int sign(const ExactScalar& x) {
    if (x.is_rational()) return sgn(x.base());
    IntForm f = int_form(x);
    return sign_int(f.a, f.b);
}

Integer floor_exact(const ExactScalar& x) {
    if (x.is_rational()) return floor_rational(x.base());
    IntForm f = int_form(x);
    return floor_int(f.a, f.b, f.q);
}

Integer ceil_exact(const ExactScalar& x) { return -floor_exact(-x); }

ExactScalar frac_exact(const ExactScalar& x) { return x - ExactScalar(Rational(floor_exact(x))); }

int varphi_exact(const ExactScalar& x) {
    if (!x.is_rational()) return 1;
    return x.base().get_den() == 1 ? 0 : 1;
}

Ordering compare(const ExactScalar& x, const ExactScalar& y) {
    int s = sign(x - y);
    return s < 0 ? Ordering::less : s > 0 ? Ordering::greater : Ordering::equal;
}

Turn::Turn(ExactScalar v) : v_(std::move(v)) {
    if (sign(v_) <= 0 || sign(v_ - ExactScalar(1)) >= 0)
        fail(ErrorCode::invalid, "turn " + v_.str() + " is not in (0,1)");
    if (v_ == ExactScalar(make_rational(1, 2))) fail(ErrorCode::invalid, "turn 1/2 is excluded");
}

Integer Turn::denominator() const { return v_.is_rational() ? Integer(v_.base().get_den()) : Integer(0); }

ScaledScalar::ScaledScalar(const ExactScalar& x) {
    IntForm f = int_form(x);
    q_ = std::move(f.q);
    a_ = std::move(f.a);
    b_ = std::move(f.b);
}

Integer ScaledScalar::floor_times(const Integer& m) const {
    std::vector<std::pair<Integer, std::uint64_t>> b = b_;
    for (auto& t : b) t.first *= m;
    if (sgn(m) == 0) b.clear();
    return floor_int(a_ * m, b, q_);
}

int ScaledScalar::sign_shifted(const Integer& m, const Integer& k, const Rational& e) const {
    // e_d (m a + m sum b sqrt n) - q e_d k - q e_n, all over q e_d > 0.
    const Integer& ed = e.get_den();
    Integer a = ed * m * a_ - q_ * ed * k - q_ * e.get_num();
    std::vector<std::pair<Integer, std::uint64_t>> b;
    if (sgn(m) != 0)
        for (const auto& t : b_) b.emplace_back(ed * m * t.first, t.second);
    return sign_int(a, b);
}

}  // namespace cgeo
