#include "asres/rational.hpp"

#include <limits>
#include <numeric>

#include "asres/error.hpp"

namespace asres {

namespace {

using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();

bool fits(i128 v) { return v >= kMin && v <= kMax; }

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(ErrorKind::domain, "rational with zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    i128 g = gcd128(nn, dd);
    if (g > 1) {
        nn /= g;
        dd /= g;
    }
    if (fits(nn) && fits(dd)) {
        num_ = static_cast<std::int64_t>(nn);
        den_ = static_cast<std::int64_t>(dd);
    } else {
        *this = from_mpq(mpq_class(to_mpz(nn), to_mpz(dd)));
    }
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        r.num_ = n.get_si();
        r.den_ = d.get_si();
    } else {
        r.big_ = std::make_shared<const mpq_class>(std::move(q));
    }
    return r;
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw Error(ErrorKind::parse, "bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::parse, "zero denominator in '" + text + "'");
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
    return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::uint32_t Rational::mod(std::uint32_t p) const {
    auto reduce = [p](const mpz_class& z) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
        return static_cast<std::uint64_t>(r.get_ui());
    };
    std::uint64_t n, d;
    if (big_) {
        n = reduce(big_->get_num());
        d = reduce(big_->get_den());
    } else {
        std::int64_t nm = num_ % static_cast<std::int64_t>(p);
        n = static_cast<std::uint64_t>(nm < 0 ? nm + p : nm);
        d = static_cast<std::uint64_t>(den_ % static_cast<std::int64_t>(p));
    }
    if (d == 0) throw Error(ErrorKind::domain, "prime divides a coefficient denominator");
    if (d == 1) return static_cast<std::uint32_t>(n);
    // Fermat inverse.
    std::uint64_t inv = 1, base = d, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(n * inv % p);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::gcd(const Rational& a, const Rational& b) {
    if (!a.is_integer() || !b.is_integer()) throw Error(ErrorKind::domain, "gcd of non-integers");
    if (!a.big_ && !b.big_ && a.num_ != std::numeric_limits<std::int64_t>::min() &&
        b.num_ != std::numeric_limits<std::int64_t>::min())
        return Rational(std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.num_ < 0 ? -b.num_ : b.num_));
    mpz_class g;
    mpz_class x = a.numerator(), y = b.numerator();
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return Rational(mpq_class(g));
}

Rational Rational::operator-() const {
    if (big_ || num_ == std::numeric_limits<std::int64_t>::min()) return from_mpq(-to_mpq());
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorKind::domain, "inverse of zero");
    if (big_) return from_mpq(1 / *big_);
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t r;
            if (!__builtin_add_overflow(a.num_, b.num_, &r)) return Rational(r);
        } else {
            i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
            i128 d = i128(a.den_) * b.den_;
            i128 g = gcd128(n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
            if (fits(n) && fits(d)) {
                Rational r;
                r.num_ = static_cast<std::int64_t>(n);
                r.den_ = static_cast<std::int64_t>(d);
                return r;
            }
        }
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t r;
            if (!__builtin_mul_overflow(a.num_, b.num_, &r)) return Rational(r);
        } else {
            i128 n = i128(a.num_) * b.num_;
            i128 d = i128(a.den_) * b.den_;
            i128 g = gcd128(n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
            if (fits(n) && fits(d)) {
                Rational r;
                r.num_ = static_cast<std::int64_t>(n);
                r.den_ = static_cast<std::int64_t>(d);
                return r;
            }
        }
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms differ in representation only when values differ
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

} // namespace asres
