#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace asres {

/*
 * Exact rational number.
 *
 * Values whose numerator and denominator fit in 64 bits are stored inline;
 * anything larger is promoted to a shared immutable GMP rational. Every
 * coefficient produced by the resolution construction is a small integer,
 * so the inline path carries almost all of the work.
 *
 * Invariant: den > 0, gcd(num, den) == 1, and the big form is used only
 * when the value does not fit the inline form.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    static Rational parse(const std::string& text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    /// Numerator and denominator as GMP integers.
    mpz_class numerator() const;
    mpz_class denominator() const;
    mpq_class to_mpq() const;

    /// Residue modulo an odd prime p. Throws if p divides the denominator.
    std::uint32_t mod(std::uint32_t p) const;

    std::string str() const;

    /// gcd of two integers (non-negative result). Both must be integral.
    static Rational gcd(const Rational& a, const Rational& b);

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.str();
    }

private:
    static Rational from_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

} // namespace asres
