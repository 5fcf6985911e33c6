#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asres/rational.hpp"

namespace asres {

/// Largest supported number of variables x0..x_n (so n <= 15).
inline constexpr int kMaxVars = 16;

/*
 * Exponent vector of a monomial in x0..x_{nvars-1}, stored inline.
 *
 * Ordered degree-lexicographically with x0 > x1 > ... : a larger total
 * degree wins, ties are broken by the first differing exponent.
 */
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars);
    Monomial(int nvars, std::span<const int> exponents);

    static Monomial variable(int nvars, int index, int power = 1);

    int nvars() const noexcept { return nvars_; }
    int operator[](int i) const noexcept { return exp_[static_cast<std::size_t>(i)]; }
    void set(int i, int e);

    int degree() const noexcept { return degree_; }
    long weighted_degree(std::span<const int> weights) const;
    bool is_one() const noexcept { return degree_ == 0; }

    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Quotient a / b; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
    }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

    /// `x0^2*x1` style; the unit monomial renders as "1".
    std::string str() const;

    std::size_t hash() const noexcept;

private:
    std::array<std::uint16_t, kMaxVars> exp_{};
    std::uint16_t degree_ = 0;
    std::uint8_t nvars_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
    Monomial mono;
    Rational coef;
};

/*
 * Sparse multivariate polynomial with rational coefficients.
 *
 * Terms are kept in strictly decreasing monomial order with no zero
 * coefficients, so structural equality is mathematical equality.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index, int power = 1);
    static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1));
    /// Builds from arbitrary terms, combining duplicates and dropping zeros.
    static Polynomial from_terms(int nvars, std::vector<Term> terms);

    /// Parses the output of str(); throws Error(parse) on malformed input.
    static Polynomial parse(const std::string& text, int nvars);

    int nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    /// True if the polynomial is a nonzero constant.
    bool is_unit() const noexcept;
    /// Coefficient of the unit monomial (zero if absent).
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    /// Common weighted degree, or nullopt if the terms disagree.
    /// Throws Error(domain) for the zero polynomial.
    std::optional<long> weighted_degree(std::span<const int> weights) const;
    /// Zero counts as homogeneous.
    bool is_homogeneous(std::span<const int> weights) const;

    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times(const Monomial& m) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// this += c * m * p, without building intermediates.
    void add_scaled(const Polynomial& p, const Rational& c, const Monomial& m);

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str() const;

private:
    void check_compatible(const Polynomial& o) const;

    int nvars_ = 0;
    std::vector<Term> terms_;
};

enum class PolyOp { add, sub, mul };

/// Dispatching form of the ring operations.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

} // namespace asres

template <>
struct std::hash<asres::Monomial> {
    std::size_t operator()(const asres::Monomial& m) const noexcept { return m.hash(); }
};
