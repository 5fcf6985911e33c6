#include "asres/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "asres/error.hpp"

namespace asres {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(int nvars) {
    if (nvars < 1 || nvars > kMaxVars)
        throw Error(ErrorKind::domain, "variable count must lie in [1, " +
                                           std::to_string(kMaxVars) + "]");
    nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(int nvars, std::span<const int> exponents) : Monomial(nvars) {
    if (static_cast<int>(exponents.size()) != nvars)
        throw Error(ErrorKind::structural, "exponent vector length differs from variable count");
    for (int i = 0; i < nvars; ++i) set(i, exponents[static_cast<std::size_t>(i)]);
}

Monomial Monomial::variable(int nvars, int index, int power) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
}

void Monomial::set(int i, int e) {
    if (i < 0 || i >= nvars_) throw Error(ErrorKind::domain, "variable index out of range");
    if (e < 0 || e > std::numeric_limits<std::uint16_t>::max())
        throw Error(ErrorKind::domain, "exponent out of range");
    auto& slot = exp_[static_cast<std::size_t>(i)];
    degree_ = static_cast<std::uint16_t>(degree_ - slot + e);
    slot = static_cast<std::uint16_t>(e);
}

long Monomial::weighted_degree(std::span<const int> weights) const {
    if (static_cast<int>(weights.size()) != nvars_)
        throw Error(ErrorKind::structural, "weight vector length differs from variable count");
    long w = 0;
    for (int i = 0; i < nvars_; ++i) w += long(exp_[static_cast<std::size_t>(i)]) * weights[static_cast<std::size_t>(i)];
    return w;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorKind::structural, "variable-count mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(r.exp_[i] + b.exp_[i]);
    r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorKind::structural, "variable-count mismatch");
    if (!b.divides(a)) throw Error(ErrorKind::domain, "monomial does not divide");
    Monomial r = a;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(r.exp_[i] - b.exp_[i]);
    r.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
    return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.exp_[i] != b.exp_[i]) return a.exp_[i] <=> b.exp_[i];
    return a.nvars_ <=> b.nvars_;
}

std::string Monomial::str() const {
    std::string out;
    for (int i = 0; i < nvars_; ++i) {
        int e = exp_[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < nvars_; ++i) {
        h ^= exp_[static_cast<std::size_t>(i)];
        h *= 1099511628211ull;
    }
    return h;
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

} // namespace

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    return monomial(Monomial(nvars), c);
}

Polynomial Polynomial::variable(int nvars, int index, int power) {
    return monomial(Monomial::variable(nvars, index, power));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
    Polynomial p(m.nvars());
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    for (const auto& t : terms)
        if (t.mono.nvars() != nvars) throw Error(ErrorKind::structural, "variable-count mismatch");
    std::sort(terms.begin(), terms.end(), term_greater);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
        } else if (!t.coef.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw Error(ErrorKind::structural, "variable-count mismatch");
}

bool Polynomial::is_unit() const noexcept {
    return terms_.size() == 1 && terms_.front().mono.is_one();
}

Rational Polynomial::constant_term() const {
    // The unit monomial is the smallest, so it can only be the last term.
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
    return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.mono > x; });
    if (it != terms_.end() && it->mono == m) return it->coef;
    return Rational(0);
}

std::optional<long> Polynomial::weighted_degree(std::span<const int> weights) const {
    if (is_zero()) throw Error(ErrorKind::domain, "weighted degree of the zero polynomial is undefined");
    long w = terms_.front().mono.weighted_degree(weights);
    for (const auto& t : terms_)
        if (t.mono.weighted_degree(weights) != w) return std::nullopt;
    return w;
}

bool Polynomial::is_homogeneous(std::span<const int> weights) const {
    return is_zero() || weighted_degree(weights).has_value();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(nvars_);
    if (c.is_one()) return *this;
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Polynomial Polynomial::times(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;  // order is preserved
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() && j != b.terms_.end()) {
        auto c = i->mono <=> j->mono;
        if (c > 0) {
            r.terms_.push_back(*i++);
        } else if (c < 0) {
            r.terms_.push_back(*j++);
        } else {
            Rational s = i->coef + j->coef;
            if (!s.is_zero()) r.terms_.push_back({i->mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    r.terms_.insert(r.terms_.end(), i, a.terms_.end());
    r.terms_.insert(r.terms_.end(), j, b.terms_.end());
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
    if (b.terms_.size() == 1) return a.times(b.terms_[0].mono).scaled(b.terms_[0].coef);
    if (a.terms_.size() == 1) return b.times(a.terms_[0].mono).scaled(a.terms_[0].coef);
    std::vector<Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prods.push_back({s.mono * t.mono, s.coef * t.coef});
    return Polynomial::from_terms(a.nvars_, std::move(prods));
}

void Polynomial::add_scaled(const Polynomial& p, const Rational& c, const Monomial& m) {
    check_compatible(p);
    if (c.is_zero() || p.is_zero()) return;
    Polynomial shifted = m.is_one() ? p : p.times(m);
    *this = *this + shifted.scaled(c);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].mono != b.terms_[k].mono || a.terms_[k].coef != b.terms_[k].coef) return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = t.coef.sign() < 0;
        Rational mag = neg ? -t.coef : t.coef;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            out += mag.str();
        } else {
            if (!mag.is_one()) {
                out += mag.str();
                out += '*';
            }
            out += t.mono.str();
        }
    }
    return out;
}

Polynomial Polynomial::parse(const std::string& text, int nvars) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> Error {
        return Error(ErrorKind::parse, "cannot parse polynomial '" + text + "': " + why +
                                           " at offset " + std::to_string(pos));
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_uint = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw fail("expected digits");
        return text.substr(start, pos - start);
    };

    std::vector<Term> terms;
    skip_ws();
    if (text.substr(pos) == "0") return Polynomial(nvars);
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) {
            if (first) throw fail("empty input");
            break;
        }
        bool neg = false;
        if (text[pos] == '+' || text[pos] == '-') {
            neg = text[pos] == '-';
            ++pos;
            skip_ws();
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        first = false;

        Rational coef(1);
        Monomial mono(nvars);
        bool have_factor = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string lit = read_uint();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                lit += '/' + read_uint();
            }
            coef = Rational::parse(lit);
            have_factor = true;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                have_factor = false;
            } else {
                terms.push_back({mono, neg ? -coef : coef});
                continue;
            }
        }
        while (true) {
            if (pos >= text.size() || text[pos] != 'x') {
                if (have_factor) break;
                throw fail("expected variable");
            }
            ++pos;
            int idx = std::stoi(read_uint());
            if (idx >= nvars) throw fail("variable index out of range");
            int e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = std::stoi(read_uint());
            }
            mono.set(idx, mono[idx] + e);
            have_factor = true;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                have_factor = false;
                continue;
            }
            break;
        }
        terms.push_back({mono, neg ? -coef : coef});
    }
    return from_terms(nvars, std::move(terms));
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
    switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
    }
    throw Error(ErrorKind::domain, "unknown polynomial operation");
}

} // namespace asres
