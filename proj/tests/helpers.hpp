#pragma once

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "asres/polynomial.hpp"
#include "asres/semigroup.hpp"

namespace testing {

inline asres::Polynomial P(const std::string& text, int nvars) { return asres::Polynomial::parse(text, nvars); }

/// Parameter sets with n in [nlo, nhi], d in [dlo, dhi], m0 in [n+1, 4n+1], gcd(m0, d) = 1.
inline std::vector<asres::ASParams> grid(int nlo, int nhi, int dlo = 1, int dhi = 5) {
    std::vector<asres::ASParams> out;
    for (int n = nlo; n <= nhi; ++n)
        for (int d = dlo; d <= dhi; ++d)
            for (int m0 = n + 1; m0 <= 4 * n + 1; ++m0)
                if (std::gcd(m0, d) == 1) out.push_back(asres::make_params(m0, d, n));
    return out;
}

/// Random polynomial with small integer or half-integer coefficients.
inline asres::Polynomial random_poly(std::mt19937_64& rng, int nvars, int terms, int maxexp) {
    std::uniform_int_distribution<int> e(0, maxexp), c(-4, 4), half(0, 3);
    std::vector<asres::Term> ts;
    for (int t = 0; t < terms; ++t) {
        std::vector<int> ex(static_cast<std::size_t>(nvars));
        for (auto& x : ex) x = e(rng);
        int k = c(rng);
        ts.push_back({asres::Monomial(nvars, ex), half(rng) == 0 ? asres::Rational(k, 2) : asres::Rational(k)});
    }
    return asres::Polynomial::from_terms(nvars, std::move(ts));
}

} // namespace testing
