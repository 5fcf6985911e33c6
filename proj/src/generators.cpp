#include "asres/generators.hpp"

#include <map>

#include "asres/checker.hpp"
#include "asres/error.hpp"

namespace asres {

namespace {

Polynomial var(const ASParams& p, int i, int e = 1) { return Polynomial::variable(p.nvars(), i, e); }

} // namespace

std::size_t GeneratorSet::f_index(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) throw Error(ErrorKind::domain, "minor columns out of range");
    // Pairs (i', j') with i' < i come first: sum_{i'<i} (n - i').
    std::size_t idx = 0;
    for (int k = 1; k < i; ++k) idx += static_cast<std::size_t>(n - k);
    return idx + static_cast<std::size_t>(j - i - 1);
}

Polynomial minor_of_A(const ASParams& params, int i, int j) {
    if (i < 1 || j < 1 || i > params.n || j > params.n)
        throw Error(ErrorKind::domain, "minor columns out of range");
    return var(params, i - 1) * var(params, j) - var(params, i) * var(params, j - 1);
}

Polynomial binomial_g(const ASParams& params, int h) {
    if (h < 0 || h > params.levels()) throw Error(ErrorKind::domain, "binomial index out of range");
    const int n = params.n;
    return var(params, n, params.a) * var(params, n - h) -
           var(params, 0, params.mu) * var(params, n - params.b - h);
}

GeneratorSet build_generators(const ASParams& params) {
    GeneratorSet gs;
    for (int i = 1; i <= params.n; ++i)
        for (int j = i + 1; j <= params.n; ++j)
            gs.f.push_back({i, j, minor_of_A(params, i, j),
                            params.m_at(i - 1) + params.m_at(j)});
    for (int h = 0; h <= params.levels(); ++h)
        gs.g.push_back({h, binomial_g(params, h), params.delta_at(h)});
    return gs;
}

bool vanishes_on_curve(const Polynomial& p, const ASParams& params) {
    std::map<long, Rational> by_weight;
    for (const auto& t : p.terms()) by_weight[t.mono.weighted_degree(params.m)] += t.coef;
    for (const auto& [w, c] : by_weight)
        if (!c.is_zero()) return false;
    return true;
}

ColonCertificate colon_identity(const ASParams& params, int i, int h) {
    const int n = params.n, b = params.b;
    if (i < 0 || i > n - 1) throw Error(ErrorKind::domain, "colon_identity: i out of range");
    if (h < 0 || h > n - b - 1) throw Error(ErrorKind::domain, "colon_identity: h out of range");

    ColonCertificate cert;
    cert.i = i;
    cert.h = h;
    cert.lhs = var(params, i + 1) * binomial_g(params, h + 1) - var(params, i) * binomial_g(params, h);

    // x_{i+1} x_q - x_i x_{q+1} = -minor(i+1, q+1).
    auto part = [&](Polynomial cofactor, int q) {
        ColonCertificate::Part pt;
        pt.cofactor = std::move(cofactor);
        pt.col_i = i + 1;
        pt.col_j = q + 1;
        pt.sign = -1;
        pt.minor = minor_of_A(params, pt.col_i, pt.col_j);
        return pt;
    };
    cert.parts.push_back(part(var(params, n, params.a), n - h - 1));
    cert.parts.push_back(part(-var(params, 0, params.mu), n - b - h - 1));

    Polynomial rhs(params.nvars());
    for (const auto& pt : cert.parts) rhs += pt.cofactor * pt.minor.scaled(Rational(pt.sign));
    if (rhs != cert.lhs)
        throw Error(ErrorKind::construction_bug,
                    "colon identity failed at i=" + std::to_string(i) + ", h=" + std::to_string(h));
    return cert;
}

std::vector<ColonCertificate> colon_certificates(const ASParams& params) {
    std::vector<ColonCertificate> out;
    for (int h = 0; h + 1 <= params.levels(); ++h)
        for (int i = 0; i <= params.n - 1; ++i) out.push_back(colon_identity(params, i, h));
    return out;
}

bool colon_noncontainment(const ASParams& params, int h) {
    if (h < 0 || h > params.levels() - 1)
        throw Error(ErrorKind::domain, "colon_noncontainment: h out of range");
    GeneratorSet gs = build_generators(params);
    std::vector<Polynomial> ideal;
    for (const auto& f : gs.f) ideal.push_back(f.poly);
    for (int k = 0; k <= h; ++k) ideal.push_back(gs.g[static_cast<std::size_t>(k)].poly);
    Polynomial target = var(params, 0) * gs.g[static_cast<std::size_t>(h + 1)].poly;
    return !graded_membership(params, ideal, target);
}

} // namespace asres
