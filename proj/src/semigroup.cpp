#include "asres/semigroup.hpp"

#include <numeric>

#include "asres/error.hpp"
#include "asres/polynomial.hpp"

namespace asres {

std::string ASParams::label() const {
    std::string out = "<";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(m[i]);
    }
    return out + ">";
}

ASParams make_params(int m0, int d, int n) {
    if (n < 2) throw Error(ErrorKind::out_of_hypothesis, "n must be at least 2");
    if (n + 1 > kMaxVars)
        throw Error(ErrorKind::domain, "n must be at most " + std::to_string(kMaxVars - 1));
    if (d < 1) throw Error(ErrorKind::domain, "d must be at least 1");
    if (m0 <= n)
        throw Error(ErrorKind::out_of_hypothesis,
                    "m0 must exceed n (m0 = a*n + b needs a >= 1)");
    if (std::gcd(m0, d) != 1)
        throw Error(ErrorKind::invalid_semigroup, "gcd(m0, d) must be 1");

    ASParams p;
    p.n = n;
    p.m0 = m0;
    p.d = d;
    p.a = (m0 - 1) / n;
    p.b = m0 - p.a * n;
    p.mu = p.a + d;
    for (int i = 0; i <= n; ++i) p.m.push_back(m0 + i * d);
    for (int h = 0; h <= n - p.b; ++h) p.delta.push_back(p.a * p.m[n] + p.m[n - h]);
    return p;
}

MembershipTable::MembershipTable(const ASParams& params, int wmax) {
    if (wmax < 0) throw Error(ErrorKind::domain, "negative weight bound");
    member_.assign(static_cast<std::size_t>(wmax) + 1, 0);
    member_[0] = 1;
    for (int w = 1; w <= wmax; ++w)
        for (int g : params.m)
            if (g <= w && member_[static_cast<std::size_t>(w - g)]) {
                member_[static_cast<std::size_t>(w)] = 1;
                break;
            }
}

bool MembershipTable::contains(int w) const {
    if (w < 0) throw Error(ErrorKind::domain, "negative weight");
    if (w > wmax()) throw Error(ErrorKind::domain, "weight beyond table bound");
    return member_[static_cast<std::size_t>(w)] != 0;
}

bool contains(const ASParams& params, int w) {
    if (w < 0) throw Error(ErrorKind::domain, "negative weight");
    return MembershipTable(params, w).contains(w);
}

int crude_frobenius_bound(const ASParams& params) { return (params.m0 - 1) * params.m.back(); }

} // namespace asres
