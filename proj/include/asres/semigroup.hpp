#pragma once

#include <string>
#include <vector>

namespace asres {

/*
 * Parameters of the numerical semigroup generated by the arithmetic
 * sequence m_i = m0 + i*d, i = 0..n.
 *
 * Derived fields: m0 = a*n + b with a >= 1 and 1 <= b <= n, mu = a + d,
 * delta[h] = a*m_n + m_{n-h} for h = 0..n-b (the weights of the binomial
 * generators g_h).
 */
struct ASParams {
    int n = 0;
    int m0 = 0;
    int d = 0;
    int a = 0;
    int b = 0;
    int mu = 0;
    std::vector<int> m;
    std::vector<int> delta;

    int nvars() const { return n + 1; }
    /// Number of Koszul levels, n - b.
    int levels() const { return n - b; }
    int m_at(int i) const { return m.at(static_cast<std::size_t>(i)); }
    int delta_at(int h) const { return delta.at(static_cast<std::size_t>(h)); }

    /// Default truncation weight for graded checks: delta_0 + 3*m_n.
    int default_wmax() const { return delta.front() + 3 * m.back(); }

    /// "<m0,m1,...,mn>"
    std::string label() const;

    friend bool operator==(const ASParams&, const ASParams&) = default;
};

/// Validates and derives all parameters. Throws Error on bad input.
ASParams make_params(int m0, int d, int n);

/// Dense membership table for S over weights 0..wmax.
class MembershipTable {
public:
    MembershipTable(const ASParams& params, int wmax);

    int wmax() const noexcept { return static_cast<int>(member_.size()) - 1; }
    /// Throws Error(domain) for w < 0 or w > wmax.
    bool contains(int w) const;

private:
    std::vector<char> member_;
};

/// One-shot membership query, by dynamic programming over 0..w.
bool contains(const ASParams& params, int w);

/// Upper bound (m0 - 1) * m_n beyond which every weight lies in S.
int crude_frobenius_bound(const ASParams& params);

} // namespace asres
