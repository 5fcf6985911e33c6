#pragma once

#include <vector>

#include "asres/polynomial.hpp"
#include "asres/semigroup.hpp"

namespace asres {

/// 2x2 minor of A on columns (i, j): x_{i-1} x_j - x_i x_{j-1}.
struct Minor {
    int i = 0;
    int j = 0;
    Polynomial poly;
    long weight = 0;
};

/// g_h = x_n^a x_{n-h} - x_0^mu x_{n-b-h}, of weight delta_h.
struct Binomial {
    int h = 0;
    Polynomial poly;
    long weight = 0;
};

/*
 * Minimal generators of the defining ideal I of the monomial curve.
 *
 * `f` holds the C(n,2) minors of A in lexicographic (i, j) order; `g`
 * holds g_0..g_{n-b}. Together they generate I.
 */
struct GeneratorSet {
    std::vector<Minor> f;
    std::vector<Binomial> g;

    std::size_t size() const { return f.size() + g.size(); }
    /// Position of the minor on columns i < j inside f.
    static std::size_t f_index(int n, int i, int j);
};

/// Minor of A on columns (i, j) for any 1 <= i, j <= n; antisymmetric in (i, j).
Polynomial minor_of_A(const ASParams& params, int i, int j);

/// g_h for 0 <= h <= n - b.
Polynomial binomial_g(const ASParams& params, int h);

GeneratorSet build_generators(const ASParams& params);

/// True if substituting x_i -> t^{m_i} sends p to zero.
bool vanishes_on_curve(const Polynomial& p, const ASParams& params);

/*
 * Witness that x_{i+1} g_{h+1} - x_i g_h lies in the ideal of minors of A:
 *
 *   x_{i+1} g_{h+1} - x_i g_h
 *       = x_n^a (x_{i+1} x_{n-h-1} - x_i x_{n-h})
 *         - x_0^mu (x_{i+1} x_{n-b-h-1} - x_i x_{n-b-h}).
 *
 * Each bracket equals sign * minor_of_A(col_i, col_j).
 */
struct ColonCertificate {
    struct Part {
        Polynomial cofactor;
        int col_i = 0;
        int col_j = 0;
        int sign = 1;
        Polynomial minor;  // minor_of_A(col_i, col_j)
    };

    int i = 0;
    int h = 0;
    Polynomial lhs;
    std::vector<Part> parts;
};

/// Builds and checks the certificate; throws Error(construction_bug) if it fails.
ColonCertificate colon_identity(const ASParams& params, int i, int h);

/// Certificates for every legal (i, h); empty when n == b.
std::vector<ColonCertificate> colon_certificates(const ASParams& params);

/// True when x_0 * g_{h+1} is not in (minors of A, g_0, ..., g_h).
/// Decided by one linear solve in the weighted degree of x_0 * g_{h+1}.
bool colon_noncontainment(const ASParams& params, int h);

} // namespace asres
