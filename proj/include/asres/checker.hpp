#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "asres/field.hpp"
#include "asres/linalg.hpp"
#include "asres/minimalizer.hpp"
#include "asres/module.hpp"
#include "asres/polynomial.hpp"
#include "asres/semigroup.hpp"

namespace asres {

/// Monomials of P = k[x0..xn] by weighted degree, with index lookup.
class MonomialCatalog {
public:
    explicit MonomialCatalog(const ASParams& params) : params_(params) {}

    /// All monomials of weighted degree w, in decreasing monomial order.
    const std::vector<Monomial>& of_degree(long w);
    /// Position of m inside of_degree(deg m).
    std::uint32_t index_of(const Monomial& m, long w);
    std::size_t count(long w) { return of_degree(w).size(); }

private:
    struct Slot {
        std::vector<Monomial> monomials;
        std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    };
    Slot& slot(long w);

    ASParams params_;
    std::map<long, Slot> slots_;
};

/*
 * Degree-w piece of a differential d : F -> G between graded free modules.
 * Stored transposed: one sparse row per (source generator, monomial)
 * listing its image in the monomial basis of G_w. Rank is unaffected.
 */
struct GradedPiece {
    long weight = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    SparseMatrix<Rational> matrix;
};

/// Dimension of F_w for a graded free module F.
std::size_t piece_dim(const GradedFreeModule& module, long w, MonomialCatalog& catalog);

GradedPiece graded_piece(const DifferentialMap& d, const GradedFreeModule& source,
                         const GradedFreeModule& target, long w, MonomialCatalog& catalog);

/// Closed-form Betti number beta_s, 1 <= s <= n.
long betti_formula(const ASParams& params, int s);

/// True iff p lies in the ideal generated by `generators` (all homogeneous).
/// Throws Error(domain) if p is not homogeneous.
bool graded_membership(const ASParams& params, const std::vector<Polynomial>& generators,
                       const Polynomial& p, const FieldChoice& field = FieldChoice::rational());

struct ExactnessCell {
    long weight = 0;
    int position = 0;
    long lhs = 0;  // dim ker d_s (position s >= 1) or dim coker d_1 (position 0)
    long rhs = 0;  // rank d_{s+1} or the semigroup indicator
    bool ok() const { return lhs == rhs; }
};

struct ExactnessTable {
    long wmax = 0;
    std::vector<ExactnessCell> cells;
    std::vector<std::string> warnings;
    std::size_t rational_ranks = 0;
    std::size_t prime_ranks = 0;

    bool all_pass() const;
    std::vector<ExactnessCell> failures() const;
};

/*
 * Verifies exactness weight by weight: for every w <= wmax and every
 * position s >= 1, dim ker (d_s)_w == rank (d_{s+1})_w, and at position 0,
 * dim coker (d_1)_w is 1 if w lies in S and 0 otherwise.
 */
ExactnessTable check_exactness(const Complex& c, long wmax, const FieldChoice& field = FieldChoice::rational());

/// Coefficients of 1 + sum_s (-1)^s sum_{beta in C_s} t^{weight(beta)}, s >= 1, up to t^wmax.
std::vector<long> resolution_numerator(const Complex& c, long wmax);
/// Coefficients of prod_i (1 - t^{m_i}) * sum_{w in S} t^w up to t^wmax.
std::vector<long> semigroup_numerator(const ASParams& params, long wmax);
/// Compares the two numerators coefficient-wise up to wmax.
bool hilbert_consistency(const Complex& resolution, long wmax);

struct VerifyOptions {
    long wmax = -1;  // < 0: delta_0 + 3 m_n
    FieldChoice field = FieldChoice::rational();
    bool exactness_cone = true;
    bool exactness_minimal = true;
};

struct PositionReport {
    int position = 0;
    bool composition = true;
    bool homogeneity = true;
    bool minimality = true;
};

struct VerificationReport {
    ASParams params;
    long wmax = 0;
    std::string field;
    std::vector<std::string> sign_flips;

    std::vector<std::size_t> cone_ranks;
    std::vector<long> cone_rank_expected;  // index s; entry 0 unused
    std::vector<PositionReport> cone_positions;
    std::vector<PositionReport> minimal_positions;

    std::vector<long> betti_expected;  // index s-1
    std::vector<long> betti_actual;
    std::vector<long> cancellations_expected;  // per target position s
    std::vector<long> cancellations_actual;
    bool structural_prediction = true;

    bool exactness_cone_checked = false;
    bool exactness_cone = true;
    bool exactness_minimal_checked = false;
    bool exactness_minimal = true;
    std::vector<ExactnessCell> exactness_failures;

    bool hilbert_matches = true;
    bool colon_identities = true;
    std::vector<bool> colon_noncontainment;  // index h

    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Builds, minimalizes and runs every check. Never throws for failed checks:
/// they are collected in `failures`.
VerificationReport verify_all(const ASParams& params, const VerifyOptions& options = {});

/// Checks a complex loaded from elsewhere (composition, homogeneity, and
/// exactness up to wmax; skipped when wmax < 0). Returns failure messages.
std::vector<std::string> verify_loaded(const Complex& c, long wmax, const FieldChoice& field);

} // namespace asres
