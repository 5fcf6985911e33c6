#include "asres/checker.hpp"

#include <algorithm>

#include "asres/error.hpp"
#include "asres/generators.hpp"
#include "asres/rescomplex.hpp"

namespace asres {

// -------------------------------------------------------- MonomialCatalog

MonomialCatalog::Slot& MonomialCatalog::slot(long w) {
    auto it = slots_.find(w);
    if (it != slots_.end()) return it->second;
    Slot s;
    if (w >= 0) {
        const int nv = params_.nvars();
        std::vector<int> exps(static_cast<std::size_t>(nv), 0);
        auto rec = [&](auto&& self, int i, long rest) -> void {
            const int mi = params_.m_at(i);
            if (i == nv - 1) {
                if (rest % mi == 0) {
                    exps[static_cast<std::size_t>(i)] = static_cast<int>(rest / mi);
                    s.monomials.emplace_back(nv, exps);
                }
                return;
            }
            for (long e = 0; e * mi <= rest; ++e) {
                exps[static_cast<std::size_t>(i)] = static_cast<int>(e);
                self(self, i + 1, rest - e * mi);
            }
            exps[static_cast<std::size_t>(i)] = 0;
        };
        rec(rec, 0, w);
        std::sort(s.monomials.begin(), s.monomials.end(), std::greater<>());
        for (std::size_t k = 0; k < s.monomials.size(); ++k)
            s.index.emplace(s.monomials[k], static_cast<std::uint32_t>(k));
    }
    return slots_.emplace(w, std::move(s)).first->second;
}

const std::vector<Monomial>& MonomialCatalog::of_degree(long w) { return slot(w).monomials; }

std::uint32_t MonomialCatalog::index_of(const Monomial& m, long w) {
    auto& s = slot(w);
    auto it = s.index.find(m);
    if (it == s.index.end()) throw Error(ErrorKind::domain, "monomial " + m.str() + " is not of degree " + std::to_string(w));
    return it->second;
}

// ---------------------------------------------------------- graded pieces

std::size_t piece_dim(const GradedFreeModule& module, long w, MonomialCatalog& catalog) {
    std::size_t dim = 0;
    for (long wt : module.weights()) dim += catalog.count(w - wt);
    return dim;
}

GradedPiece graded_piece(const DifferentialMap& d, const GradedFreeModule& source,
                         const GradedFreeModule& target, long w, MonomialCatalog& catalog) {
    GradedPiece piece;
    piece.weight = w;
    std::vector<std::size_t> offset(target.rank() + 1, 0);
    for (std::size_t i = 0; i < target.rank(); ++i)
        offset[i + 1] = offset[i] + catalog.count(w - target.weight(i));
    piece.target_dim = offset.back();
    piece.source_dim = piece_dim(source, w, catalog);
    piece.matrix.rows = piece.source_dim;
    piece.matrix.cols = piece.target_dim;
    piece.matrix.data.reserve(piece.source_dim);
    for (std::size_t j = 0; j < source.rank(); ++j) {
        const long wj = w - source.weight(j);
        for (const Monomial& nu : catalog.of_degree(wj)) {
            SparseRow<Rational> row;
            for (const auto& e : d.column(j)) {
                const long wi = w - target.weight(e.row);
                for (const auto& t : e.poly.terms())
                    row.emplace_back(static_cast<std::uint32_t>(offset[e.row] + catalog.index_of(t.mono * nu, wi)), t.coef);
            }
            std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            piece.matrix.data.push_back(std::move(row));
        }
    }
    return piece;
}

// ------------------------------------------------------------------ betti

long betti_formula(const ASParams& params, int s) {
    const int n = params.n, b = params.b;
    if (s < 1 || s > n) throw Error(ErrorKind::domain, "betti_formula: s out of range");
    if (s == 1) return (n - b + 1) + binomial(n, 2);
    if (s < n - b + 2) return long(n - b + 2 - s) * binomial(n, s - 1) + long(s) * binomial(n, s + 1);
    return long(s - 1 - n + b) * binomial(n, s) + long(s) * binomial(n, s + 1);
}

// ------------------------------------------------------------- membership

bool graded_membership(const ASParams& params, const std::vector<Polynomial>& generators,
                       const Polynomial& p, const FieldChoice& field) {
    if (p.is_zero()) return true;
    auto w = p.weighted_degree(params.m);
    if (!w) throw Error(ErrorKind::domain, "graded_membership: polynomial is not homogeneous");
    MonomialCatalog catalog(params);
    SparseMatrix<Rational> m;
    m.cols = catalog.count(*w);
    auto to_row = [&](const Polynomial& q) {
        SparseRow<Rational> row;
        for (const auto& t : q.terms()) row.emplace_back(catalog.index_of(t.mono, *w), t.coef);
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return row;
    };
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        auto wg = g.weighted_degree(params.m);
        if (!wg) throw Error(ErrorKind::domain, "graded_membership: generator is not homogeneous");
        if (*wg > *w) continue;
        for (const Monomial& mu : catalog.of_degree(*w - *wg)) m.data.push_back(to_row(g.times(mu)));
    }
    m.rows = m.data.size();
    std::size_t before = rank(m, field).rank;
    m.data.push_back(to_row(p));
    m.rows = m.data.size();
    return rank(m, field).rank == before;
}

// -------------------------------------------------------------- exactness

bool ExactnessTable::all_pass() const {
    return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.ok(); });
}

std::vector<ExactnessCell> ExactnessTable::failures() const {
    std::vector<ExactnessCell> out;
    for (const auto& c : cells)
        if (!c.ok()) out.push_back(c);
    return out;
}

ExactnessTable check_exactness(const Complex& c, long wmax, const FieldChoice& field) {
    ExactnessTable table;
    table.wmax = wmax;
    const int L = c.length();
    long max_weight = 0;
    for (const auto& m : c.modules)
        for (long wt : m.weights()) max_weight = std::max(max_weight, wt);
    if (wmax < max_weight)
        table.warnings.push_back("wmax " + std::to_string(wmax) + " is below the largest generator weight " +
                                 std::to_string(max_weight) + "; coverage is incomplete");

    MonomialCatalog catalog(c.params);
    MembershipTable semigroup(c.params, static_cast<int>(std::max(wmax, 0L)));
    for (long w = 0; w <= wmax; ++w) {
        // ranks[s] = rank of (d_s)_w, s = 1..L; ranks[L+1] = 0.
        std::vector<long> ranks(static_cast<std::size_t>(L) + 2, 0);
        std::vector<long> dims(static_cast<std::size_t>(L) + 1, 0);
        for (int s = 0; s <= L; ++s) dims[static_cast<std::size_t>(s)] = static_cast<long>(piece_dim(c.module(s), w, catalog));
        for (int s = 1; s <= L; ++s) {
            if (dims[static_cast<std::size_t>(s)] == 0 || dims[static_cast<std::size_t>(s - 1)] == 0) continue;
            GradedPiece piece = graded_piece(c.differential(s), c.module(s), c.module(s - 1), w, catalog);
            RankResult r = rank(piece.matrix, field);
            (r.route == RankRoute::rational ? table.rational_ranks : table.prime_ranks)++;
            ranks[static_cast<std::size_t>(s)] = static_cast<long>(r.rank);
        }
        table.cells.push_back({w, 0, dims[0] - ranks[1], semigroup.contains(static_cast<int>(w)) ? 1 : 0});
        for (int s = 1; s <= L; ++s)
            table.cells.push_back({w, s, dims[static_cast<std::size_t>(s)] - ranks[static_cast<std::size_t>(s)],
                                   ranks[static_cast<std::size_t>(s + 1)]});
    }
    return table;
}

// ---------------------------------------------------------------- Hilbert

std::vector<long> resolution_numerator(const Complex& c, long wmax) {
    std::vector<long> coef(static_cast<std::size_t>(wmax) + 1, 0);
    coef[0] = 1;
    for (int s = 1; s <= c.length(); ++s)
        for (long wt : c.module(s).weights())
            if (wt <= wmax) coef[static_cast<std::size_t>(wt)] += (s % 2 == 0) ? 1 : -1;
    return coef;
}

std::vector<long> semigroup_numerator(const ASParams& params, long wmax) {
    MembershipTable S(params, static_cast<int>(wmax));
    std::vector<long> coef(static_cast<std::size_t>(wmax) + 1, 0);
    for (long w = 0; w <= wmax; ++w) coef[static_cast<std::size_t>(w)] = S.contains(static_cast<int>(w)) ? 1 : 0;
    for (int mi : params.m)
        for (long w = wmax; w >= mi; --w) coef[static_cast<std::size_t>(w)] -= coef[static_cast<std::size_t>(w - mi)];
    return coef;
}

bool hilbert_consistency(const Complex& resolution, long wmax) {
    if (wmax < 0) return true;
    return resolution_numerator(resolution, wmax) == semigroup_numerator(resolution.params, wmax);
}

// ------------------------------------------------------------ full report

namespace {

std::vector<PositionReport> position_reports(const Complex& c, bool check_minimality) {
    std::vector<PositionReport> out;
    for (int s = 1; s <= c.length(); ++s) out.push_back({s, true, true, true});
    for (const auto& d : composition_defects(c)) out[static_cast<std::size_t>(d.position - 1)].composition = false;
    for (const auto& d : homogeneity_defects(c)) out[static_cast<std::size_t>(d.position - 1)].homogeneity = false;
    if (check_minimality)
        for (const auto& d : unit_entries(c)) out[static_cast<std::size_t>(d.position - 1)].minimality = false;
    return out;
}

void collect(VerificationReport& rep, const std::vector<PositionReport>& positions, const std::string& which,
             bool minimality) {
    for (const auto& p : positions) {
        const std::string at = which + " position " + std::to_string(p.position);
        if (!p.composition) rep.failures.push_back("composition fails at " + at);
        if (!p.homogeneity) rep.failures.push_back("homogeneity fails at " + at);
        if (minimality && !p.minimality) rep.failures.push_back("unit entry remains at " + at);
    }
}

} // namespace

VerificationReport verify_all(const ASParams& params, const VerifyOptions& options) {
    VerificationReport rep;
    rep.params = params;
    rep.wmax = options.wmax < 0 ? params.default_wmax() : options.wmax;
    rep.field = options.field.str();
    const int n = params.n;

    ConeBuild build;
    try {
        build = build_cone_complex(params);
    } catch (const Error& e) {
        rep.failures.push_back(std::string("cone construction: ") + e.what());
        return rep;
    }
    const Complex& cone = build.complex;
    rep.sign_flips = build.signs.flipped_names();
    rep.cone_ranks = cone.ranks();
    rep.cone_rank_expected.assign(static_cast<std::size_t>(n) + 2, 0);
    rep.cone_rank_expected[0] = 1;
    for (int s = 1; s <= n + 1; ++s) {
        long expected = s == 1 ? betti_formula(params, 1) : cone_rank_formula(params, s);
        rep.cone_rank_expected[static_cast<std::size_t>(s)] = expected;
        if (static_cast<long>(rep.cone_ranks.at(static_cast<std::size_t>(s))) != expected)
            rep.failures.push_back("rank of C_" + std::to_string(s) + " is " +
                                   std::to_string(rep.cone_ranks[static_cast<std::size_t>(s)]) + ", expected " +
                                   std::to_string(expected));
    }
    rep.cone_positions = position_reports(cone, false);
    collect(rep, rep.cone_positions, "cone", false);

    MinimalComplex minimal;
    try {
        minimal = minimalize(cone);
    } catch (const Error& e) {
        rep.failures.push_back(std::string("minimalization: ") + e.what());
        return rep;
    }
    const Complex& R = minimal.complex;
    rep.minimal_positions = position_reports(R, true);
    collect(rep, rep.minimal_positions, "minimal", true);

    if (R.length() > n) rep.failures.push_back("minimal resolution does not stop at position n");
    long alternating = 1;
    for (int s = 1; s <= n; ++s) {
        long expected = betti_formula(params, s);
        long actual = s <= R.length() ? static_cast<long>(R.module(s).rank()) : 0;
        rep.betti_expected.push_back(expected);
        rep.betti_actual.push_back(actual);
        alternating += (s % 2 == 0 ? 1 : -1) * actual;
        if (expected != actual)
            rep.failures.push_back("beta_" + std::to_string(s) + " is " + std::to_string(actual) + ", expected " +
                                   std::to_string(expected));
    }
    if (alternating != 0) rep.failures.push_back("alternating sum of Betti numbers is " + std::to_string(alternating));

    rep.cancellations_expected.assign(static_cast<std::size_t>(n) + 1, 0);
    rep.cancellations_actual.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int s = 0; s <= n; ++s) rep.cancellations_expected[static_cast<std::size_t>(s)] = expected_cancellations(params, s);
    for (const auto& step : minimal.provenance) {
        if (step.s >= 0 && step.s <= n) ++rep.cancellations_actual[static_cast<std::size_t>(step.s)];
        if (!matches_structural_prediction(step)) rep.structural_prediction = false;
    }
    if (rep.cancellations_actual != rep.cancellations_expected)
        rep.failures.push_back("cancellation counts differ from nu_s C(n,s)");
    if (!rep.structural_prediction)
        rep.failures.push_back("a cancelled pair does not match W^(h) -> W^(0) lambda0^(h-1) lambda1^(s-h-1)");

    if (options.exactness_cone) {
        rep.exactness_cone_checked = true;
        auto table = check_exactness(cone, rep.wmax, options.field);
        rep.exactness_cone = table.all_pass();
        if (!rep.exactness_cone) {
            rep.failures.push_back("cone complex is not exact in some weight");
            for (const auto& f : table.failures()) rep.exactness_failures.push_back(f);
        }
    }
    if (options.exactness_minimal) {
        rep.exactness_minimal_checked = true;
        auto table = check_exactness(R, rep.wmax, options.field);
        rep.exactness_minimal = table.all_pass();
        if (!rep.exactness_minimal) {
            rep.failures.push_back("minimal complex is not exact in some weight");
            for (const auto& f : table.failures()) rep.exactness_failures.push_back(f);
        }
    }

    rep.hilbert_matches = hilbert_consistency(R, rep.wmax);
    if (!rep.hilbert_matches) rep.failures.push_back("Hilbert numerator mismatch");

    try {
        colon_certificates(params);
    } catch (const Error& e) {
        rep.colon_identities = false;
        rep.failures.push_back(e.what());
    }
    for (int h = 0; h + 1 <= params.levels(); ++h) {
        bool ok = colon_noncontainment(params, h);
        rep.colon_noncontainment.push_back(ok);
        if (!ok) rep.failures.push_back("x0*g_" + std::to_string(h + 1) + " lies in (C, g_0..g_" + std::to_string(h) + ")");
    }
    return rep;
}

std::vector<std::string> verify_loaded(const Complex& c, long wmax, const FieldChoice& field) {
    std::vector<std::string> out;
    for (const auto& d : composition_defects(c)) out.push_back("composition: " + d.detail);
    for (const auto& d : homogeneity_defects(c)) out.push_back("homogeneity: " + d.detail);
    if (!out.empty() || wmax < 0) return out;
    auto table = check_exactness(c, wmax, field);
    for (const auto& f : table.failures())
        out.push_back("exactness: weight " + std::to_string(f.weight) + " position " + std::to_string(f.position) +
                      " (" + std::to_string(f.lhs) + " != " + std::to_string(f.rhs) + ")");
    return out;
}

} // namespace asres
