#include "asres/linalg.hpp"

#include <unordered_map>

#include "asres/error.hpp"

namespace asres {

namespace {

/*
 * Row-by-row echelon reduction. Each incoming row is reduced against the
 * pivots found so far until its leading column is new (it becomes a pivot)
 * or it vanishes. `Ops::eliminate(row, pivot)` must cancel the leading
 * entry of `row` using `pivot`, which shares the leading column.
 */
template <class T, class Ops>
std::size_t echelon_rank(std::vector<SparseRow<T>>& rows, Ops& ops) {
    std::unordered_map<std::uint32_t, std::size_t> pivot_of;  // column -> row index
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        while (!row.empty()) {
            auto it = pivot_of.find(row.front().first);
            if (it == pivot_of.end()) break;
            ops.eliminate(row, rows[it->second]);
        }
        if (!row.empty()) {
            ops.normalize(row);
            pivot_of.emplace(row.front().first, r);
        }
    }
    return pivot_of.size();
}

struct IntegerOps {
    // row <- p*row - a*pivot, then divide by content.
    void eliminate(SparseRow<Rational>& row, const SparseRow<Rational>& pivot) {
        const Rational p = pivot.front().second;
        const Rational a = row.front().second;
        scratch.clear();
        auto i = row.begin();
        auto j = pivot.begin();
        while (i != row.end() || j != pivot.end()) {
            if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
                scratch.emplace_back(i->first, p * i->second);
                ++i;
            } else if (i == row.end() || j->first < i->first) {
                scratch.emplace_back(j->first, -(a * j->second));
                ++j;
            } else {
                Rational v = p * i->second - a * j->second;
                if (!v.is_zero()) scratch.emplace_back(i->first, std::move(v));
                ++i;
                ++j;
            }
        }
        row.swap(scratch);
        normalize(row);
    }

    void normalize(SparseRow<Rational>& row) {
        if (row.empty()) return;
        Rational g(0);
        for (const auto& [c, v] : row) {
            g = Rational::gcd(g, v);
            if (g.is_one()) return;
        }
        for (auto& [c, v] : row) v = v / g;
    }

    SparseRow<Rational> scratch;
};

struct ModOps {
    explicit ModOps(const PrimeField& f) : field(f) {}

    // row <- row - (a / p) * pivot, with pivots normalized to leading 1.
    void eliminate(SparseRow<std::uint32_t>& row, const SparseRow<std::uint32_t>& pivot) {
        const std::uint32_t a = row.front().second;
        scratch.clear();
        auto i = row.begin();
        auto j = pivot.begin();
        while (i != row.end() || j != pivot.end()) {
            if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
                scratch.push_back(*i++);
            } else if (i == row.end() || j->first < i->first) {
                scratch.emplace_back(j->first, field.neg(field.mul(a, j->second)));
                ++j;
            } else {
                std::uint32_t v = field.sub(i->second, field.mul(a, j->second));
                if (v) scratch.emplace_back(i->first, v);
                ++i;
                ++j;
            }
        }
        row.swap(scratch);
    }

    void normalize(SparseRow<std::uint32_t>& row) {
        std::uint32_t inv = field.inv(row.front().second);
        if (inv == 1) return;
        for (auto& [c, v] : row) v = field.mul(v, inv);
    }

    const PrimeField& field;
    SparseRow<std::uint32_t> scratch;
};

} // namespace

std::size_t rank_rational(SparseMatrix<Rational> m) {
    // Clear denominators row by row; row scaling preserves rank.
    for (auto& row : m.data) {
        mpz_class l = 1;
        bool all_integer = true;
        for (const auto& [c, v] : row)
            if (!v.is_integer()) {
                all_integer = false;
                mpz_class den = v.denominator();
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            }
        if (all_integer) continue;
        Rational scale{mpq_class(l)};
        for (auto& [c, v] : row) v *= scale;
    }
    IntegerOps ops;
    return echelon_rank(m.data, ops);
}

std::size_t rank_mod_p(SparseMatrix<std::uint32_t> m, const PrimeField& field) {
    ModOps ops(field);
    return echelon_rank(m.data, ops);
}

SparseMatrix<std::uint32_t> reduce_mod_p(const SparseMatrix<Rational>& m, std::uint32_t p) {
    SparseMatrix<std::uint32_t> out;
    out.rows = m.rows;
    out.cols = m.cols;
    out.data.reserve(m.data.size());
    for (const auto& row : m.data) {
        SparseRow<std::uint32_t> r;
        r.reserve(row.size());
        for (const auto& [c, v] : row)
            if (std::uint32_t x = v.mod(p)) r.emplace_back(c, x);
        out.data.push_back(std::move(r));
    }
    return out;
}

RankResult rank(const SparseMatrix<Rational>& m, const FieldChoice& field) {
    if (field.kind == FieldChoice::Kind::rational && m.rows < kRationalRankLimit && m.cols < kRationalRankLimit)
        return {rank_rational(m), RankRoute::rational};
    PrimeField f(field.prime);
    return {rank_mod_p(reduce_mod_p(m, field.prime), f), RankRoute::prime};
}

} // namespace asres
