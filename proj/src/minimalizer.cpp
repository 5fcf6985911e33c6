#include "asres/minimalizer.hpp"

#include <algorithm>
#include <random>

#include "asres/error.hpp"
#include "asres/rescomplex.hpp"

namespace asres {

namespace {

using Column = std::vector<DifferentialMap::Entry>;

struct Workspace {
    int nvars = 0;
    std::vector<std::vector<bool>> alive;  // alive[s][i]
    std::vector<std::vector<Column>> cols; // cols[s][j] is column j of d_s (s >= 1)

    const Column& column(int s, std::size_t j) const { return cols[static_cast<std::size_t>(s)][j]; }
    Column& column(int s, std::size_t j) { return cols[static_cast<std::size_t>(s)][j]; }
    bool is_alive(int s, std::size_t i) const { return alive[static_cast<std::size_t>(s)][i]; }
};

struct UnitRef {
    int s;            // target position
    std::size_t col;  // in C_{s+1}
    std::size_t row;  // in C_s
};

// col <- col - factor * pivot, where factor is a polynomial.
void subtract_multiple(Column& col, const Column& pivot, const Polynomial& factor) {
    Column out;
    out.reserve(col.size() + pivot.size());
    auto i = col.begin();
    auto j = pivot.begin();
    while (i != col.end() || j != pivot.end()) {
        if (j == pivot.end() || (i != col.end() && i->row < j->row)) {
            out.push_back(std::move(*i++));
        } else if (i == col.end() || j->row < i->row) {
            out.push_back({j->row, -(factor * j->poly)});
            ++j;
        } else {
            Polynomial v = i->poly - factor * j->poly;
            if (!v.is_zero()) out.push_back({i->row, std::move(v)});
            ++i;
            ++j;
        }
    }
    col.swap(out);
}

void cancel(Workspace& ws, const UnitRef& u, int length) {
    const int src_pos = u.s + 1;
    const Column pivot = ws.column(src_pos, u.col);
    Rational unit;
    for (const auto& e : pivot)
        if (e.row == u.row) unit = e.poly.constant_term();
    auto& columns = ws.cols[static_cast<std::size_t>(src_pos)];
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (j == u.col || !ws.is_alive(src_pos, j)) continue;
        auto& col = columns[j];
        auto hit = std::find_if(col.begin(), col.end(), [&](const auto& e) { return e.row == u.row; });
        if (hit == col.end()) continue;
        Polynomial factor = hit->poly.scaled(unit.inverse());
        subtract_multiple(col, pivot, factor);
    }
    columns[u.col].clear();
    ws.alive[static_cast<std::size_t>(src_pos)][u.col] = false;
    ws.alive[static_cast<std::size_t>(u.s)][u.row] = false;
    // Column u.row of d_s disappears with its source.
    if (u.s >= 1) ws.column(u.s, u.row).clear();
    // Row u.col of d_{s+2} disappears with its target.
    if (src_pos + 1 <= length)
        for (auto& col : ws.cols[static_cast<std::size_t>(src_pos + 1)])
            std::erase_if(col, [&](const auto& e) { return e.row == u.col; });
}

std::vector<UnitRef> find_units(const Workspace& ws, int length, bool first_only) {
    std::vector<UnitRef> out;
    for (int s = 0; s + 1 <= length; ++s) {
        const auto& columns = ws.cols[static_cast<std::size_t>(s + 1)];
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (!ws.is_alive(s + 1, j)) continue;
            for (const auto& e : columns[j]) {
                if (!e.poly.is_unit()) continue;
                out.push_back({s, j, e.row});
                if (first_only) return out;
            }
        }
    }
    return out;
}

} // namespace

MinimalComplex minimalize(const Complex& c, const MinimalizeOptions& options) {
    const int L = c.length();
    Workspace ws;
    ws.nvars = c.params.nvars();
    ws.cols.resize(static_cast<std::size_t>(L) + 1);
    for (int s = 0; s <= L; ++s) ws.alive.emplace_back(c.module(s).rank(), true);
    for (int s = 1; s <= L; ++s) {
        const auto& d = c.differential(s);
        auto& cols = ws.cols[static_cast<std::size_t>(s)];
        for (std::size_t j = 0; j < d.cols(); ++j) cols.push_back(d.column(j));
    }

    std::size_t total = 0;
    for (const auto& m : c.modules) total += m.rank();

    MinimalComplex out;
    std::mt19937_64 rng(options.shuffle_seed.value_or(0));
    for (std::size_t guard = 0;; ++guard) {
        if (guard > total) throw Error(ErrorKind::construction_bug, "minimalization did not terminate");
        auto units = find_units(ws, L, !options.shuffle_seed);
        if (units.empty()) break;
        UnitRef pick = units.front();
        if (options.shuffle_seed) {
            std::uniform_int_distribution<std::size_t> dist(0, units.size() - 1);
            pick = units[dist(rng)];
        }
        CancellationStep step;
        step.s = pick.s;
        step.source = c.module(pick.s + 1).at(pick.col);
        step.target = c.module(pick.s).at(pick.row);
        for (const auto& e : ws.column(pick.s + 1, pick.col))
            if (e.row == pick.row) step.unit = e.poly.constant_term();
        out.provenance.push_back(step);
        cancel(ws, pick, L);
    }

    // Entries are homogeneous, so a constant term means a pure constant.
    for (int s = 1; s <= L; ++s)
        for (std::size_t j = 0; j < ws.cols[static_cast<std::size_t>(s)].size(); ++j)
            for (const auto& e : ws.column(s, j))
                if (!e.poly.constant_term().is_zero())
                    throw Error(ErrorKind::construction_bug, "entry with a constant term survived: " + e.poly.str());

    // Compact the surviving basis.
    Complex& r = out.complex;
    r.params = c.params;
    std::vector<std::vector<std::size_t>> new_index(static_cast<std::size_t>(L) + 1);
    for (int s = 0; s <= L; ++s) {
        std::vector<BasisElement> basis;
        std::vector<long> weights;
        auto& idx = new_index[static_cast<std::size_t>(s)];
        idx.assign(c.module(s).rank(), static_cast<std::size_t>(-1));
        for (std::size_t i = 0; i < c.module(s).rank(); ++i)
            if (ws.is_alive(s, i)) {
                idx[i] = basis.size();
                basis.push_back(c.module(s).at(i));
                weights.push_back(c.module(s).weight(i));
            }
        r.modules.emplace_back(std::move(basis), std::move(weights));
    }
    // Trailing zero modules carry no information.
    while (r.modules.size() > 1 && r.modules.back().rank() == 0) r.modules.pop_back();
    for (int s = 1; s <= r.length(); ++s) {
        DifferentialMap d(r.module(s - 1).rank(), r.module(s).rank());
        const auto& src_idx = new_index[static_cast<std::size_t>(s)];
        const auto& tgt_idx = new_index[static_cast<std::size_t>(s - 1)];
        for (std::size_t j = 0; j < src_idx.size(); ++j) {
            if (src_idx[j] == static_cast<std::size_t>(-1)) continue;
            Column col;
            for (const auto& e : ws.column(s, j)) {
                if (tgt_idx[e.row] == static_cast<std::size_t>(-1))
                    throw Error(ErrorKind::construction_bug, "entry points at a cancelled generator");
                col.push_back({tgt_idx[e.row], e.poly});
            }
            d.set_column(src_idx[j], std::move(col));
        }
        r.maps.push_back(std::move(d));
    }
    return out;
}

int nu(const ASParams& params, int s) { return std::min(s - 1, params.levels()); }

long expected_pruned_dims(const ASParams& params, int s) {
    if (s < 2) return 0;
    const int n = params.n;
    return long(nu(params, s)) * binomial(n, s) + long(nu(params, s - 1)) * binomial(n, s - 1);
}

long expected_cancellations(const ASParams& params, int s) {
    if (s < 2) return 0;
    return long(nu(params, s)) * binomial(params.n, s);
}

bool matches_structural_prediction(const CancellationStep& step) {
    const auto& src = step.source;
    const auto& tgt = step.target;
    if (src.tag != BasisTag::koszul || tgt.tag != BasisTag::en || !tgt.shifted) return false;
    const int s = step.s;
    const int h = src.h;
    return src.indices == tgt.indices && static_cast<int>(src.indices.size()) == s && tgt.v0 == h - 1 &&
           tgt.v1 == s - h - 1 && (step.unit == Rational(1) || step.unit == Rational(-1));
}

} // namespace asres
