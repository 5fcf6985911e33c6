#include "asres/module.hpp"

#include <algorithm>
#include <tuple>

#include "asres/error.hpp"

namespace asres {

BasisElement BasisElement::unit(bool shifted) {
    BasisElement e;
    e.tag = BasisTag::en_unit;
    e.shifted = shifted;
    return e;
}

BasisElement BasisElement::en(bool shifted, std::vector<int> indices, int v0, int v1) {
    BasisElement e;
    e.tag = BasisTag::en;
    e.shifted = shifted;
    e.indices = std::move(indices);
    e.v0 = v0;
    e.v1 = v1;
    return e;
}

BasisElement BasisElement::koszul(int h, std::vector<int> indices) {
    BasisElement e;
    e.tag = BasisTag::koszul;
    e.h = h;
    e.indices = std::move(indices);
    return e;
}

int BasisElement::position() const {
    const int k = static_cast<int>(indices.size());
    switch (tag) {
    case BasisTag::en_unit: return shifted ? 1 : 0;
    case BasisTag::en: return shifted ? k : k - 1;
    case BasisTag::koszul: return k + 1;
    }
    return -1;
}

std::string BasisElement::tag_name() const {
    switch (tag) {
    case BasisTag::en: return "EN";
    case BasisTag::en_unit: return "ENUnit";
    case BasisTag::koszul: return "Koszul";
    }
    return "?";
}

std::string BasisElement::str() const {
    auto wedge = [this](const std::string& sup) {
        std::string out;
        for (std::size_t k = 0; k < indices.size(); ++k) {
            if (k) out += "^";
            out += "e" + std::to_string(indices[k]) + sup;
        }
        return out;
    };
    switch (tag) {
    case BasisTag::en_unit: return shifted ? "eps0" : "eps";
    case BasisTag::koszul:
        return indices.empty() ? "eps" + std::to_string(h) : wedge("(" + std::to_string(h) + ")");
    case BasisTag::en: {
        std::string out = wedge(shifted ? "(0)" : "");
        if (v0 || v1) out += "*l0^" + std::to_string(v0) + "*l1^" + std::to_string(v1);
        return out;
    }
    }
    return "?";
}

namespace {

int group_of(const BasisElement& e) {
    if (e.tag == BasisTag::koszul) return 0;
    return e.shifted ? 1 : 2;
}

} // namespace

std::strong_ordering operator<=>(const BasisElement& a, const BasisElement& b) {
    auto key = [](const BasisElement& e) {
        return std::make_tuple(group_of(e), -e.h, e.tag == BasisTag::en ? 1 : 0,
                               std::cref(e.indices), e.v0, e.v1);
    };
    auto ka = key(a), kb = key(b);
    if (ka < kb) return std::strong_ordering::less;
    if (kb < ka) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

long basis_weight(const ASParams& params, const BasisElement& e) {
    long sum = 0;
    for (int i : e.indices) sum += params.m_at(i);
    const long k = static_cast<long>(e.indices.size());
    switch (e.tag) {
    case BasisTag::en_unit: return e.shifted ? params.delta_at(0) : 0;
    case BasisTag::koszul: return params.delta_at(e.h) + sum;
    case BasisTag::en:
        return (e.shifted ? params.delta_at(0) : 0) + sum - (k - 1) * params.d + long(e.v1) * params.d;
    }
    return 0;
}

void add_to(FormalSum& sum, const BasisElement& e, const Polynomial& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = sum.try_emplace(e, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) sum.erase(it);
    }
}

void add_to(FormalSum& sum, const FormalSum& other, const Polynomial& coef) {
    for (const auto& [e, p] : other) add_to(sum, e, p * coef);
}

void prune(FormalSum& sum) {
    std::erase_if(sum, [](const auto& kv) { return kv.second.is_zero(); });
}

// ------------------------------------------------------- GradedFreeModule

GradedFreeModule::GradedFreeModule(const ASParams& params, std::vector<BasisElement> basis)
    : basis_(std::move(basis)) {
    weights_.reserve(basis_.size());
    for (const auto& e : basis_) weights_.push_back(basis_weight(params, e));
    build_index();
}

GradedFreeModule::GradedFreeModule(std::vector<BasisElement> basis, std::vector<long> weights)
    : basis_(std::move(basis)), weights_(std::move(weights)) {
    if (weights_.size() != basis_.size())
        throw Error(ErrorKind::structural, "basis and weight lists differ in length");
    build_index();
}

void GradedFreeModule::build_index() {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!index_.emplace(basis_[i], i).second)
            throw Error(ErrorKind::structural, "duplicate basis element " + basis_[i].str());
}

std::optional<std::size_t> GradedFreeModule::index_of(const BasisElement& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// -------------------------------------------------------- DifferentialMap

void DifferentialMap::set_column(std::size_t j, std::vector<Entry> entries) {
    std::erase_if(entries, [](const Entry& e) { return e.poly.is_zero(); });
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.row < y.row; });
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].row >= rows_) throw Error(ErrorKind::structural, "row index out of range");
        if (k && entries[k].row == entries[k - 1].row)
            throw Error(ErrorKind::structural, "duplicate row in column");
    }
    columns_.at(j) = std::move(entries);
}

Polynomial DifferentialMap::at(std::size_t i, std::size_t j, int nvars) const {
    for (const auto& e : columns_.at(j))
        if (e.row == i) return e.poly;
    return Polynomial(nvars);
}

std::size_t DifferentialMap::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

bool operator==(const DifferentialMap& a, const DifferentialMap& b) {
    if (a.rows_ != b.rows_ || a.columns_.size() != b.columns_.size()) return false;
    for (std::size_t j = 0; j < a.columns_.size(); ++j) {
        const auto& x = a.columns_[j];
        const auto& y = b.columns_[j];
        if (x.size() != y.size()) return false;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k].row != y[k].row || x[k].poly != y[k].poly) return false;
    }
    return true;
}

DifferentialMap compose(const DifferentialMap& a, const DifferentialMap& b, int nvars) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::structural, "composition dimension mismatch");
    DifferentialMap out(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::map<std::size_t, Polynomial> acc;
        for (const auto& mid : b.column(j))
            for (const auto& e : a.column(mid.row)) {
                auto [it, inserted] = acc.try_emplace(e.row, nvars);
                it->second += e.poly * mid.poly;
            }
        std::vector<DifferentialMap::Entry> col;
        for (auto& [r, p] : acc)
            if (!p.is_zero()) col.push_back({r, std::move(p)});
        out.set_column(j, std::move(col));
    }
    return out;
}

// ----------------------------------------------------------------- Complex

std::vector<std::size_t> Complex::ranks() const {
    std::vector<std::size_t> r;
    for (const auto& m : modules) r.push_back(m.rank());
    return r;
}

std::vector<Defect> composition_defects(const Complex& c) {
    std::vector<Defect> out;
    for (int s = 1; s + 1 <= c.length(); ++s) {
        DifferentialMap prod = compose(c.differential(s), c.differential(s + 1), c.params.nvars());
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (!prod.column(j).empty())
                out.push_back({s + 1, j,
                               "d_" + std::to_string(s) + " o d_" + std::to_string(s + 1) +
                                   " nonzero on " + c.module(s + 1).at(j).str()});
    }
    return out;
}

std::vector<Defect> homogeneity_defects(const Complex& c) {
    std::vector<Defect> out;
    for (int s = 1; s <= c.length(); ++s) {
        const auto& d = c.differential(s);
        for (std::size_t j = 0; j < d.cols(); ++j)
            for (const auto& e : d.column(j)) {
                long expected = c.module(s).weight(j) - c.module(s - 1).weight(e.row);
                auto w = e.poly.weighted_degree(c.params.m);
                if (!w || *w != expected)
                    out.push_back({s, j,
                                   "entry " + e.poly.str() + " at row " + std::to_string(e.row) +
                                       " of d_" + std::to_string(s) + " is not of degree " +
                                       std::to_string(expected)});
            }
    }
    return out;
}

std::vector<Defect> unit_entries(const Complex& c) {
    std::vector<Defect> out;
    for (int s = 1; s <= c.length(); ++s) {
        const auto& d = c.differential(s);
        for (std::size_t j = 0; j < d.cols(); ++j)
            for (const auto& e : d.column(j))
                if (!e.poly.constant_term().is_zero())
                    out.push_back({s, j, "constant term in entry " + e.poly.str()});
    }
    return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

} // namespace asres
