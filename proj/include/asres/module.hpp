#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asres/polynomial.hpp"
#include "asres/semigroup.hpp"

namespace asres {

enum class BasisTag { en, en_unit, koszul };

/*
 * Generator of one free summand of the cone complex.
 *
 *   en       e_T (x) lambda0^v0 lambda1^v1, in E_{|T|-1} or, when shifted,
 *            in E_{|T|-1}(-delta_0) (the W^(0) elements);
 *   en_unit  epsilon (unshifted, weight 0) or epsilon_0 (shifted);
 *   koszul   e^(h)_T in K_{|T|}(-delta_h); T empty is epsilon_h.
 *
 * Wedge indices are strictly increasing and lie in 1..n.
 */
struct BasisElement {
    BasisTag tag = BasisTag::en_unit;
    bool shifted = false;
    int h = 0;
    std::vector<int> indices;
    int v0 = 0;
    int v1 = 0;

    static BasisElement unit(bool shifted);
    static BasisElement en(bool shifted, std::vector<int> indices, int v0, int v1);
    static BasisElement koszul(int h, std::vector<int> indices);

    /// Homological position of the summand holding this element in the cone.
    int position() const;

    /// Tag name used in serialized output: "EN", "ENUnit" or "Koszul".
    std::string tag_name() const;
    std::string str() const;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
    /// Module order: Koszul summands first (level descending), then the
    /// shifted copy of E, then E; inside a summand by indices, then v0.
    friend std::strong_ordering operator<=>(const BasisElement& a, const BasisElement& b);
};

/// Homogeneous weight of a basis element (epsilon has weight 0).
long basis_weight(const ASParams& params, const BasisElement& e);

/// Finite linear combination of basis elements with polynomial coefficients.
using FormalSum = std::map<BasisElement, Polynomial>;

void add_to(FormalSum& sum, const BasisElement& e, const Polynomial& coef);
void add_to(FormalSum& sum, const FormalSum& other, const Polynomial& coef);
/// Removes zero coefficients.
void prune(FormalSum& sum);

class GradedFreeModule {
public:
    GradedFreeModule() = default;
    GradedFreeModule(const ASParams& params, std::vector<BasisElement> basis);
    /// For modules whose weights do not follow basis_weight (e.g. imported data).
    GradedFreeModule(std::vector<BasisElement> basis, std::vector<long> weights);

    std::size_t rank() const noexcept { return basis_.size(); }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    const BasisElement& at(std::size_t i) const { return basis_.at(i); }
    long weight(std::size_t i) const { return weights_.at(i); }
    const std::vector<long>& weights() const noexcept { return weights_; }
    std::optional<std::size_t> index_of(const BasisElement& e) const;

private:
    void build_index();

    std::vector<BasisElement> basis_;
    std::vector<long> weights_;
    std::map<BasisElement, std::size_t> index_;
};

/// Sparse matrix of polynomials, stored by column with rows ascending.
class DifferentialMap {
public:
    struct Entry {
        std::size_t row;
        Polynomial poly;
    };

    DifferentialMap() = default;
    DifferentialMap(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const std::vector<Entry>& column(std::size_t j) const { return columns_.at(j); }
    std::vector<Entry>& column(std::size_t j) { return columns_.at(j); }
    /// Replaces column j; zero entries are dropped and rows are sorted.
    void set_column(std::size_t j, std::vector<Entry> entries);
    /// Entry (i, j), or the zero polynomial if absent.
    Polynomial at(std::size_t i, std::size_t j, int nvars) const;
    std::size_t nonzeros() const;

    friend bool operator==(const DifferentialMap& a, const DifferentialMap& b);

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

/// Product a * b (b applied first). Throws on a dimension mismatch.
DifferentialMap compose(const DifferentialMap& a, const DifferentialMap& b, int nvars);

/*
 * Complex of graded free modules C_0 <- C_1 <- ... <- C_L over
 * P = k[x0..xn], with C_0 = P generated by epsilon.
 * differential(s) maps C_s to C_{s-1} for 1 <= s <= L.
 */
struct Complex {
    ASParams params;
    std::vector<GradedFreeModule> modules;
    std::vector<DifferentialMap> maps;  // maps[s-1] is d_s

    int length() const { return static_cast<int>(modules.size()) - 1; }
    const GradedFreeModule& module(int s) const { return modules.at(static_cast<std::size_t>(s)); }
    const DifferentialMap& differential(int s) const { return maps.at(static_cast<std::size_t>(s - 1)); }
    std::vector<std::size_t> ranks() const;
};

struct Defect {
    int position = 0;      // homological position of the source column
    std::size_t column = 0;
    std::string detail;
};

/// Columns j of d_{s+1} with d_s(d_{s+1}(e_j)) != 0.
std::vector<Defect> composition_defects(const Complex& c);
/// Entries whose degree disagrees with weight(source) - weight(target).
std::vector<Defect> homogeneity_defects(const Complex& c);
/// Entries that are nonzero constants.
std::vector<Defect> unit_entries(const Complex& c);

/// Strictly increasing subsets of {1..n} of size k, in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

} // namespace asres
