#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "asres/field.hpp"
#include "asres/rational.hpp"

namespace asres {

/// Sparse row: (column, value) pairs with strictly increasing columns and
/// nonzero values.
template <class T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

template <class T>
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseRow<T>> data;
};

/// Rank over Q by fraction-free elimination: rows are scaled to integers,
/// combined as p*r - a*q and divided by their content.
std::size_t rank_rational(SparseMatrix<Rational> m);

/// Rank over Z/p.
std::size_t rank_mod_p(SparseMatrix<std::uint32_t> m, const PrimeField& field);

/// Reduces every entry modulo p.
SparseMatrix<std::uint32_t> reduce_mod_p(const SparseMatrix<Rational>& m, std::uint32_t p);

/// Elimination route actually used for one rank computation.
enum class RankRoute { rational, prime };

/// Below this size (in both dimensions) the rational route is used when
/// the field choice is rational.
inline constexpr std::size_t kRationalRankLimit = 200;

struct RankResult {
    std::size_t rank = 0;
    RankRoute route = RankRoute::rational;
};

/// Rank under a field choice: prime always uses Z/p; rational uses exact
/// elimination for matrices under kRationalRankLimit x kRationalRankLimit
/// and Z/p (with FieldChoice::prime) above.
RankResult rank(const SparseMatrix<Rational>& m, const FieldChoice& field);

} // namespace asres
