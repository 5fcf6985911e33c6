#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "asres/module.hpp"

namespace asres {

/// One cancelled pair: source in C_{s+1}, target in C_s, joined by a
/// nonzero constant entry `unit` of d_{s+1}.
struct CancellationStep {
    int s = 0;
    BasisElement source;
    BasisElement target;
    Rational unit;
};

struct MinimalComplex {
    Complex complex;
    std::vector<CancellationStep> provenance;
};

struct MinimalizeOptions {
    /// When set, units are picked uniformly at random among all remaining
    /// unit entries instead of in the deterministic order (smallest s,
    /// then source basis order, then target basis order).
    std::optional<std::uint64_t> shuffle_seed;
};

/*
 * Removes every nonzero constant entry from the differentials by Gaussian
 * cancellation. For a unit c = d_{s+1}[t, e]:
 *
 *   d_{s+1}(u) <- d_{s+1}(u) - (d_{s+1}[t, u] / c) d_{s+1}(e)  for u != e,
 *
 * then e is dropped from C_{s+1} and t from C_s, which deletes column t of
 * d_s and row e of d_{s+2}. The result is homotopy equivalent to the input.
 */
MinimalComplex minimalize(const Complex& c, const MinimalizeOptions& options = {});

/// nu_s = min(s - 1, n - b).
int nu(const ASParams& params, int s);

/// Dimension of the redundant summand D_s of C_s:
/// nu_s C(n,s) + nu_{s-1} C(n,s-1) for s >= 2, and 0 for s = 1.
long expected_pruned_dims(const ASParams& params, int s);

/// Number of cancelled pairs between C_{s+1} and C_s: nu_s C(n,s).
long expected_cancellations(const ASParams& params, int s);

/// True when the step pairs a Koszul element W^(h) with the shifted
/// element W^(0) lambda0^{h-1} lambda1^{s-h-1}.
bool matches_structural_prediction(const CancellationStep& step);

} // namespace asres
