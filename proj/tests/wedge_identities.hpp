#pragma once

#include <utility>
#include <vector>

#include "asres/generators.hpp"
#include "asres/rescomplex.hpp"

namespace testing {

using namespace asres;

// Linear extension of the Eagon-Northcott differential.
inline FormalSum apply_en(const ASParams& p, const FormalSum& x) {
    FormalSum out;
    for (const auto& [e, c] : x) add_to(out, en_image(p, e), c);
    prune(out);
    return out;
}

// Linear extension of phi_s^(h) to a WedgeSum; phi^(0) = 0.
inline FormalSum phi_sum(const ASParams& p, int h, int s, const WedgeSum& x) {
    FormalSum out;
    if (h == 0) return out;
    for (const auto& [w, c] : x) add_to(out, phi(p, h, s, w), c);
    prune(out);
    return out;
}

// Both sides of d_s phi_s^(h)(W) = -phi_{s-1}^(h-1)(Delta_0 W) + phi_{s-1}^(h)(Delta_1 W)
//                                  + (-1)^{s+h} g_0 W lambda0^{h-1} lambda1^{s-h-1}.
inline std::pair<FormalSum, FormalSum> phi_boundary_identity(const ASParams& p, int s, int h, const std::vector<int>& w) {
    FormalSum lhs = apply_en(p, phi(p, h, s, w));
    FormalSum rhs;
    add_to(rhs, phi_sum(p, h - 1, s - 1, delta(p, 0, w)), Polynomial::constant(p.nvars(), -1));
    add_to(rhs, phi_sum(p, h, s - 1, delta(p, 1, w)), Polynomial::constant(p.nvars(), 1));
    if (s - h - 1 >= 0) {
        Polynomial g0 = binomial_g(p, 0);
        add_to(rhs, BasisElement::en(false, w, h - 1, s - h - 1), (s + h) % 2 == 0 ? g0 : -g0);
    }
    prune(rhs);
    return {lhs, rhs};
}

// Both sides of Delta_q(W ^ e_k) = Delta_q(W) ^ e_k + (-1)^{|W|} x_{k+q-1} W.
inline std::pair<WedgeSum, WedgeSum> contraction_identity(const ASParams& p, int q, const std::vector<int>& w, int k) {
    const int nv = p.nvars();
    WedgeSum lhs = delta(p, q, wedge_with(WedgeSum{{w, Polynomial::constant(nv, 1)}}, k));
    WedgeSum rhs = wedge_with(delta(p, q, w), k);
    Polynomial x = Polynomial::variable(nv, k + q - 1);
    auto& slot = rhs.try_emplace(w, Polynomial(nv)).first->second;
    slot += (w.size() % 2 == 0) ? x : -x;
    std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    return {lhs, rhs};
}

} // namespace testing
