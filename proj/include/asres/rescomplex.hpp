#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "asres/module.hpp"
#include "asres/polynomial.hpp"
#include "asres/semigroup.hpp"

namespace asres {

/// Exterior-algebra element: sorted wedge index list -> coefficient.
/// The empty wedge stands for the rank-one generator epsilon.
using WedgeSum = std::map<std::vector<int>, Polynomial>;

/// Sorts a wedge, returning the permutation sign, or 0 for a repeated index.
int normalize_wedge(std::vector<int>& w);

/// Delta_q(e_{i1} ^ ... ^ e_{is}) = sum_j (-1)^{j+1} x_{i_j + q - 1} e_{..hat i_j..}.
WedgeSum delta(const ASParams& params, int q, const std::vector<int>& wedge);
/// Linear extension of delta to a WedgeSum.
WedgeSum delta(const ASParams& params, int q, const WedgeSum& sum);
/// sum ^ e_k, with normalization.
WedgeSum wedge_with(const WedgeSum& sum, int k);

/*
 * Named sign switches for the terms of psi and of the g_0 block of the
 * cone differential. All switches off is the default convention; a
 * switch that is on multiplies its term by -1.
 */
enum class SignKnob {
    psi_1_1_eps0,   // +x_{i-1} eps_0 in psi_1^(1)
    psi_1_1_phi,    // +phi_1^(1) in psi_1^(1)
    psi_1_h_delta0, // -Delta_0 in psi_1^(h), h >= 2
    psi_1_h_phi,    // +phi_1^(h), h >= 2
    psi_s_1_unit,   // -W^(0) lambda1^{s-2} in psi_s^(1), s >= 2
    psi_s_1_phi,    // +phi_s^(1), s >= 2
    psi_s_h_delta0, // (-1)^{s-1} Delta_0 in psi_s^(h), s, h >= 2
    psi_s_h_unit,   // (-1)^h W^(0) lambda0^{h-1} lambda1^{s-h-1}
    psi_s_h_phi,    // +phi_s^(h), s, h >= 2
    cone_g0,        // (-1)^{s-1} g_0 block of d_s^(0)
};

inline constexpr std::size_t kSignKnobCount = 10;

std::string knob_name(SignKnob k);

struct SignConvention {
    std::array<bool, kSignKnobCount> flipped{};

    int sign(SignKnob k) const { return flipped[static_cast<std::size_t>(k)] ? -1 : 1; }
    std::vector<std::string> flipped_names() const;
    friend bool operator==(const SignConvention&, const SignConvention&) = default;
};

// --------------------------------------------------------------- modules

/// Unshifted E_s, 0 <= s <= n - 1 (E_0 is epsilon). Rank s * C(n, s+1) for s >= 1.
GradedFreeModule en_module(const ASParams& params, int s);
/// Eagon-Northcott d_s : E_s -> E_{s-1}, 1 <= s <= n - 1.
DifferentialMap en_differential(const ASParams& params, int s);

/// K_s(-delta_h), 0 <= s <= n, 1 <= h <= n - b. Rank C(n, s).
GradedFreeModule koszul_module(const ASParams& params, int s, int h);
/// d'_s = Delta_1 : K_s(-delta_h) -> K_{s-1}(-delta_h), 1 <= s <= n.
DifferentialMap koszul_differential(const ASParams& params, int s, int h);

// ------------------------------------------------------------------ maps

/// Image of an EN basis element (shifted or not) or of epsilon_0 under the
/// Eagon-Northcott part of the cone differential.
FormalSum en_image(const ASParams& params, const BasisElement& e, const SignConvention& signs = {});

/// phi_s^(h)(W) in E_s, |W| = s.
FormalSum phi(const ASParams& params, int h, int s, const std::vector<int>& wedge);

/// psi_s^(h)(W^(h)) in F_s^(h-1), |W| = s >= 0 (s = 0 is multiplication by g_h).
FormalSum psi(const ASParams& params, int h, int s, const std::vector<int>& wedge,
              const SignConvention& signs = {});

/// d_s^(h) applied to one basis element of F_s^(h).
FormalSum cone_image(const ASParams& params, const BasisElement& e, const SignConvention& signs = {});

/// Basis of F_s^(h), 0 <= s <= n + 1.
GradedFreeModule cone_module(const ASParams& params, int s, int h);
/// d_s^(h) : F_s^(h) -> F_{s-1}^(h), 1 <= s <= n + 1.
DifferentialMap cone_differential(const ASParams& params, int s, int h, const SignConvention& signs = {});

/// Matrix of a linear map given by basis images. Throws if an image
/// leaves the target module.
DifferentialMap assemble(const GradedFreeModule& source, const GradedFreeModule& target,
                         const std::vector<FormalSum>& images, int nvars);

/// The mapping-cone complex F_h, obtained from F_{h-1} by adjoining the
/// Koszul summands at level h. step == 0 gives F_0.
Complex extend_cone(const Complex& previous, int h, const SignConvention& signs);
Complex build_step_complex(const ASParams& params, int h, const SignConvention& signs = {});

/// Checks that psi^(h) is a chain map K(-delta_h) -> F_{h-1}. Returns one
/// message per failing (s, basis element).
std::vector<std::string> chain_map_defects(const ASParams& params, int h, const SignConvention& signs);

struct ConeBuild {
    Complex complex;                 // F_{n-b}
    std::vector<Complex> steps;      // F_0 .. F_{n-b}
    SignConvention signs;
};

/*
 * Builds the full cone resolution F_{n-b}.
 *
 * The default sign convention is tried first. If d o d != 0 the smallest
 * set of sign switches (then lexicographically first) restoring
 * d o d = 0 is adopted; the chosen switches are reported in `signs`.
 * Throws Error(construction_bug) if no switch set works or if an entry
 * is not homogeneous.
 */
ConeBuild build_cone_complex(const ASParams& params);

/// (n-b) C(n,s-1) + (s-1) C(n,s) + s C(n,s+1).
long cone_rank_formula(const ASParams& params, int s);

long binomial(int n, int k);

} // namespace asres
