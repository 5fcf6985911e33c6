#include "asres/rescomplex.hpp"

#include <algorithm>

#include "asres/error.hpp"
#include "asres/generators.hpp"

namespace asres {

namespace {

Polynomial var(const ASParams& p, int i, int e = 1) { return Polynomial::variable(p.nvars(), i, e); }
Polynomial constant(const ASParams& p, long c) { return Polynomial::constant(p.nvars(), Rational(c)); }
int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

/// Eagon-Northcott d applied to e_T (x) lambda0^v0 lambda1^v1 in E_{|T|-1},
/// landing in the copy of E_{|T|-2} with the same shift.
FormalSum en_d(const ASParams& params, const std::vector<int>& T, int v0, int v1, bool shifted) {
    FormalSum out;
    const int s = static_cast<int>(T.size()) - 1;
    if (s == 1) {
        add_to(out, BasisElement::unit(shifted), minor_of_A(params, T[0], T[1]));
        return out;
    }
    if (v0 >= 1)
        for (auto& [w, c] : delta(params, 0, T)) add_to(out, BasisElement::en(shifted, w, v0 - 1, v1), c);
    if (v1 >= 1)
        for (auto& [w, c] : delta(params, 1, T)) add_to(out, BasisElement::en(shifted, w, v0, v1 - 1), c);
    return out;
}

/// Delta_0(W) placed at Koszul level `level`, scaled by `sign`.
void add_delta0_at_level(FormalSum& out, const ASParams& params, const std::vector<int>& W, int level,
                         long sign) {
    for (auto& [w, c] : delta(params, 0, W)) add_to(out, BasisElement::koszul(level, w), c.scaled(Rational(sign)));
}

FormalSum apply_cone(const ASParams& params, const FormalSum& v, const SignConvention& signs) {
    FormalSum out;
    for (const auto& [e, c] : v) add_to(out, cone_image(params, e, signs), c);
    return out;
}

} // namespace

int normalize_wedge(std::vector<int>& w) {
    int sign = 1;
    // Insertion sort counting transpositions; wedges are short.
    for (std::size_t i = 1; i < w.size(); ++i)
        for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
            if (w[j - 1] == w[j]) return 0;
            std::swap(w[j - 1], w[j]);
            sign = -sign;
        }
    return sign;
}

WedgeSum delta(const ASParams& params, int q, const std::vector<int>& wedge) {
    if (q != 0 && q != 1) throw Error(ErrorKind::domain, "delta: q must be 0 or 1");
    if (wedge.empty()) throw Error(ErrorKind::domain, "delta of the empty wedge");
    WedgeSum out;
    for (std::size_t j = 0; j < wedge.size(); ++j) {
        std::vector<int> rest;
        rest.reserve(wedge.size() - 1);
        for (std::size_t k = 0; k < wedge.size(); ++k)
            if (k != j) rest.push_back(wedge[k]);
        Polynomial c = var(params, wedge[j] + q - 1).scaled(Rational(parity_sign(static_cast<int>(j))));
        auto [it, inserted] = out.try_emplace(std::move(rest), c);
        if (!inserted) it->second += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

WedgeSum delta(const ASParams& params, int q, const WedgeSum& sum) {
    WedgeSum out;
    for (const auto& [w, c] : sum) {
        if (w.empty()) continue;  // Delta of epsilon is zero
        for (auto& [w2, c2] : delta(params, q, w)) {
            auto [it, inserted] = out.try_emplace(w2, c2 * c);
            if (!inserted) it->second += c2 * c;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

WedgeSum wedge_with(const WedgeSum& sum, int k) {
    WedgeSum out;
    for (const auto& [w, c] : sum) {
        std::vector<int> w2 = w;
        w2.push_back(k);
        int sign = normalize_wedge(w2);
        if (sign == 0) continue;
        Polynomial term = c.scaled(Rational(sign));
        auto [it, inserted] = out.try_emplace(std::move(w2), term);
        if (!inserted) it->second += term;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

std::string knob_name(SignKnob k) {
    switch (k) {
    case SignKnob::psi_1_1_eps0: return "psi_1^(1):eps0";
    case SignKnob::psi_1_1_phi: return "psi_1^(1):phi";
    case SignKnob::psi_1_h_delta0: return "psi_1^(h>=2):Delta0";
    case SignKnob::psi_1_h_phi: return "psi_1^(h>=2):phi";
    case SignKnob::psi_s_1_unit: return "psi_s>=2^(1):unit";
    case SignKnob::psi_s_1_phi: return "psi_s>=2^(1):phi";
    case SignKnob::psi_s_h_delta0: return "psi_s>=2^(h>=2):Delta0";
    case SignKnob::psi_s_h_unit: return "psi_s>=2^(h>=2):unit";
    case SignKnob::psi_s_h_phi: return "psi_s>=2^(h>=2):phi";
    case SignKnob::cone_g0: return "d_s^(0):g0-block";
    }
    return "?";
}

std::vector<std::string> SignConvention::flipped_names() const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < kSignKnobCount; ++k)
        if (flipped[k]) out.push_back(knob_name(static_cast<SignKnob>(k)));
    return out;
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long cone_rank_formula(const ASParams& params, int s) {
    const int n = params.n;
    return long(n - params.b) * binomial(n, s - 1) + long(s - 1) * binomial(n, s) + long(s) * binomial(n, s + 1);
}

// ---------------------------------------------------------------- modules

GradedFreeModule en_module(const ASParams& params, int s) {
    if (s < 0 || s > params.n - 1) throw Error(ErrorKind::domain, "en_module: s out of range");
    std::vector<BasisElement> basis;
    if (s == 0) {
        basis.push_back(BasisElement::unit(false));
    } else {
        for (auto& T : subsets(params.n, s + 1))
            for (int v0 = 0; v0 <= s - 1; ++v0) basis.push_back(BasisElement::en(false, T, v0, s - 1 - v0));
    }
    return GradedFreeModule(params, std::move(basis));
}

DifferentialMap en_differential(const ASParams& params, int s) {
    if (s < 1 || s > params.n - 1) throw Error(ErrorKind::domain, "en_differential: s out of range");
    GradedFreeModule src = en_module(params, s), tgt = en_module(params, s - 1);
    std::vector<FormalSum> images;
    for (const auto& e : src.basis()) images.push_back(en_d(params, e.indices, e.v0, e.v1, false));
    return assemble(src, tgt, images, params.nvars());
}

GradedFreeModule koszul_module(const ASParams& params, int s, int h) {
    if (s < 0 || s > params.n) throw Error(ErrorKind::domain, "koszul_module: s out of range");
    if (h < 1 || h > params.levels()) throw Error(ErrorKind::domain, "koszul_module: h out of range");
    std::vector<BasisElement> basis;
    for (auto& T : subsets(params.n, s)) basis.push_back(BasisElement::koszul(h, T));
    return GradedFreeModule(params, std::move(basis));
}

DifferentialMap koszul_differential(const ASParams& params, int s, int h) {
    if (s < 1 || s > params.n) throw Error(ErrorKind::domain, "koszul_differential: s out of range");
    GradedFreeModule src = koszul_module(params, s, h), tgt = koszul_module(params, s - 1, h);
    std::vector<FormalSum> images;
    for (const auto& e : src.basis()) {
        FormalSum img;
        for (auto& [w, c] : delta(params, 1, e.indices)) add_to(img, BasisElement::koszul(h, w), c);
        images.push_back(std::move(img));
    }
    return assemble(src, tgt, images, params.nvars());
}

// ------------------------------------------------------------------- maps

FormalSum en_image(const ASParams& params, const BasisElement& e, const SignConvention& signs) {
    FormalSum out;
    switch (e.tag) {
    case BasisTag::en_unit:
        if (e.shifted) add_to(out, BasisElement::unit(false), binomial_g(params, 0));
        return out;
    case BasisTag::en:
        if (!e.shifted) return en_d(params, e.indices, e.v0, e.v1, false);
        {
            const int s = static_cast<int>(e.indices.size());  // cone position
            out = en_d(params, e.indices, e.v0, e.v1, true);
            long sign = long(signs.sign(SignKnob::cone_g0)) * parity_sign(s - 1);
            add_to(out, BasisElement::en(false, e.indices, e.v0, e.v1),
                   binomial_g(params, 0).scaled(Rational(sign)));
        }
        return out;
    case BasisTag::koszul: break;
    }
    throw Error(ErrorKind::domain, "en_image: Koszul element");
}

FormalSum phi(const ASParams& params, int h, int s, const std::vector<int>& wedge) {
    const int n = params.n, b = params.b;
    if (h < 1 || h > params.levels()) throw Error(ErrorKind::domain, "phi: h out of range");
    if (s < 1 || static_cast<int>(wedge.size()) != s) throw Error(ErrorKind::domain, "phi: wedge size must equal s >= 1");
    FormalSum out;
    const Polynomial xa = var(params, n, params.a);
    const Polynomial xmu = var(params, 0, params.mu);
    for (int k = 1; k <= h && k <= s; ++k) {
        const long sk = parity_sign(k);
        const std::pair<const Polynomial*, int> parts[] = {{&xa, n + k - h}, {&xmu, n - b + k - h}};
        for (int t = 0; t < 2; ++t) {
            std::vector<int> T = wedge;
            T.push_back(parts[t].second);
            int sign = normalize_wedge(T);
            if (sign == 0) continue;
            long c = sk * sign * (t == 0 ? 1 : -1);
            add_to(out, BasisElement::en(false, T, k - 1, s - k), parts[t].first->scaled(Rational(c)));
        }
    }
    return out;
}

FormalSum psi(const ASParams& params, int h, int s, const std::vector<int>& wedge, const SignConvention& signs) {
    if (h < 1 || h > params.levels()) throw Error(ErrorKind::domain, "psi: h out of range");
    if (s < 0 || static_cast<int>(wedge.size()) != s) throw Error(ErrorKind::domain, "psi: wedge size must equal s");
    FormalSum out;
    auto add_phi = [&](SignKnob knob) {
        add_to(out, phi(params, h, s, wedge), constant(params, signs.sign(knob)));
    };
    if (s == 0) {
        add_to(out, BasisElement::unit(false), binomial_g(params, h));
    } else if (s == 1 && h == 1) {
        add_to(out, BasisElement::unit(true), var(params, wedge[0] - 1).scaled(Rational(signs.sign(SignKnob::psi_1_1_eps0))));
        add_phi(SignKnob::psi_1_1_phi);
    } else if (s == 1) {
        add_delta0_at_level(out, params, wedge, h - 1, -signs.sign(SignKnob::psi_1_h_delta0));
        add_phi(SignKnob::psi_1_h_phi);
    } else if (h == 1) {
        add_to(out, BasisElement::en(true, wedge, 0, s - 2), constant(params, -signs.sign(SignKnob::psi_s_1_unit)));
        add_phi(SignKnob::psi_s_1_phi);
    } else {
        add_delta0_at_level(out, params, wedge, h - 1, long(parity_sign(s - 1)) * signs.sign(SignKnob::psi_s_h_delta0));
        if (s - h - 1 >= 0)
            add_to(out, BasisElement::en(true, wedge, h - 1, s - h - 1),
                   constant(params, long(parity_sign(h)) * signs.sign(SignKnob::psi_s_h_unit)));
        add_phi(SignKnob::psi_s_h_phi);
    }
    return out;
}

FormalSum cone_image(const ASParams& params, const BasisElement& e, const SignConvention& signs) {
    if (e.tag != BasisTag::koszul) return en_image(params, e, signs);
    const int s = e.position();
    if (s == 1) return psi(params, e.h, 0, {}, signs);
    FormalSum out;
    for (auto& [w, c] : delta(params, 1, e.indices)) add_to(out, BasisElement::koszul(e.h, w), c);
    add_to(out, psi(params, e.h, s - 1, e.indices, signs), constant(params, parity_sign(s - 1)));
    return out;
}

GradedFreeModule cone_module(const ASParams& params, int s, int h) {
    const int n = params.n;
    if (s < 0 || s > n + 1) throw Error(ErrorKind::domain, "cone_module: s out of range");
    if (h < 0 || h > params.levels()) throw Error(ErrorKind::domain, "cone_module: h out of range");
    std::vector<BasisElement> basis;
    if (s == 0) {
        basis.push_back(BasisElement::unit(false));
        return GradedFreeModule(params, std::move(basis));
    }
    for (int k = h; k >= 1; --k)
        for (auto& T : subsets(n, s - 1)) basis.push_back(BasisElement::koszul(k, T));
    if (s == 1) {
        basis.push_back(BasisElement::unit(true));
    } else if (s <= n) {
        for (auto& T : subsets(n, s))
            for (int v0 = 0; v0 <= s - 2; ++v0) basis.push_back(BasisElement::en(true, T, v0, s - 2 - v0));
    }
    if (s <= n - 1)
        for (auto& T : subsets(n, s + 1))
            for (int v0 = 0; v0 <= s - 1; ++v0) basis.push_back(BasisElement::en(false, T, v0, s - 1 - v0));
    std::sort(basis.begin(), basis.end());
    return GradedFreeModule(params, std::move(basis));
}

DifferentialMap assemble(const GradedFreeModule& source, const GradedFreeModule& target,
                         const std::vector<FormalSum>& images, int nvars) {
    if (images.size() != source.rank()) throw Error(ErrorKind::structural, "assemble: image count mismatch");
    DifferentialMap d(target.rank(), source.rank());
    for (std::size_t j = 0; j < images.size(); ++j) {
        std::vector<DifferentialMap::Entry> col;
        for (const auto& [e, c] : images[j]) {
            if (c.is_zero()) continue;
            if (c.nvars() != nvars) throw Error(ErrorKind::structural, "assemble: variable-count mismatch");
            auto idx = target.index_of(e);
            if (!idx)
                throw Error(ErrorKind::construction_bug,
                            "image of " + source.at(j).str() + " leaves the target module at " + e.str());
            col.push_back({*idx, c});
        }
        d.set_column(j, std::move(col));
    }
    return d;
}

DifferentialMap cone_differential(const ASParams& params, int s, int h, const SignConvention& signs) {
    if (s < 1 || s > params.n + 1) throw Error(ErrorKind::domain, "cone_differential: s out of range");
    GradedFreeModule src = cone_module(params, s, h), tgt = cone_module(params, s - 1, h);
    std::vector<FormalSum> images;
    for (const auto& e : src.basis()) images.push_back(cone_image(params, e, signs));
    return assemble(src, tgt, images, params.nvars());
}

Complex extend_cone(const Complex& previous, int h, const SignConvention& signs) {
    const ASParams& params = previous.params;
    if (h < 1 || h > params.levels()) throw Error(ErrorKind::domain, "extend_cone: h out of range");
    const int L = previous.length();
    Complex next;
    next.params = params;
    std::vector<std::size_t> added(static_cast<std::size_t>(L) + 1, 0);
    for (int s = 0; s <= L; ++s) {
        std::vector<BasisElement> basis;
        if (s >= 1)
            for (auto& T : subsets(params.n, s - 1)) basis.push_back(BasisElement::koszul(h, T));
        added[static_cast<std::size_t>(s)] = basis.size();
        const auto& old = previous.module(s).basis();
        basis.insert(basis.end(), old.begin(), old.end());
        next.modules.emplace_back(params, std::move(basis));
    }
    for (int s = 1; s <= L; ++s) {
        const auto& src = next.module(s);
        const auto& tgt = next.module(s - 1);
        const std::size_t fresh = added[static_cast<std::size_t>(s)];
        const std::size_t shift = added[static_cast<std::size_t>(s - 1)];
        DifferentialMap d(tgt.rank(), src.rank());
        std::vector<FormalSum> images;
        for (std::size_t j = 0; j < fresh; ++j) images.push_back(cone_image(params, src.at(j), signs));
        GradedFreeModule fresh_src(params, std::vector<BasisElement>(src.basis().begin(), src.basis().begin() + static_cast<long>(fresh)));
        DifferentialMap block = assemble(fresh_src, tgt, images, params.nvars());
        for (std::size_t j = 0; j < fresh; ++j) d.set_column(j, block.column(j));
        const auto& old = previous.differential(s);
        for (std::size_t j = 0; j < old.cols(); ++j) {
            auto col = old.column(j);
            for (auto& e : col) e.row += shift;
            d.set_column(fresh + j, std::move(col));
        }
        next.maps.push_back(std::move(d));
    }
    return next;
}

Complex build_step_complex(const ASParams& params, int h, const SignConvention& signs) {
    if (h < 0 || h > params.levels()) throw Error(ErrorKind::domain, "build_step_complex: h out of range");
    Complex c;
    c.params = params;
    for (int s = 0; s <= params.n + 1; ++s) c.modules.push_back(cone_module(params, s, 0));
    for (int s = 1; s <= params.n + 1; ++s) c.maps.push_back(cone_differential(params, s, 0, signs));
    for (int k = 1; k <= h; ++k) c = extend_cone(c, k, signs);
    return c;
}

std::vector<std::string> chain_map_defects(const ASParams& params, int h, const SignConvention& signs) {
    std::vector<std::string> out;
    for (int s = 1; s <= params.n; ++s)
        for (auto& W : subsets(params.n, s)) {
            FormalSum lhs = apply_cone(params, psi(params, h, s, W, signs), signs);
            FormalSum rhs;
            for (auto& [w, c] : delta(params, 1, W)) add_to(rhs, psi(params, h, s - 1, w, signs), c);
            add_to(lhs, rhs, constant(params, -1));
            if (!lhs.empty())
                out.push_back("psi^(" + std::to_string(h) + ") not a chain map at s=" + std::to_string(s) +
                              " on " + BasisElement::koszul(h, W).str());
        }
    return out;
}

namespace {

bool composes_to_zero(const ASParams& params, const SignConvention& signs, ConeBuild& build) {
    build.steps.clear();
    build.signs = signs;
    Complex c = build_step_complex(params, 0, signs);
    if (!composition_defects(c).empty()) return false;
    build.steps.push_back(c);
    for (int h = 1; h <= params.levels(); ++h) {
        if (!chain_map_defects(params, h, signs).empty()) return false;
        c = extend_cone(c, h, signs);
        build.steps.push_back(c);
    }
    if (!composition_defects(c).empty()) return false;
    build.complex = std::move(c);
    return true;
}

} // namespace

ConeBuild build_cone_complex(const ASParams& params) {
    ConeBuild build;
    bool found = false;
    const unsigned knobs = kSignKnobCount;
    for (unsigned size = 0; size <= knobs && !found; ++size) {
        // Subsets of the given size in lexicographic order of knob index.
        std::vector<bool> pick(knobs, false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            SignConvention signs;
            for (unsigned k = 0; k < knobs; ++k) signs.flipped[k] = pick[k];
            if (composes_to_zero(params, signs, build)) {
                found = true;
                break;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    if (!found)
        throw Error(ErrorKind::construction_bug,
                    "no sign convention makes the cone a complex for " + params.label());

    auto defects = homogeneity_defects(build.complex);
    if (!defects.empty()) throw Error(ErrorKind::construction_bug, defects.front().detail);
    for (int s = 2; s <= params.n + 1; ++s)
        if (long(build.complex.module(s).rank()) != cone_rank_formula(params, s))
            throw Error(ErrorKind::construction_bug, "rank of C_" + std::to_string(s) + " disagrees with the formula");
    return build;
}

} // namespace asres
