#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asres/error.hpp"
#include "asres/generators.hpp"
#include "asres/rescomplex.hpp"
#include "helpers.hpp"
#include "wedge_identities.hpp"

using namespace asres;
using testing::P;
using testing::contraction_identity;
using testing::phi_boundary_identity;

namespace {


FormalSum en_sum(const ASParams& p, const std::vector<std::pair<BasisElement, std::string>>& items) {
    FormalSum out;
    for (const auto& [e, text] : items) add_to(out, e, P(text, p.nvars()));
    prune(out);
    return out;
}

BasisElement E(std::vector<int> t, int v0 = 0, int v1 = 0) { return BasisElement::en(false, std::move(t), v0, v1); }
BasisElement W0(std::vector<int> t, int v0 = 0, int v1 = 0) { return BasisElement::en(true, std::move(t), v0, v1); }

} // namespace

TEST_CASE("delta examples") {
    auto p = make_params(4, 1, 3);
    const int nv = p.nvars();
    CHECK(delta(p, 1, std::vector<int>{1, 3}) ==
          WedgeSum{{{3}, P("x1", nv)}, {{1}, P("-x3", nv)}});
    CHECK(delta(p, 0, std::vector<int>{2}) == WedgeSum{{{}, P("x1", nv)}});
    CHECK(delta(p, 0, std::vector<int>{1, 2, 3}) ==
          WedgeSum{{{2, 3}, P("x0", nv)}, {{1, 3}, P("-x1", nv)}, {{1, 2}, P("x2", nv)}});
}

TEST_CASE("wedge normalization") {
    std::vector<int> w{3, 1, 2};
    CHECK(normalize_wedge(w) == 1);
    CHECK(w == std::vector<int>{1, 2, 3});
    std::vector<int> v{2, 1};
    CHECK(normalize_wedge(v) == -1);
    std::vector<int> r{1, 2, 1};
    CHECK(normalize_wedge(r) == 0);
}

TEST_CASE("Eagon-Northcott modules and differentials") {
    auto p = make_params(4, 1, 3);
    CHECK(en_module(p, 1).rank() == 3);
    CHECK(en_module(p, 2).rank() == 2);
    auto q = make_params(3, 1, 2);
    CHECK(en_image(q, E({1, 2})) == en_sum(q, {{BasisElement::unit(false), "x0*x2 - x1^2"}}));
    CHECK(en_image(p, E({1, 2, 3}, 1, 0)) ==
          en_sum(p, {{E({2, 3}), "x0"}, {E({1, 3}), "-x1"}, {E({1, 2}), "x2"}}));
    for (const auto& par : testing::grid(2, 6, 1, 1)) {
        for (int s = 1; s <= par.n - 1; ++s)
            CHECK(en_module(par, s).rank() == static_cast<std::size_t>(s * binomial(par.n, s + 1)));
    }
}

TEST_CASE("Koszul modules and differentials") {
    auto p = make_params(4, 1, 3);
    CHECK(koszul_module(p, 2, 1).rank() == 3);
    const int nv = p.nvars();
    FormalSum img = cone_image(p, BasisElement::koszul(2, {2}));
    CHECK(img.at(BasisElement::koszul(2, {})) == P("x2", nv));
    FormalSum img2 = cone_image(p, BasisElement::koszul(1, {1, 2}));
    CHECK(img2.at(BasisElement::koszul(1, {2})) == P("x1", nv));
    CHECK(img2.at(BasisElement::koszul(1, {1})) == P("-x2", nv));
    auto d = koszul_differential(p, 2, 1);
    CHECK(d.rows() == 3);
    CHECK(d.cols() == 3);
}

TEST_CASE("phi examples") {
    auto p = make_params(3, 1, 2);
    CHECK(phi(p, 1, 1, {1}) == en_sum(p, {{E({1, 2}), "-x2"}}));
    CHECK(phi(p, 1, 1, {2}) == en_sum(p, {{E({1, 2}), "-x0^2"}}));
    auto q = make_params(4, 1, 3);
    CHECK(phi(q, 2, 1, {3}) == en_sum(q, {{E({2, 3}), "x3"}, {E({1, 3}), "-x0^2"}}));
    // k = h term with n in W collapses.
    CHECK(phi(q, 1, 1, {3}) == en_sum(q, {{E({2, 3}), "-x0^2"}}));
}

TEST_CASE("psi examples on <3,4,5>") {
    auto p = make_params(3, 1, 2);
    FormalSum psi11 = psi(p, 1, 1, {1});
    CHECK(psi11 == en_sum(p, {{BasisElement::unit(true), "x0"}, {E({1, 2}), "-x2"}}));
    FormalSum psi21 = psi(p, 1, 2, {1, 2});
    CHECK(psi21 == en_sum(p, {{W0({1, 2}), "-1"}}));
}

TEST_CASE("psi has a unit component exactly when s >= h + 1") {
    for (const auto& p : testing::grid(3, 5, 1, 2)) {
        ConeBuild b = build_cone_complex(p);
        for (int h = 1; h <= p.levels(); ++h)
            for (int s = 1; s <= p.n; ++s)
                for (const auto& w : subsets(p.n, s)) {
                    FormalSum img = psi(p, h, s, w, b.signs);
                    int units = 0;
                    for (const auto& [e, c] : img)
                        if (e.tag == BasisTag::en && e.shifted && c.is_unit()) ++units;
                    CHECK(units == (s >= h + 1 ? 1 : 0));
                }
    }
}

TEST_CASE("cone differential examples on <3,4,5>") {
    auto p = make_params(3, 1, 2);
    ConeBuild b = build_cone_complex(p);
    const Complex& c = b.complex;
    CHECK(c.ranks() == std::vector<std::size_t>{1, 3, 3, 1});
    const auto& d1 = c.differential(1);
    REQUIRE(d1.cols() == 3);
    CHECK(d1.at(0, 0, 3) == P("x1*x2 - x0^3", 3));
    CHECK(d1.at(0, 1, 3) == P("x2^2 - x0^2*x1", 3));
    CHECK(d1.at(0, 2, 3) == P("x0*x2 - x1^2", 3));
    FormalSum d2 = cone_image(p, W0({1, 2}), b.signs);
    CHECK(d2 == en_sum(p, {{BasisElement::unit(true), "x0*x2 - x1^2"}, {E({1, 2}), "x0^2*x1 - x2^2"}}));
    FormalSum d3 = cone_image(p, BasisElement::koszul(1, {1, 2}), b.signs);
    CHECK(d3 == en_sum(p, {{BasisElement::koszul(1, {2}), "x1"},
                           {BasisElement::koszul(1, {1}), "-x2"},
                           {W0({1, 2}), "-1"}}));
}

TEST_CASE("cone ranks") {
    CHECK(build_cone_complex(make_params(4, 1, 3)).complex.module(2).rank() == 11);
    CHECK(build_cone_complex(make_params(4, 1, 2)).complex.ranks() == std::vector<std::size_t>{1, 2, 1, 0});
    for (const auto& p : testing::grid(2, 6)) {
        CAPTURE(p.label());
        const Complex c = build_cone_complex(p).complex;
        REQUIRE(c.length() == p.n + 1);
        long euler = 0;
        for (int s = 0; s <= c.length(); ++s) euler += (s % 2 ? -1 : 1) * static_cast<long>(c.module(s).rank());
        CHECK(euler == 0);
        // The closed form omits epsilon_0 at s = 1.
        CHECK(static_cast<long>(c.module(1).rank()) == cone_rank_formula(p, 1) + 1);
        for (int s = 2; s <= p.n + 1; ++s) CHECK(static_cast<long>(c.module(s).rank()) == cone_rank_formula(p, s));
    }
}

TEST_CASE("basis order and weights") {
    auto p = make_params(7, 2, 3);
    const Complex c = build_cone_complex(p).complex;
    for (const auto& m : c.modules) {
        for (std::size_t i = 0; i + 1 < m.rank(); ++i) CHECK(m.at(i) < m.at(i + 1));
        for (std::size_t i = 0; i < m.rank(); ++i) {
            CHECK(m.weight(i) == basis_weight(p, m.at(i)));
            if (!(m.at(i) == BasisElement::unit(false))) CHECK(m.weight(i) > 0);
        }
    }
    CHECK(basis_weight(p, BasisElement::unit(true)) == p.delta_at(0));
    CHECK(basis_weight(p, BasisElement::koszul(2, {})) == p.delta_at(2));
    CHECK(basis_weight(p, BasisElement::koszul(1, {1, 3})) == p.delta_at(1) + 9 + 13);
    CHECK(basis_weight(p, E({1, 2, 3}, 0, 1)) == 9 + 11 + 13 - 2 * 2 + 2);
    CHECK(basis_weight(p, W0({1, 2}, 0, 0)) == p.delta_at(0) + 9 + 11 - 2);
}

TEST_CASE("composition and homogeneity over the grid") {
    for (const auto& p : testing::grid(2, 6)) {
        CAPTURE(p.label());
        ConeBuild b = build_cone_complex(p);
        CHECK(composition_defects(b.complex).empty());
        CHECK(homogeneity_defects(b.complex).empty());
        REQUIRE(b.steps.size() == static_cast<std::size_t>(p.levels() + 1));
        for (const auto& step : b.steps) CHECK(composition_defects(step).empty());
        for (int h = 1; h <= p.levels(); ++h) CHECK(chain_map_defects(p, h, b.signs).empty());
    }
}

TEST_CASE("default signs need exactly one flip once there are two Koszul levels") {
    for (const auto& p : testing::grid(2, 5, 1, 2)) {
        CAPTURE(p.label());
        ConeBuild b = build_cone_complex(p);
        if (p.levels() >= 2) {
            CHECK(b.signs.flipped_names() == std::vector<std::string>{knob_name(SignKnob::psi_1_h_delta0)});
            CHECK_FALSE(composition_defects(build_step_complex(p, p.levels(), SignConvention{})).empty());
        } else {
            CHECK(b.signs.flipped_names().empty());
        }
    }
}

TEST_CASE("wedge contraction identity: exhaustive for n <= 4") {
    for (int n = 2; n <= 4; ++n) {
        auto p = make_params(n + 1, 1, n);
        for (int q = 0; q <= 1; ++q)
            for (int size = 1; size <= n; ++size)
                for (const auto& w : subsets(n, size))
                    for (int k = 1; k <= n; ++k) {
                        auto [lhs, rhs] = contraction_identity(p, q, w, k);
                        CHECK(lhs == rhs);
                    }
    }
}

TEST_CASE("phi boundary identity: exhaustive for n <= 4") {
    std::size_t checked = 0;
    for (const auto& p : testing::grid(2, 4)) {
        for (int h = 1; h <= p.levels(); ++h)
            for (int s = 2; s <= p.n; ++s)
                for (const auto& w : subsets(p.n, s)) {
                    auto [lhs, rhs] = phi_boundary_identity(p, s, h, w);
                    CAPTURE(p.label());
                    CAPTURE(s);
                    CAPTURE(h);
                    CHECK(lhs == rhs);
                    ++checked;
                }
    }
    CHECK(checked > 0);
}

TEST_CASE("wedge identities: 200 random instances with n in {5, 6}") {
    auto params = testing::grid(5, 6);
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 200) {
        const auto& p = params[rng() % params.size()];
        if (p.levels() == 0) continue;
        const int h = 1 + static_cast<int>(rng() % static_cast<unsigned>(p.levels()));
        const int s = 2 + static_cast<int>(rng() % static_cast<unsigned>(p.n - 1));
        auto all = subsets(p.n, s);
        const auto& w = all[rng() % all.size()];
        auto [lhs, rhs] = phi_boundary_identity(p, s, h, w);
        CHECK(lhs == rhs);
        const int q = static_cast<int>(rng() % 2);
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(p.n));
        auto [l1, r1] = contraction_identity(p, q, w, k);
        CHECK(l1 == r1);
        ++done;
    }
}
