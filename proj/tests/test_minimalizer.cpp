#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "asres/checker.hpp"
#include "asres/generators.hpp"
#include "asres/minimalizer.hpp"
#include "asres/rescomplex.hpp"
#include "helpers.hpp"

using namespace asres;

namespace {

MinimalComplex minimal_of(const ASParams& p) { return minimalize(build_cone_complex(p).complex); }

std::vector<std::size_t> betti(const Complex& c) {
    std::vector<std::size_t> out;
    for (int s = 1; s <= c.length(); ++s) out.push_back(c.module(s).rank());
    return out;
}

} // namespace

TEST_CASE("<3,4,5>: one cancellation at s = 2") {
    auto p = make_params(3, 1, 2);
    auto m = minimal_of(p);
    REQUIRE(m.provenance.size() == 1);
    const auto& st = m.provenance[0];
    CHECK(st.s == 2);
    CHECK(st.source == BasisElement::koszul(1, {1, 2}));
    CHECK(st.target == BasisElement::en(true, {1, 2}, 0, 0));
    CHECK(st.unit == Rational(-1));
    CHECK(betti(m.complex) == std::vector<std::size_t>{3, 2});
    CHECK(m.complex.length() == 2);
}

TEST_CASE("<4,5,6>: the Eagon-Northcott part is already minimal") {
    auto m = minimal_of(make_params(4, 1, 2));
    CHECK(m.provenance.empty());
    CHECK(betti(m.complex) == std::vector<std::size_t>{2, 1});
}

TEST_CASE("<4,5,6,7>") {
    auto p = make_params(4, 1, 3);
    auto m = minimal_of(p);
    long pairs = 0;
    for (int s = 0; s <= p.n; ++s) pairs += expected_cancellations(p, s);
    CHECK(static_cast<long>(m.provenance.size()) == pairs);
    CHECK(betti(m.complex) == std::vector<std::size_t>{6, 8, 3});
}

TEST_CASE("expected_pruned_dims examples") {
    CHECK(expected_pruned_dims(make_params(3, 1, 2), 2) == 1);
    for (int s = 1; s <= 3; ++s) CHECK(expected_pruned_dims(make_params(4, 1, 2), s) == 0);
    CHECK(expected_pruned_dims(make_params(4, 1, 3), 3) == 5);
    CHECK(expected_pruned_dims(make_params(4, 1, 3), 1) == 0);
    CHECK(nu(make_params(4, 1, 3), 3) == 2);
}

TEST_CASE("pruning over the grid") {
    for (const auto& p : testing::grid(2, 6)) {
        CAPTURE(p.label());
        const Complex cone = build_cone_complex(p).complex;
        auto m = minimalize(cone);
        const Complex& r = m.complex;
        CHECK(unit_entries(r).empty());
        CHECK(composition_defects(r).empty());
        CHECK(homogeneity_defects(r).empty());
        CHECK(r.length() == p.n);
        for (int s = 1; s <= p.n + 1; ++s) {
            long kept = s <= r.length() ? static_cast<long>(r.module(s).rank()) : 0;
            CHECK(static_cast<long>(cone.module(s).rank()) - kept == expected_pruned_dims(p, s));
        }
        std::vector<long> per_s(static_cast<std::size_t>(p.n) + 1, 0);
        for (const auto& st : m.provenance) {
            CHECK(matches_structural_prediction(st));
            ++per_s.at(static_cast<std::size_t>(st.s));
        }
        for (int s = 0; s <= p.n; ++s) CHECK(per_s[static_cast<std::size_t>(s)] == expected_cancellations(p, s));
        if (p.b == p.n) CHECK(m.provenance.empty());
        // d_2 of the cone has no unit entries.
        for (const auto& u : unit_entries(cone)) CHECK(u.position != 2);
    }
}

TEST_CASE("surviving generators in the first and last positions") {
    for (const auto& p : testing::grid(2, 6, 1, 3)) {
        CAPTURE(p.label());
        auto r = minimal_of(p).complex;
        // R_1 carries the generators of I with their weights.
        std::vector<long> w1 = r.module(1).weights(), gens;
        for (const auto& g : build_generators(p).g) gens.push_back(g.weight);
        for (const auto& f : build_generators(p).f) gens.push_back(f.weight);
        std::sort(w1.begin(), w1.end());
        std::sort(gens.begin(), gens.end());
        CHECK(w1 == gens);
        // R_2: every Koszul e_i at every level plus all of E_2.
        if (p.levels() >= 1) {
            std::size_t koszul = 0, en = 0;
            for (const auto& e : r.module(2).basis()) {
                if (e.tag == BasisTag::koszul && e.indices.size() == 1) ++koszul;
                if (e.tag == BasisTag::en && !e.shifted && e.indices.size() == 3) ++en;
            }
            CHECK(koszul == static_cast<std::size_t>(p.levels() * p.n));
            CHECK(en == static_cast<std::size_t>(2 * binomial(p.n, 3)));
            CHECK(koszul + en == r.module(2).rank());
        }
        const auto& last = r.module(p.n);
        if (p.b >= 2) {
            REQUIRE(last.rank() == static_cast<std::size_t>(p.b - 1));
            std::vector<int> all;
            for (int i = 1; i <= p.n; ++i) all.push_back(i);
            for (int k = 0; k <= p.b - 2; ++k)
                CHECK(last.index_of(BasisElement::en(true, all, p.n - p.b + k, p.b - k - 2)).has_value());
        } else {
            REQUIRE(last.rank() == static_cast<std::size_t>(p.n));
            for (const auto& e : last.basis()) {
                CHECK(e.tag == BasisTag::koszul);
                CHECK(e.h == p.n - p.b);
                CHECK(e.indices.size() == static_cast<std::size_t>(p.n - 1));
            }
        }
    }
}

TEST_CASE("cancellation order does not change graded ranks") {
    for (const auto& p : testing::grid(2, 5, 1, 2)) {
        if (p.levels() == 0) continue;
        CAPTURE(p.label());
        const Complex cone = build_cone_complex(p).complex;
        const Complex base = minimalize(cone).complex;
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            MinimalizeOptions o;
            o.shuffle_seed = seed;
            const Complex r = minimalize(cone, o).complex;
            REQUIRE(r.length() == base.length());
            CHECK(unit_entries(r).empty());
            CHECK(composition_defects(r).empty());
            for (int s = 0; s <= r.length(); ++s) {
                auto a = r.module(s).weights(), b = base.module(s).weights();
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("minimalization is deterministic") {
    auto p = make_params(7, 2, 4);
    const Complex cone = build_cone_complex(p).complex;
    auto a = minimalize(cone), b = minimalize(cone);
    REQUIRE(a.provenance.size() == b.provenance.size());
    for (std::size_t i = 0; i < a.provenance.size(); ++i) {
        CHECK(a.provenance[i].source == b.provenance[i].source);
        CHECK(a.provenance[i].target == b.provenance[i].target);
    }
    for (int s = 1; s <= a.complex.length(); ++s) CHECK(a.complex.differential(s) == b.complex.differential(s));
}
