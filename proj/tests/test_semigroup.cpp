#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asres/error.hpp"
#include "asres/semigroup.hpp"
#include "helpers.hpp"

using namespace asres;

static ErrorKind kind_of(int m0, int d, int n) {
    try {
        make_params(m0, d, n);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error");
    return ErrorKind::construction_bug;
}

TEST_CASE("make_params examples") {
    auto p = make_params(3, 1, 2);
    CHECK(p.a == 1);
    CHECK(p.b == 1);
    CHECK(p.mu == 2);
    CHECK(p.m == std::vector<int>{3, 4, 5});
    CHECK(p.delta == std::vector<int>{10, 9});
    CHECK(p.label() == "<3,4,5>");

    auto q = make_params(7, 2, 3);
    CHECK(q.a == 2);
    CHECK(q.b == 1);
    CHECK(q.mu == 4);
    CHECK(q.m == std::vector<int>{7, 9, 11, 13});
    CHECK(q.delta == std::vector<int>{39, 37, 35});

    auto r = make_params(4, 1, 2);
    CHECK(r.a == 1);
    CHECK(r.b == 2);
    CHECK(r.mu == 2);
    CHECK(r.m == std::vector<int>{4, 5, 6});
    CHECK(r.delta == std::vector<int>{12});
    CHECK(r.levels() == 0);
}

TEST_CASE("make_params errors") {
    CHECK(kind_of(6, 2, 2) == ErrorKind::invalid_semigroup);
    CHECK(kind_of(2, 1, 2) == ErrorKind::out_of_hypothesis);
    CHECK(kind_of(3, 1, 1) == ErrorKind::out_of_hypothesis);
    CHECK(kind_of(3, 0, 2) == ErrorKind::domain);
    CHECK(kind_of(40, 1, 16) == ErrorKind::domain);
}

TEST_CASE("parameter invariants over the grid") {
    for (const auto& p : testing::grid(2, 6)) {
        CAPTURE(p.label());
        CHECK(p.m0 == p.a * p.n + p.b);
        CHECK(p.a >= 1);
        CHECK((p.b >= 1 && p.b <= p.n));
        CHECK(p.mu == p.a + p.d);
        CHECK(p.delta.size() == static_cast<std::size_t>(p.n - p.b + 1));
        CHECK(p.delta[0] == (p.a + 1) * p.m.back());
        for (int h = 0; h <= p.n - p.b; ++h) CHECK(p.delta_at(h) == p.delta[0] - h * p.d);
    }
}

TEST_CASE("membership examples") {
    auto p = make_params(3, 1, 2);
    CHECK_FALSE(contains(p, 2));
    CHECK(contains(p, 7));
    CHECK(contains(p, 0));
    CHECK_FALSE(contains(p, 1));
    CHECK_THROWS_AS(contains(p, -1), Error);
    MembershipTable t(p, 20);
    CHECK_THROWS_AS(t.contains(21), Error);
}

TEST_CASE("membership closure and Frobenius bound") {
    for (const auto& p : testing::grid(2, 4, 1, 3)) {
        const int bound = crude_frobenius_bound(p);
        MembershipTable t(p, 2 * bound + 10);
        CAPTURE(p.label());
        CHECK(t.contains(0));
        for (int w = 1; w < p.m0; ++w) CHECK_FALSE(t.contains(w));
        for (int w = bound; w <= bound + p.m0; ++w) CHECK(t.contains(w));
        for (int x = 0; x <= bound; x += 3)
            for (int y = 0; y <= bound; y += 5)
                if (t.contains(x) && t.contains(y)) CHECK(t.contains(x + y));
    }
}

TEST_CASE("membership agrees with brute force") {
    auto p = make_params(7, 2, 3);
    MembershipTable t(p, 120);
    for (int w = 0; w <= 120; ++w) {
        bool brute = false;
        for (int i = 0; i * 7 <= w && !brute; ++i)
            for (int j = 0; i * 7 + j * 9 <= w && !brute; ++j)
                for (int k = 0; i * 7 + j * 9 + k * 11 <= w && !brute; ++k)
                    if ((w - i * 7 - j * 9 - k * 11) % 13 == 0) brute = true;
        CHECK(t.contains(w) == brute);
    }
}
