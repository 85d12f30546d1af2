#include <doctest.h>

#include "mui/serre.hpp"

using namespace mui;

TEST_CASE("E_2 page shape") {
    SerreReplay sr(case_by_name("pu3"), 40);
    Page e2 = sr.build_E2();
    REQUIRE(e2.pieces.size() == 3);

    // fiber factor S (1 + t^2 + t^4) at p = 3, m = 2
    Poly expect(40);
    expect.c[0] = expect.c[2] = expect.c[4] = 1;
    CHECK(e2.pieces[0].fiber == expect);

    // bottom row of E_2 restricts to M_0 + M_1 (+ the kernel symbol)
    Poly m0 = series_M(sr.spec(), ModulePart::M0, 40);
    Poly m1 = series_M(sr.spec(), ModulePart::M1, 40);
    Poly bottom(40);
    for (const Piece& pc : e2.pieces)
        if (!pc.over_kernel && pc.fiber.at(0)) bottom = bottom + pc.module;
    CHECK(bottom == m0 + m1);

    // total = (M_0 + M_1 + K) S Phi_p
    SymSeries tot = e2.total(40);
    CHECK(tot[Symbol::S] == (m0 + m1) * e2.pieces[0].fiber);
    CHECK(tot[Symbol::KS] == e2.pieces[0].fiber);
    CHECK(tot[Symbol::One] == Poly(40));
}

TEST_CASE("page transitions keep the kernel and stay nonnegative") {
    for (const CaseSpec& cs : case_table()) {
        SerreReplay sr(cs, 120);
        Page em2 = sr.apply_first_differential();
        Page en2 = sr.apply_second_differential();
        CHECK(em2.r == cs.m + 2);
        CHECK(en2.r == cs.m * int(cs.p - 1) + 2);
        CHECK(em2.total(120).nonnegative());
        CHECK(en2.total(120).nonnegative());
        CHECK(sr.build_E2().total(120)[Symbol::KS] == em2.total(120)[Symbol::KS]);
    }
}

TEST_CASE("E_{m+2} bottom row for PU(3)") {
    SerreReplay sr(case_by_name("pu3"), 60);
    Page em2 = sr.apply_first_differential();
    Poly bottom(60);
    for (const Piece& pc : em2.pieces)
        if (!pc.over_kernel && pc.fiber.at(0)) bottom = bottom + pc.module;
    Poly expect = series_M(sr.spec(), ModulePart::M0, 60) +
                  series_M(sr.spec(), ModulePart::M1EvenModEk, 60);
    CHECK(bottom == expect);
}

TEST_CASE("full replay passes for all five cases to D = 200") {
    for (const CaseSpec& cs : case_table()) {
        SerreReplay sr(cs, 200);
        auto rows = sr.run();
        for (const CheckRow& r : rows) {
            INFO(cs.name, ": ", r.statement);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("bottom row known part is even and matches both presentations") {
    SerreReplay sr(case_by_name("f4"), 100);
    Poly bottom = sr.einfty_bottom_known();
    CHECK(bottom.at(0) == 1);
    for (size_t d = 1; d <= 100; d += 2) CHECK(bottom.at(d) == 0);
    // lowest positive-degree contribution is y_8 y_... : the even generators
    // of M_1 are degrees 4 and 8, so t^4 appears
    CHECK(bottom.at(4) == 1);
}
