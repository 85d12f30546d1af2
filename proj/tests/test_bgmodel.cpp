#include <doctest.h>

#include "mui/bgmodel.hpp"

using namespace mui;

TEST_CASE("case table data") {
    CHECK(case_table().size() == 6);

    const CaseSpec& pu3 = case_by_name("pu3");
    REQUIRE(pu3.m1.size() == 2);
    CHECK(pu3.m1[0].deg == 3);
    CHECK(pu3.m1[1].deg == 2);
    CHECK(pu3.m == 2);
    CHECK(pu3.k == 2);

    const CaseSpec& e8 = case_by_name("e8");
    CHECK(e8.p == 5);
    CHECK(e8.m == 12);
    CHECK(e8.m0[1].deg == 52); // y_{2p^2+2}
    CHECK(e8.r_degs == std::vector<int>{240, 200, 62});

    const CaseSpec& e6 = case_by_name("e6");
    CHECK(e6.m0.size() == 8);
    CHECK(e6.m1.size() == 8);
    CHECK(e6.restrict_top == false);

    const CaseSpec& e7 = case_by_name("e7");
    CHECK(e7.restrict_top == true);
    CHECK(e7.r_degs == std::vector<int>{48, 36, 108, 26});

    const CaseSpec& f4 = case_by_name("f4");
    std::vector<int> m0d, m1d;
    for (auto& g : f4.m0) m0d.push_back(g.deg);
    for (auto& g : f4.m1) m1d.push_back(g.deg);
    CHECK(m0d == std::vector<int>{0, 20, 21, 25});
    CHECK(m1d == std::vector<int>{9, 29, 4, 8});

    CHECK_THROWS_AS(case_by_name("su2"), std::invalid_argument);
}

TEST_CASE("module part series") {
    const CaseSpec& pu3 = case_by_name("pu3");
    Poly m0 = series_M(pu3, ModulePart::M0, 60);
    CHECK(m0 == free_module_series({8, 12}, {0, 7}, 60));

    const CaseSpec& f4 = case_by_name("f4");
    Poly q0 = series_M(f4, ModulePart::M0EvenModEk, 60);
    CHECK(q0 == free_module_series({36, 48}, {0, 20}, 60));

    // even parts vanish in odd degrees
    for (const CaseSpec& cs : case_table()) {
        Poly q1 = series_M(cs, ModulePart::M1EvenModEk, 81);
        for (size_t d = 1; d <= 81; d += 2) CHECK(q1.at(d) == 0);
    }

    // M_0 = M_0^even + M_0^odd
    for (const CaseSpec& cs : case_table()) {
        Poly whole = series_M(cs, ModulePart::M0, 80);
        Poly split = series_M(cs, ModulePart::M0Even, 80) +
                     series_M(cs, ModulePart::M0Odd, 80);
        CHECK(whole == split);
    }
}

TEST_CASE("restriction images match the named invariants") {
    CaseModel pu(case_by_name("pu3"));
    CHECK(pu.m1_images()[1] == pu.fm().gen(0)); // y_2 -> u_2
    CHECK(pu.m1_images()[0] == pu.fm().gen(0b01)); // y_3 -> Q_0 u_2
    CHECK(pu.m0_images()[1] == pu.fm().gen(0b10)); // y_7 -> Q_1 u_2
    CHECK(all_pass(pu.invariance_report()));

    CaseModel f4(case_by_name("f4"));
    CHECK(f4.m1_images()[2] == f4.fm().gen(0b001)); // y_4 -> Q_0 u_3
    CHECK(f4.y_m1_image().degree() == 9);
    CHECK(all_pass(f4.invariance_report()));

    CaseModel e6(case_by_name("e6"));
    CHECK(e6.m1_images()[4] == e6.fm().gen(0b0011)); // y_10 -> Q_0 Q_1 u_4
    CHECK(e6.m1_images()[5] == e6.fm().gen(0b1001)); // y_4 -> Q_0 u_3
    CHECK(all_pass(e6.invariance_report()));

    CaseModel e7(case_by_name("e7"));
    CHECK(e7.m1_images()[2] == e7.fm().gen(0b1001));
    CHECK(all_pass(e7.invariance_report()));

    CaseModel e8(case_by_name("e8"));
    CHECK(all_pass(e8.invariance_report()));
}

TEST_CASE("image module checks at reduced depth") {
    {
        CaseModel cm(case_by_name("pu3"));
        auto rows = check_prop_image(cm, 24);
        CHECK(all_pass(rows));
    }
    {
        CaseModel cm(case_by_name("f4"));
        CHECK(all_pass(check_prop_image(cm, 20)));
    }
}

TEST_CASE("Steenrod closure at reduced depth") {
    {
        CaseModel cm(case_by_name("pu3"));
        CHECK(all_pass(steenrod_closure_check(cm, 24)));
    }
    {
        CaseModel cm(case_by_name("f4"));
        auto rows = steenrod_closure_check(cm, 20);
        CHECK(all_pass(rows));
        // the degree-8 closure slice contains P^1 Q_0 u_3
        Element y8 = reduced_power(1, cm.fm().gen(0b001));
        DegreeSlice s = DegreeSlice::make(cm.fm().ctx(), 8);
        GFMat span = span_matrix(cm.image_span(ModulePart::M1, 8), s);
        CHECK(in_span(span, s.to_vec(y8), 3));
    }
}
