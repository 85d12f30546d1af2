#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mui/weyl.hpp"

using namespace mui;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("Cartan data and Coxeter exponents") {
    RootDatum a2 = datum_A(2, Lattice::Root);
    CHECK(a2.cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(coxeter_m(a2, 0, 1) == 3);

    RootDatum f4 = datum_F4();
    CHECK(f4.cartan[2][1] == -2);
    CHECK(coxeter_m(f4, 1, 2) == 4);
    CHECK(coxeter_m(f4, 0, 1) == 3);
    CHECK(coxeter_m(f4, 0, 2) == 2);
    CHECK(coxeter_m(f4, 2, 3) == 3);

    // E-series diagrams: node 2 hangs off node 4
    CHECK(datum_E6().cartan[1][3] == -1);
    CHECK(datum_E6().cartan[1][2] == 0);
    CHECK(datum_E7().rank == 7);
    CHECK(datum_E8().rank == 8);
}

TEST_CASE("reflection matrices satisfy the Coxeter relations") {
    struct {
        RootDatum rd;
        uint32_t p;
    } data[] = {
        {datum_A(2, Lattice::Root), 3},   {datum_A(4, Lattice::Root), 5},
        {datum_A(2, Lattice::Weight), 5}, {datum_F4(), 3},
        {datum_E6(), 3},                  {datum_E7(), 3},
        {datum_E8(), 5},
    };
    for (auto& [rd, p] : data) {
        auto rows = validate_reflections(rd, p);
        INFO(rd.label, " mod ", p);
        CHECK(all_pass(rows));
    }
}

TEST_CASE("enumerated reflection group orders") {
    auto order_of = [](const RootDatum& rd, uint32_t p) {
        return closure_order(reflection_matrices(rd, p));
    };
    CHECK(order_of(datum_A(2, Lattice::Root), 3) == 6);    // image of Sigma_3
    CHECK(order_of(datum_A(2, Lattice::Weight), 5) == 6);
    CHECK(order_of(datum_A(4, Lattice::Root), 5) == 120);  // image of Sigma_5
    CHECK(order_of(datum_F4(), 3) == 1152);                // |W(F_4)|
}

TEST_CASE("degree-0 invariants and lower bound statuses") {
    Poly known = known_part_series(case_by_name("pu3"), 12);
    auto table = weyl_invariant_dims(datum_A(2, Lattice::Root), 3, 12, known);
    REQUIRE(!table.empty());
    CHECK(table[0].degree == 0);
    CHECK(table[0].computed == 1);
    CHECK(table[0].status == "equal");
    // degree 2: the adjoint torus carries a linear mod-3 invariant matching y_2
    CHECK(table[1].computed == 1);
    for (const auto& w : table) CHECK(w.status != "VIOLATION");
    CHECK(all_pass(rows_from_weyl(table, "1.1")));
}

TEST_CASE("product of invariants stays invariant") {
    RootDatum rd = datum_A(2, Lattice::Root);
    uint32_t p = 3;
    KoszulCtx c(p, rd.rank);
    auto refl = reflection_matrices(rd, p);
    auto invariants_at = [&](int d) {
        DegreeSlice s = DegreeSlice::make(c, d, true);
        std::vector<SparseMap> maps;
        for (const MatrixGL& g : refl)
            maps.push_back(SparseMap::build(
                s, s, [&](const Element& x) { return apply_matrix(g, x) - x; }));
        GFMat init(p, s.dim(), s.dim());
        for (size_t i = 0; i < s.dim(); ++i) init.set(i, i, 1);
        return rows_as_elements(kernel_iterative(maps, s.dim(), p, std::move(init)), s);
    };
    auto a = invariants_at(4), b = invariants_at(6);
    DegreeSlice s10 = DegreeSlice::make(c, 10, true);
    GFMat span = span_matrix(invariants_at(10), s10);
    for (const Element& x : a)
        for (const Element& y : b)
            CHECK(in_span(span, s10.to_vec(x * y), p));
}

TEST_CASE("golden tables reproduce") {
    CHECK(weyl_table_csv(weyl_invariant_dims(
              datum_A(2, Lattice::Root), 3, 40,
              known_part_series(case_by_name("pu3"), 40))) ==
          slurp("data/golden/pu3.csv"));
    CHECK(weyl_table_csv(weyl_invariant_dims(
              datum_A(2, Lattice::Weight), 5, 40,
              geometric(4, 40) * geometric(6, 40))) ==
          slurp("data/golden/su3_p5.csv"));
}
