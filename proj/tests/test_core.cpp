#include <doctest.h>

#include "helpers.hpp"
#include "mui/groups.hpp"
#include "mui/slice.hpp"

using namespace mui;

namespace {

Element t(KoszulCtx c, int i) { return Element::variable(c, i); }
Element dt(KoszulCtx c, int i) { return Element::dvariable(c, i); }

// sign of the permutation sorting concat(I, J), by direct inversion count
int perm_sign(std::vector<int> v) {
    int inv = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inv;
    return (inv & 1) ? -1 : 1;
}

} // namespace

TEST_CASE("field context rejects bad moduli") {
    CHECK_THROWS(FieldCtx(2));
    CHECK_THROWS(FieldCtx(9));
    FieldCtx f(5);
    CHECK(f.inv(3) == 2);
    CHECK(f.pow(2, 4) == 1);
    CHECK(f.neg(0) == 0);
}

TEST_CASE("multiply: exterior square, transposition sign, mixed terms") {
    KoszulCtx c(3, 2);
    CHECK((dt(c, 1) * dt(c, 1)).is_zero());
    CHECK(dt(c, 2) * dt(c, 1) == -(dt(c, 1) * dt(c, 2)));
    Element lhs = (t(c, 1) * dt(c, 2)) * (t(c, 2) * dt(c, 1));
    Element rhs = -(t(c, 1) * t(c, 2) * dt(c, 1) * dt(c, 2));
    CHECK(lhs == rhs);
}

TEST_CASE("sign_interleave matches direct permutation signs") {
    CHECK(sign_interleave(std::vector<int>{}, std::vector<int>{0}) == 1);
    CHECK(sign_interleave(std::vector<int>{0}, std::vector<int>{1}) == 1);
    CHECK(sign_interleave(std::vector<int>{1}, std::vector<int>{0}) == -1);
    CHECK_THROWS(sign_interleave(std::vector<int>{0}, std::vector<int>{0}));
    // composition consistency for all disjoint triples in {0..3}
    for (uint8_t a = 0; a < 16; ++a)
        for (uint8_t b = 0; b < 16; ++b) {
            if (a & b) continue;
            std::vector<int> I, J;
            for (int i = 0; i < 4; ++i) {
                if (a & (1 << i)) I.push_back(i);
                if (b & (1 << i)) J.push_back(i);
            }
            std::vector<int> cat = I;
            cat.insert(cat.end(), J.begin(), J.end());
            CHECK(sign_interleave(a, b) == perm_sign(cat));
        }
}

TEST_CASE("multiply is associative and graded-commutative") {
    for (uint32_t p : {3u, 5u}) {
        for (int n : {2, 3}) {
            KoszulCtx c(p, n);
            std::mt19937 rng(12345 + p + uint32_t(n));
            for (int trial = 0; trial < 60; ++trial) {
                int da = 1 + int(rng() % 6), db = 1 + int(rng() % 6), dc = 1 + int(rng() % 4);
                Element a = testutil::random_homogeneous(c, da, rng);
                Element b = testutil::random_homogeneous(c, db, rng);
                Element e = testutil::random_homogeneous(c, dc, rng);
                CHECK((a * b) * e == a * (b * e));
                Element ba = b * a;
                if ((da * db) & 1) ba = -ba;
                CHECK(a * b == ba);
            }
        }
    }
}

TEST_CASE("apply_matrix examples") {
    KoszulCtx c(3, 2);
    Element u2 = dt(c, 1) * dt(c, 2);
    MatrixGL id = MatrixGL::identity(3, 2);
    CHECK(apply_matrix(id, t(c, 1) + u2) == t(c, 1) + u2);

    MatrixGL swap(3, 2);
    swap.set(0, 1, 1);
    swap.set(1, 0, 1);
    CHECK(apply_matrix(swap, u2) == -u2);

    MatrixGL trans = MatrixGL::identity(3, 2);
    trans.set(0, 1, 1); // t_1 -> t_1 + t_2
    CHECK(apply_matrix(trans, u2) == u2);
    CHECK(apply_matrix(trans, t(c, 1)) == t(c, 1) + t(c, 2));

    MatrixGL sing(3, 2);
    CHECK_THROWS(apply_matrix(sing, u2));
}

TEST_CASE("apply_matrix is a degree-preserving algebra action") {
    for (uint32_t p : {3u, 5u}) {
        KoszulCtx c(p, 3);
        std::mt19937 rng(777 + p);
        auto random_gl = [&]() {
            while (true) {
                MatrixGL g(p, 3);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) g.set(i, j, rng() % p);
                if (g.det()) return g;
            }
        };
        for (int trial = 0; trial < 25; ++trial) {
            MatrixGL g = random_gl(), h = random_gl();
            Element x = testutil::random_homogeneous(c, 2 + int(rng() % 5), rng);
            Element y = testutil::random_homogeneous(c, 1 + int(rng() % 4), rng);
            // substitution along rows composes as a right action
            CHECK(apply_matrix(h * g, x) == apply_matrix(g, apply_matrix(h, x)));
            CHECK(apply_matrix(g, x * y) == apply_matrix(g, x) * apply_matrix(g, y));
            if (!x.is_zero()) CHECK(apply_matrix(g, x).degree() == x.degree());
        }
    }
}

TEST_CASE("slice enumeration") {
    CHECK(DegreeSlice::make(KoszulCtx(3, 1), 0).dim() == 1);
    DegreeSlice s2 = DegreeSlice::make(KoszulCtx(3, 2), 2);
    CHECK(s2.dim() == 3); // t_1, t_2, dt_1 dt_2
    DegreeSlice s3 = DegreeSlice::make(KoszulCtx(3, 2), 3);
    CHECK(s3.dim() == 4); // t_i dt_j
    // round trip
    KoszulCtx c(3, 2);
    Element x = Element::variable(c, 1).scaled(2) + Element::variable(c, 2);
    CHECK(s2.from_vec(s2.to_vec(x)) == x);
}

TEST_CASE("kernel_stacked examples and rank identity") {
    KoszulCtx c(3, 2);
    DegreeSlice s = DegreeSlice::make(c, 2);

    CHECK(kernel_stacked({}, s).rows() == s.dim());

    SparseMap ident = SparseMap::build(s, s, [](const Element& x) { return x; });
    CHECK(kernel_stacked({ident}, s).rows() == 0);

    MatrixGL swap(3, 2);
    swap.set(0, 1, 1);
    swap.set(1, 0, 1);
    SparseMap m = SparseMap::build(
        s, s, [&](const Element& x) { return apply_matrix(swap, x) - x; });
    // the swap scales dt_1 dt_2 by det = -1, so only t_1 + t_2 survives
    GFMat ker = kernel_stacked({m}, s);
    REQUIRE(ker.rows() == 1);
    CHECK(rows_as_elements(ker, s)[0] ==
          Element::variable(c, 1) + Element::variable(c, 2));

    // every kernel row is annihilated
    for (const Element& x : rows_as_elements(ker, s))
        CHECK((apply_matrix(swap, x) - x).is_zero());

    // dim kernel + rank = slice dimension
    GFMat a(3, s.dim(), s.dim());
    for (size_t j = 0; j < s.dim(); ++j)
        for (auto [tgt, v] : m.rows[j]) a.set(tgt, j, v);
    CHECK(ker.rows() + a.rank() == s.dim());
}

TEST_CASE("GFMat rref/kernel on a known matrix") {
    GFMat m(5, 2, 3);
    // rows: (1 2 3), (0 1 1) -> rank 2, kernel spanned by (4, 4, 1)
    m.set(0, 0, 1); m.set(0, 1, 2); m.set(0, 2, 3);
    m.set(1, 1, 1); m.set(1, 2, 1);
    CHECK(m.rank() == 2);
    GFMat k = m.kernel();
    REQUIRE(k.rows() == 1);
    uint32_t dot0 = (1 * k.at(0, 0) + 2 * k.at(0, 1) + 3 * k.at(0, 2)) % 5;
    uint32_t dot1 = (1 * k.at(0, 1) + 1 * k.at(0, 2)) % 5;
    CHECK(dot0 == 0);
    CHECK(dot1 == 0);
    CHECK(k.at(0, 2) != 0);
}

TEST_CASE("group generators and closure orders") {
    CHECK(closure_order(group_generators(Family::SLn, 2, 3).generators) == 24);
    CHECK(expected_order(Family::SLn, 2, 3) == 24);
    CHECK(closure_order(group_generators(Family::SLn, 2, 5).generators) == 120);
    CHECK(closure_order(group_generators(Family::SLn, 3, 3).generators) ==
          expected_order(Family::SLn, 3, 3));
    CHECK(closure_order(group_generators(Family::Gn, 3, 3).generators) ==
          expected_order(Family::Gn, 3, 3));
    CHECK(closure_order(group_generators(Family::GnPrime, 3, 3).generators) ==
          expected_order(Family::GnPrime, 3, 3));

    // every SL generator has determinant 1; every G_n generator fixes the
    // first-column shape (1,0,..,0)^T
    for (const auto& g : group_generators(Family::SLn, 3, 5).generators)
        CHECK(g.det() == 1);
    for (Family fam : {Family::Gn, Family::GnPrime})
        for (const auto& g : group_generators(fam, 4, 3).generators) {
            CHECK(g.at(0, 0) != 0);
            for (int i = 1; i < 4; ++i) CHECK(g.at(i, 0) == 0);
        }
}
