#include "mui/weyl.hpp"

#include <sstream>

#include "mui/groups.hpp"

namespace mui {

namespace {

CheckRow make_row(int degree, std::string statement, std::string expected,
                  std::string computed, bool pass, std::string ref) {
    CheckRow r;
    r.degree = degree;
    r.statement = std::move(statement);
    r.expected = std::move(expected);
    r.computed = std::move(computed);
    r.pass = pass;
    r.ref = std::move(ref);
    return r;
}

RootDatum simply_laced(std::string label, int rank,
                       const std::vector<std::pair<int, int>>& edges,
                       Lattice lattice) {
    RootDatum rd;
    rd.label = std::move(label);
    rd.rank = rank;
    rd.lattice = lattice;
    rd.cartan.assign(size_t(rank), std::vector<int>(size_t(rank), 0));
    for (int i = 0; i < rank; ++i) rd.cartan[size_t(i)][size_t(i)] = 2;
    for (auto [a, b] : edges) { // 1-based node labels
        rd.cartan[size_t(a - 1)][size_t(b - 1)] = -1;
        rd.cartan[size_t(b - 1)][size_t(a - 1)] = -1;
    }
    return rd;
}

} // namespace

RootDatum datum_A(int rank, Lattice lattice) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < rank; ++i) edges.push_back({i, i + 1});
    return simply_laced("A_" + std::to_string(rank), rank, edges, lattice);
}

RootDatum datum_F4() {
    RootDatum rd;
    rd.label = "F_4";
    rd.rank = 4;
    rd.lattice = Lattice::Root; // self-dual
    rd.cartan = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    return rd;
}

RootDatum datum_E6() {
    return simply_laced("E_6", 6, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}},
                        Lattice::Weight);
}

RootDatum datum_E7() {
    return simply_laced("E_7", 7,
                        {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}},
                        Lattice::Weight);
}

RootDatum datum_E8() {
    return simply_laced("E_8", 8,
                        {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}},
                        Lattice::Root); // self-dual
}

int coxeter_m(const RootDatum& rd, int i, int j) {
    if (i == j) return 1;
    switch (rd.cartan[size_t(i)][size_t(j)] * rd.cartan[size_t(j)][size_t(i)]) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: throw std::invalid_argument("coxeter_m: bad Cartan entry");
    }
}

std::vector<MatrixGL> reflection_matrices(const RootDatum& rd, uint32_t p) {
    const int r = rd.rank;
    auto modp = [&](int v) { return uint32_t(((v % int(p)) + int(p)) % int(p)); };
    std::vector<MatrixGL> out;
    for (int i = 0; i < r; ++i) {
        MatrixGL g = MatrixGL::identity(p, r);
        if (rd.lattice == Lattice::Root) {
            // s_i(a_j) = a_j - C[i][j] a_i
            for (int j = 0; j < r; ++j)
                g.set(j, i, modp((i == j ? 1 : 0) - rd.cartan[size_t(i)][size_t(j)]));
        } else {
            // s_i(w_j) = w_j - d_ij a_i with a_i = sum_j C[j][i] w_j
            for (int j = 0; j < r; ++j)
                g.set(i, j, modp((i == j ? 1 : 0) - rd.cartan[size_t(j)][size_t(i)]));
        }
        out.push_back(g);
    }
    return out;
}

std::vector<CheckRow> validate_reflections(const RootDatum& rd, uint32_t p) {
    std::vector<CheckRow> rows;
    auto refl = reflection_matrices(rd, p);
    MatrixGL id = MatrixGL::identity(p, rd.rank);
    for (int i = 0; i < rd.rank; ++i)
        rows.push_back(make_row(
            -1, rd.label + " s_" + std::to_string(i + 1) + "^2 = 1", "true",
            refl[size_t(i)] * refl[size_t(i)] == id ? "true" : "false",
            refl[size_t(i)] * refl[size_t(i)] == id, "Coxeter"));
    for (int i = 0; i < rd.rank; ++i)
        for (int j = i + 1; j < rd.rank; ++j) {
            int m = coxeter_m(rd, i, j);
            MatrixGL prod = refl[size_t(i)] * refl[size_t(j)];
            MatrixGL acc = prod;
            for (int t = 1; t < m; ++t) acc = acc * prod;
            bool ok = acc == id;
            rows.push_back(make_row(-1,
                                    rd.label + " (s_" + std::to_string(i + 1) +
                                        "s_" + std::to_string(j + 1) + ")^" +
                                        std::to_string(m) + " = 1",
                                    "true", ok ? "true" : "false", ok, "Coxeter"));
        }
    if (rd.rank <= 4) {
        auto order = closure_order(refl);
        rows.push_back(make_row(
            -1, rd.label + " mod " + std::to_string(p) + " matrix group order",
            order ? std::to_string(*order) : "overflow",
            order ? std::to_string(*order) : "overflow", bool(order),
            "closure enumeration"));
    }
    return rows;
}

WeylRow weyl_invariant_dim_at(const RootDatum& rd, uint32_t p, int degree,
                              int64_t known) {
    KoszulCtx c(p, rd.rank);
    auto refl = reflection_matrices(rd, p);
    DegreeSlice s = DegreeSlice::make(c, degree, /*poly_only=*/true);
    std::vector<SparseMap> maps;
    for (const MatrixGL& g : refl)
        maps.push_back(SparseMap::build(
            s, s, [&](const Element& x) { return apply_matrix(g, x) - x; }));
    GFMat init(p, s.dim(), s.dim());
    for (size_t i = 0; i < s.dim(); ++i) init.set(i, i, 1);
    GFMat ker = kernel_iterative(maps, s.dim(), p, std::move(init));
    WeylRow row;
    row.degree = degree;
    row.computed = int64_t(ker.rows());
    row.known = known;
    row.status = row.computed == row.known ? "equal"
                 : row.computed > row.known ? "excess"
                                            : "VIOLATION";
    return row;
}

std::vector<WeylRow> weyl_invariant_dims(const RootDatum& rd, uint32_t p, int D,
                                         const Poly& known) {
    std::vector<WeylRow> table;
    for (int d = 0; d <= D; d += 2)
        table.push_back(weyl_invariant_dim_at(rd, p, d, known.at(size_t(d))));
    return table;
}

Poly known_part_series(const CaseSpec& cs, size_t trunc) {
    return series_M(cs, ModulePart::M0EvenModEk, trunc) +
           series_M(cs, ModulePart::M1EvenModEk, trunc);
}

std::vector<CheckRow> rows_from_weyl(const std::vector<WeylRow>& table,
                                     const std::string& ref) {
    std::vector<CheckRow> rows;
    for (const WeylRow& w : table)
        rows.push_back(make_row(w.degree,
                                "dim H^" + std::to_string(w.degree) +
                                    "(BT)^W >= known part (" + w.status + ")",
                                ">= " + std::to_string(w.known),
                                std::to_string(w.computed),
                                w.status != "VIOLATION", ref));
    return rows;
}

std::string weyl_table_csv(const std::vector<WeylRow>& table) {
    std::ostringstream os;
    os << "degree,computed_dim,known_part,status\n";
    for (const WeylRow& w : table)
        os << w.degree << "," << w.computed << "," << w.known << "," << w.status
           << "\n";
    return os.str();
}

} // namespace mui
