#pragma once

#include "mui/bgmodel.hpp"

namespace mui {

// Which lattice carries the torus characters: the root lattice (adjoint
// torus, the PU cases) or the weight lattice (simply connected groups).
enum class Lattice { Root, Weight };

// Cartan matrix plus lattice convention; the reflection matrices it
// generates are validated against the Coxeter relations over F_p.
struct RootDatum {
    std::string label;
    int rank = 0;
    // cartan[i][j] = pairing of the j-th simple root with the i-th coroot
    std::vector<std::vector<int>> cartan;
    Lattice lattice = Lattice::Root;
};

RootDatum datum_A(int rank, Lattice lattice);
RootDatum datum_F4();
RootDatum datum_E6();
RootDatum datum_E7();
RootDatum datum_E8();

// Coxeter exponent m_ij from the off-diagonal product of the Cartan matrix.
int coxeter_m(const RootDatum& rd, int i, int j);

// Simple reflections on the chosen lattice basis, reduced mod p.
std::vector<MatrixGL> reflection_matrices(const RootDatum& rd, uint32_t p);

// s_i^2 = 1 and (s_i s_j)^{m_ij} = 1 over F_p; for rank <= 4 also the
// order of the generated matrix group by closure enumeration.
std::vector<CheckRow> validate_reflections(const RootDatum& rd, uint32_t p);

struct WeylRow {
    int degree = 0;
    int64_t computed = 0;
    int64_t known = 0;
    std::string status; // equal | excess | VIOLATION
};

// dim of the W-fixed subspace of F_p[t_1..t_r] in one even degree
WeylRow weyl_invariant_dim_at(const RootDatum& rd, uint32_t p, int degree,
                              int64_t known);

// the same for each even degree <= D, against the known lower bound series
// (coefficient list indexed by degree).
std::vector<WeylRow> weyl_invariant_dims(const RootDatum& rd, uint32_t p, int D,
                                         const Poly& known);

// Known part of the main theorem for a case: M_0^even/(e_k) + M_1^even/(e_k).
Poly known_part_series(const CaseSpec& cs, size_t trunc);

std::vector<CheckRow> rows_from_weyl(const std::vector<WeylRow>& table,
                                     const std::string& ref);

// golden-file round trip: "degree,computed_dim,known_part,status" lines
std::string weyl_table_csv(const std::vector<WeylRow>& table);

} // namespace mui
