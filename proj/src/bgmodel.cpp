#include "mui/bgmodel.hpp"

#include <algorithm>

namespace mui {

namespace {

CaseSpec make_pu(uint32_t p) {
    CaseSpec cs;
    cs.name = "pu" + std::to_string(p);
    cs.label = "PU(" + std::to_string(p) + ")";
    cs.p = p;
    cs.m = 2;
    cs.k = 2;
    cs.rankA = 2;
    cs.ell = 1;
    cs.i = 0;
    cs.family = Family::SLn;
    int P = int(p);
    cs.r_degs = {2 * (P * P - P), 2 * (P + 1)}; // c_{2,1}, e_2
    cs.m0 = {{"1", 0}, {"y_" + std::to_string(2 * P + 1), 2 * P + 1}};
    cs.m1 = {{"y_3", 3}, {"y_2", 2}};
    cs.closure_gens = {"u_2", "c_{2,1}"};
    return cs;
}

CaseSpec make_rank3(const std::string& name, const std::string& label, uint32_t p) {
    CaseSpec cs;
    cs.name = name;
    cs.label = label;
    cs.p = p;
    int P = int(p);
    cs.m = 2 * P + 2;
    cs.k = 3;
    cs.rankA = 3;
    cs.ell = 2;
    cs.i = 1;
    cs.family = Family::SLn;
    // c_{3,1}, c_{3,2}, e_3
    cs.r_degs = {2 * (P * P * P - P), 2 * (P * P * P - P * P),
                 2 * (P * P * P - 1) / (P - 1)};
    auto y = [](int d) { return CaseSpec::Gen{"y_" + std::to_string(d), d}; };
    cs.m0 = {{"1", 0}, y(2 * P * P + 2), y(2 * P * P + 3), y(2 * P * P + 2 * P + 1)};
    cs.m1 = {y(2 * P + 3), {"y_" + std::to_string(2 * P + 3) + "y_" +
                                std::to_string(2 * P * P + 2),
                            2 * P * P + 2 * P + 5},
             y(4), y(2 * P + 2)};
    cs.closure_gens = {"Q_0u_3", "c_{3,1}", "c_{3,2}"};
    return cs;
}

CaseSpec make_rank4(const std::string& name, const std::string& label, bool prime_family) {
    CaseSpec cs;
    cs.name = name;
    cs.label = label;
    cs.p = 3;
    cs.m = 8;
    cs.k = 3;
    cs.rankA = 4;
    cs.ell = 2;
    cs.i = 2;
    cs.family = prime_family ? Family::GnPrime : Family::Gn;
    cs.restrict_top = prime_family;
    // c_{3,1}, c_{3,2}, f_4 (squared for the restricted case), e_3
    cs.r_degs = {48, 36, prime_family ? 108 : 54, 26};
    auto y = [](int d) { return CaseSpec::Gen{"y_" + std::to_string(d), d}; };
    auto prod = [](int a, int b) {
        return CaseSpec::Gen{"y_" + std::to_string(a) + "y_" + std::to_string(b), a + b};
    };
    if (!prime_family) {
        cs.m0 = {{"1", 0}, y(22),          y(26),         y(20),
                 {"Q_2y_10", 27}, {"Q_2y_4", 21}, {"Q_2y_8", 25}, {"Q_2y_30", 47}};
        cs.m1 = {y(9),  prod(9, 22), prod(9, 26), prod(9, 20),
                 y(10), y(4),        y(8),        y(30)};
        cs.closure_gens = {"Q_0u_3", "c_{3,1}", "c_{3,2}", "Q_0Q_1u_4", "f_4"};
    } else {
        cs.m0 = {{"1", 0}, y(20), {"Q_2y_4", 21}, {"Q_2y_8", 25}};
        cs.m1 = {y(9), prod(9, 20), y(4), y(8)};
        cs.closure_gens = {"Q_0u_3", "c_{3,1}", "c_{3,2}", "f_4^2"};
    }
    return cs;
}

CheckRow bool_row(int degree, std::string statement, bool ok, std::string ref) {
    CheckRow r;
    r.degree = degree;
    r.statement = std::move(statement);
    r.expected = "true";
    r.computed = ok ? "true" : "false";
    r.pass = ok;
    r.ref = std::move(ref);
    return r;
}

CheckRow dim_row(int degree, std::string statement, int64_t expected,
                 int64_t computed, std::string ref) {
    CheckRow r;
    r.degree = degree;
    r.statement = std::move(statement);
    r.expected = std::to_string(expected);
    r.computed = std::to_string(computed);
    r.pass = expected == computed;
    r.ref = std::move(ref);
    return r;
}

// canonical span data of homogeneous elements in one degree
struct DegSpan {
    DegreeSlice slice;
    GFMat rows;
    size_t dim() const { return rows.rows(); }
    bool contains(const Element& x) const {
        return in_span(rows, slice.to_vec(x), slice.ctx().p);
    }
    std::vector<Element> basis() const { return rows_as_elements(rows, slice); }
};

DegSpan make_span(KoszulCtx c, const std::vector<Element>& xs, int d) {
    DegSpan s;
    s.slice = DegreeSlice::make(c, d);
    s.rows = span_matrix(xs, s.slice);
    return s;
}

} // namespace

const std::vector<CaseSpec>& case_table() {
    static const std::vector<CaseSpec> table = {
        make_pu(3),
        make_pu(5),
        make_rank3("f4", "F_4", 3),
        make_rank3("e8", "E_8", 5),
        make_rank4("e6", "E_6", false),
        make_rank4("e7", "E_7", true),
    };
    return table;
}

const CaseSpec& case_by_name(const std::string& name) {
    for (const CaseSpec& cs : case_table())
        if (cs.name == name) return cs;
    throw std::invalid_argument("unknown case: " + name);
}

Poly series_M(const CaseSpec& cs, ModulePart part, size_t trunc) {
    const bool is_m0 = part == ModulePart::M0 || part == ModulePart::M0Even ||
                       part == ModulePart::M0Odd || part == ModulePart::M0EvenModEk;
    const bool mod_ek =
        part == ModulePart::M0EvenModEk || part == ModulePart::M1EvenModEk;
    const bool even_only = part != ModulePart::M0 && part != ModulePart::M1 &&
                           part != ModulePart::M0Odd;
    const bool odd_only = part == ModulePart::M0Odd;

    std::vector<int> gen_degs;
    for (const auto& g : is_m0 ? cs.m0 : cs.m1) {
        if (even_only && g.deg % 2 != 0) continue;
        if (odd_only && g.deg % 2 == 0) continue;
        gen_degs.push_back(g.deg);
    }
    std::vector<int> ring = cs.r_degs;
    if (mod_ek) ring.pop_back(); // e_k is listed last
    return free_module_series(ring, gen_degs, trunc);
}

CaseModel::CaseModel(const CaseSpec& cs)
    : cs_(cs), fm_(std::make_unique<FamilyModule>(cs.family, cs.rankA, cs.p)) {
    KoszulCtx c = fm_->ctx();
    const auto& rg = fm_->r_gens();
    Element one = Element::one(c);

    if (cs.name.rfind("pu", 0) == 0) {
        Element x2 = fm_->gen(0); // u_2
        Element x3 = milnor_q(0, x2);
        Element xtop = milnor_q(1, x2); // y_{2p+1}
        m0_ = {one, xtop};
        m1_ = {x3, x2};
        closure_ = {x2, rg[0].elem};
    } else if (cs.rankA == 3) {
        Element x4 = fm_->gen(0b001); // Q_0 u_3
        Element x2p2 = reduced_power(1, x4);
        Element x2p3 = -milnor_q(1, x4);
        Element xpp2 = reduced_power(int(cs.p), reduced_power(1, x4));
        Element xpp3 = -milnor_q(2, x4);
        Element xtop = -milnor_q(2, x2p2);
        m0_ = {one, xpp2, xpp3, xtop};
        m1_ = {x2p3, x2p3 * xpp2, x4, x2p2};
        closure_ = {x4, rg[0].elem, rg[1].elem};
    } else {
        // rank 4, p = 3
        Element x4 = fm_->gen(0b1001); // Q_0 u_3 inside the rank-4 algebra
        Element x9 = -milnor_q(1, x4);
        Element x8 = reduced_power(1, x4);
        Element x20 = reduced_power(3, x8);
        if (cs_.family == Family::Gn) {
            Element x10 = fm_->gen(0b0011); // Q_0 Q_1 u_4
            Element x22 = reduced_power(3, x10);
            Element x26 = reduced_power(1, x22);
            Element x30 = x10 * x20;
            m0_ = {one,
                   x22,
                   x26,
                   x20,
                   milnor_q(2, x10),
                   milnor_q(2, x4),
                   milnor_q(2, x8),
                   milnor_q(2, x30)};
            m1_ = {x9, x9 * x22, x9 * x26, x9 * x20, x10, x4, x8, x30};
            closure_ = {x4, rg[0].elem, rg[1].elem, x10, rg[2].elem};
        } else {
            m0_ = {one, x20, milnor_q(2, x4), milnor_q(2, x8)};
            m1_ = {x9, x9 * x20, x4, x8};
            closure_ = {x4, rg[0].elem, rg[1].elem, rg[2].elem};
        }
    }
    ym1_ = m1_[0];

    // every image must be homogeneous of the declared degree and fixed by
    // every group generator
    auto record = [&](const std::vector<Element>& xs,
                      const std::vector<CaseSpec::Gen>& gens, const char* part) {
        for (size_t j = 0; j < xs.size(); ++j) {
            bool ok = !xs[j].is_zero() && xs[j].degree() == gens[j].deg;
            for (const MatrixGL& g : fm_->group().generators)
                ok = ok && apply_matrix(g, xs[j]) == xs[j];
            invariance_.push_back(bool_row(
                gens[j].deg,
                std::string(part) + " image of " + gens[j].label + " is invariant",
                ok, cs_.label + " images"));
        }
    };
    record(m0_, cs_.m0, "M_0");
    record(m1_, cs_.m1, "M_1");
    for (const CheckRow& r : invariance_)
        if (!r.pass)
            throw std::logic_error("restriction image failed invariance: " +
                                   r.statement);
}

std::vector<Element> CaseModel::image_span(ModulePart part, int d) {
    const bool is_m0 = part == ModulePart::M0 || part == ModulePart::M0Even ||
                       part == ModulePart::M0Odd || part == ModulePart::M0EvenModEk;
    const bool mod_ek =
        part == ModulePart::M0EvenModEk || part == ModulePart::M1EvenModEk;
    const bool even_only = part != ModulePart::M0 && part != ModulePart::M1 &&
                           part != ModulePart::M0Odd;
    const bool odd_only = part == ModulePart::M0Odd;
    const auto& imgs = is_m0 ? m0_ : m1_;
    const auto& gens = is_m0 ? cs_.m0 : cs_.m1;
    std::vector<Element> out;
    for (size_t j = 0; j < imgs.size(); ++j) {
        int dg = gens[j].deg;
        if (even_only && dg % 2 != 0) continue;
        if (odd_only && dg % 2 == 0) continue;
        if (dg > d) continue;
        for (const Element& rm : fm_->r_monomials(d - dg, mod_ek))
            out.push_back(rm * imgs[j]);
    }
    return out;
}

std::vector<CheckRow> check_prop_image(CaseModel& cm, int maxdeg, const Cache* cache) {
    const CaseSpec& cs = cm.spec();
    FamilyModule& fm = cm.fm();
    KoszulCtx c = fm.ctx();
    std::vector<CheckRow> rows = cm.invariance_report();

    Poly s0 = series_M(cs, ModulePart::M0, size_t(maxdeg));
    Poly s1 = series_M(cs, ModulePart::M1, size_t(maxdeg));
    Poly q0 = series_M(cs, ModulePart::M0EvenModEk, size_t(maxdeg));
    Poly q1 = series_M(cs, ModulePart::M1EvenModEk, size_t(maxdeg));

    // the filtration-side prediction: the split along ell at stage i,
    // restricted to the top-index submodule for the e7 case
    SplitSpec sp = split(fm, cs.ell, cs.i);
    auto keep = [&](const std::pair<unsigned, int>& g) {
        if (!cs.restrict_top) return true;
        if (g.first == FamilyModule::kUnitGen) return true;
        return ((g.first >> (cs.rankA - 1)) & 1u) != 0;
    };
    std::vector<std::pair<unsigned, int>> expect;
    for (const auto& g : sp.n0_gens)
        if (keep(g)) expect.push_back(g);
    for (const auto& g : sp.n1_gens)
        if (keep(g)) expect.push_back(g);

    std::vector<DegSpan> I0, I1;
    I0.reserve(maxdeg + 1);
    I1.reserve(maxdeg + 1);
    for (int d = 0; d <= maxdeg; ++d) {
        I0.push_back(make_span(c, cm.image_span(ModulePart::M0, d), d));
        I1.push_back(make_span(c, cm.image_span(ModulePart::M1, d), d));
    }

    const int qshift = milnor_q(cs.k - 1, Element::dvariable(c, 1)).degree() - 1;

    for (int d = 0; d <= maxdeg; ++d) {
        rows.push_back(dim_row(d, "dim M_0 image matches its free-module series",
                               s0.at(size_t(d)), int64_t(I0[d].dim()), "4.1/4.3"));
        rows.push_back(dim_row(d, "dim M_1 image matches its free-module series",
                               s1.at(size_t(d)), int64_t(I1[d].dim()), "4.1/4.3"));

        std::vector<Element> both = I0[d].basis();
        for (const Element& b : I1[d].basis()) both.push_back(b);
        DegSpan u = make_span(c, both, d);
        rows.push_back(dim_row(d, "M_0 image + M_1 image is direct",
                               int64_t(I0[d].dim() + I1[d].dim()),
                               int64_t(u.dim()), "4.3(1)"));

        std::vector<Element> ex = fm.span_in_degree(expect, d);
        for (const Element& b : u.basis()) ex.push_back(b);
        size_t dim_ex = make_span(c, fm.span_in_degree(expect, d), d).dim();
        rows.push_back(dim_row(d, "image sum equals the filtration module",
                               int64_t(dim_ex), int64_t(u.dim()), "4.3(1)"));
        rows.push_back(dim_row(d, "image sum is contained in the filtration module",
                               int64_t(dim_ex), int64_t(make_span(c, ex, d).dim()),
                               "4.3(1)"));
        if (cs.family == Family::SLn && cs.rankA == 2)
            rows.push_back(dim_row(
                d, "image exhausts the invariant ring",
                int64_t(invariant_basis(fm.group(), d, cache).size()),
                int64_t(u.dim()), "4.3(1) epi"));

        // (2): multiplication by the image of y_{m+1}
        {
            int src = d - (cs.m + 1);
            size_t src_dim = 0;
            bool inj = true, cont = true;
            if (src >= 0) {
                std::vector<Element> img;
                for (const Element& b : I0[src].basis())
                    img.push_back(cm.y_m1_image() * b);
                src_dim = I0[src].dim();
                inj = span_matrix(img, I1[d].slice).rows() == src_dim;
                for (const Element& x : img) cont = cont && I1[d].contains(x);
            }
            rows.push_back(
                bool_row(d, "y_{m+1}: M_0 -> M_1 image injective", inj, "4.3(2)"));
            rows.push_back(
                bool_row(d, "y_{m+1} M_0 lies in the M_1 image", cont, "4.3(2)"));
            rows.push_back(dim_row(d, "coker(y_{m+1}) = M_1^even/(e_k)",
                                   q1.at(size_t(d)),
                                   int64_t(I1[d].dim()) - int64_t(src_dim),
                                   "4.3(2)"));
        }

        // (3): Q_{k-1}
        {
            int src = d - qshift;
            size_t src_dim = 0;
            bool inj = true, cont = true;
            if (src >= 0) {
                std::vector<Element> img;
                for (const Element& b : I1[src].basis())
                    img.push_back(milnor_q(cs.k - 1, b));
                src_dim = I1[src].dim();
                inj = span_matrix(img, I0[d].slice).rows() == src_dim;
                for (const Element& x : img) cont = cont && I0[d].contains(x);
            }
            rows.push_back(
                bool_row(d, "Q_{k-1}: M_1 -> M_0 image injective", inj, "4.3(3)"));
            rows.push_back(
                bool_row(d, "Q_{k-1} M_1 lies in the M_0 image", cont, "4.3(3)"));
            rows.push_back(dim_row(d, "coker(Q_{k-1}) = M_0^even/(e_k)",
                                   q0.at(size_t(d)),
                                   int64_t(I0[d].dim()) - int64_t(src_dim),
                                   "4.3(3)"));
        }
    }
    return rows;
}

std::vector<CheckRow> steenrod_closure_check(CaseModel& cm, int maxdeg) {
    const CaseSpec& cs = cm.spec();
    FamilyModule& fm = cm.fm();
    KoszulCtx c = fm.ctx();
    const uint32_t p = c.p;

    std::vector<DegreeSlice> slices;
    std::vector<GFMat> spans;
    for (int d = 0; d <= maxdeg; ++d) {
        slices.push_back(DegreeSlice::make(c, d));
        spans.push_back(GFMat(p, 0, slices.back().dim()));
    }

    std::vector<Element> items;
    std::vector<std::vector<Element>> by_deg(size_t(maxdeg) + 1);
    auto add = [&](const Element& x) {
        if (x.is_zero()) return;
        int d = x.degree();
        if (d > maxdeg) return;
        if (in_span(spans[d], slices[d].to_vec(x), p)) return;
        by_deg[d].push_back(x);
        spans[d] = span_matrix(by_deg[d], slices[d]);
        items.push_back(x);
    };

    add(Element::one(c));
    for (const Element& g : cm.closure_generators()) add(g);

    size_t processed = 0;
    while (processed < items.size()) {
        Element x = items[processed++];
        add(bockstein(x));
        int dx = x.degree();
        for (int k = 1; dx + 2 * k * int(p - 1) <= maxdeg; ++k)
            add(reduced_power(k, x));
        for (size_t j = 0; j < processed; ++j) {
            if (items[j].degree() + dx > maxdeg) continue;
            add(items[j] * x);
        }
    }

    std::vector<CheckRow> rows;
    for (int d = 0; d <= maxdeg; ++d) {
        std::vector<Element> img = cm.image_span(ModulePart::M0, d);
        for (Element& e : cm.image_span(ModulePart::M1, d)) img.push_back(e);
        GFMat ispan = span_matrix(img, slices[d]);
        rows.push_back(dim_row(d, "closure dimension equals the image module",
                               int64_t(ispan.rows()), int64_t(spans[d].rows()),
                               cs.label + " 4.2"));
        bool cont = true;
        for (const Element& b : by_deg[size_t(d)])
            cont = cont && in_span(ispan, slices[d].to_vec(b), p);
        rows.push_back(bool_row(d, "closure is contained in the image module",
                                cont, cs.label + " 4.2"));
    }
    return rows;
}

} // namespace mui
