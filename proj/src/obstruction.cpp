#include "spalg/obstruction.hpp"

#include <algorithm>

namespace spalg {

std::vector<Word> edge_alphabet(const TriangulatedManifoldModel& m) {
    std::set<Word> syms;
    for (const auto& [id, w] : m.edge_map)
        if (!w.empty()) syms.insert(w);
    return {syms.begin(), syms.end()};
}

namespace {

std::vector<Word> generator_alphabet(const GroupModel& g) {
    std::vector<Word> out;
    for (int i = 0; i < g.num_generators(); ++i) out.push_back(g.gen(i));
    return out;
}

}  // namespace

BpOfBResult bp_of_connes_b(const TriangulatedManifoldModel& m, const Word& class_rep,
                           int top_degree, int atom_budget) {
    BpOfBResult res;
    BarSlice slice = build_bar_slice(m.group, m.field, class_rep, atom_budget,
                                     generator_alphabet(*m.group), atom_budget,
                                     top_degree + 1);
    CyclicTower tower(slice, top_degree);
    NerveSlice nerve = build_nerve_slice(slice);
    // Homology bases of the nerve slice per degree.
    for (int n = 1; n <= top_degree; ++n) {
        HomologyBasis hb(nerve.field, nerve.dim(n));
        if (n + 1 <= nerve.max_degree)
            for (int j = 0; j < nerve.d_mat[n + 1].cols; ++j)
                hb.add_boundary(nerve.d_mat[n + 1].column(j));
        if (nerve.dim(n - 1) > 0 && nerve.d_mat[n].rows > 0) {
            RankKernel rk = rank_and_kernel(nerve.d_mat[n]);
            for (const auto& z : rk.kernel_basis) hb.add_cycle(z);
        } else {
            for (int j = 0; j < nerve.dim(n); ++j) {
                Vec e = zero_vec(nerve.field, nerve.dim(n));
                e[j] = Scalar::one(nerve.field);
                hb.add_cycle(e);
            }
        }
        SparseMatrix bmap = tower.B_map(n);  // HC_{n-1} -> HH_n
        SparseMatrix comp(hb.betti(), bmap.cols, m.field);
        bool zero_here = true;
        for (int k = 0; k < bmap.cols; ++k) {
            // B-image cycle in the bar slice, then res to the nerve.
            Vec img = zero_vec(m.field, slice.dim(n));
            for (int r = 0; r < bmap.rows; ++r) {
                const Scalar& c = bmap.get(r, k);
                if (c.is_zero()) continue;
                const Vec& rep = tower.hh_representatives(n)[r];
                for (int j = 0; j < slice.dim(n); ++j) img[j] += c * rep[j];
            }
            Vec pushed = res_to_nerve(slice, nerve, n, img);
            auto coords = hb.express(pushed);
            if (!coords) throw std::logic_error("bp image is not a nerve cycle");
            for (int r = 0; r < hb.betti(); ++r) {
                comp.set(r, k, (*coords)[r]);
                if (!(*coords)[r].is_zero()) {
                    res.all_zero = false;
                    zero_here = false;
                }
            }
        }
        res.composite.push_back(std::move(comp));
        res.zero_at_degree.push_back(zero_here);
    }
    return res;
}

ObstructionReport exactness_obstruction(const TriangulatedManifoldModel& m, int radius,
                                        int max_classes) {
    ObstructionReport rep;
    rep.radius = radius;
    rep.units = central_unit_search(*m.group, radius);
    int d = m.dimension;
    int examined = 0;
    for (const auto& cls : rep.units.classes) {
        if (examined >= max_classes) break;
        ++examined;
        ClassObstructionCheck check;
        check.label = cls.label;
        int budget = (int)cls.label.size() + d + 2;
        BpOfBResult bp = bp_of_connes_b(m, cls.label, d, budget);
        check.hc_dim = bp.composite.empty() ? 0 : bp.composite.back().cols;
        // The obstruction witness lives in degree d: HC_{d-1} -> HH_d -> H_d.
        check.nonzero_bp = !bp.zero_at_degree.empty() && !bp.zero_at_degree.back();
        if (check.nonzero_bp && !rep.exactness_possible) {
            rep.exactness_possible = true;
            rep.witness_class = cls.label;
        }
        rep.class_checks.push_back(std::move(check));
    }
    return rep;
}

}  // namespace spalg
