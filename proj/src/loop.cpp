#include "spalg/loop.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spalg {

int ClassComponent::index_of(int n, int simplex, const Word& h) const {
    if (n < 0 || n >= (int)basis.size()) return -1;
    auto key = std::make_pair(simplex, h);
    auto it = std::lower_bound(basis[n].begin(), basis[n].end(), key);
    if (it == basis[n].end() || *it != key) return -1;
    return (int)(it - basis[n].begin());
}

namespace {

struct GammaTerm {
    int face_simplex;
    Word h;
    int sign;  // +1 / -1
};

// The terms of d(s, h); degenerate faces dropped.
std::vector<GammaTerm> differential_terms(const TriangulatedManifoldModel& m, int s,
                                          const Word& h) {
    const auto& simplex = m.S.simplices.at(s);
    int t = simplex.dim;
    std::vector<GammaTerm> out;
    for (int i = 0; i <= t; ++i) {
        SimplexRef f = simplex.faces[i];
        if (f.degenerate()) continue;
        GammaTerm term;
        term.face_simplex = f.id;
        term.sign = (i % 2) ? -1 : 1;
        if (i == 0)
            term.h = m.group->multiply(h, m.zeta(s, 0));
        else if (i == t)
            term.h = m.group->multiply(m.zeta(s, t - 1), h);
        else
            term.h = h;
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace

ClassComponent hochschild_component(const TriangulatedManifoldModel& m, const Word& class_rep,
                                    int radius) {
    ClassComponent comp;
    comp.radius = radius;
    ConjugacyOrbit orbit = conjugacy_class_in_ball(*m.group, class_rep, radius);
    comp.label = orbit.label;
    comp.exact = orbit.closed;

    int d = m.dimension;
    comp.basis.assign(d + 1, {});
    std::vector<std::map<std::pair<int, Word>, int>> index(d + 1);
    // Seed: all (s, u gamma(s)^{-1}) for class elements u.
    for (int n = 0; n <= d; ++n) {
        for (int id : m.S.ids_of_dim(n)) {
            Word ginv = m.group->invert(m.gamma(id));
            for (const Word& u : orbit.elements) {
                Word h = m.group->multiply(u, ginv);
                index[n].emplace(std::make_pair(id, h), 0);
            }
        }
    }
    // Close downward under the differential (adds elements only when the
    // class is truncated).
    for (int n = d; n >= 1; --n) {
        for (const auto& [key, unused] : index[n]) {
            for (const auto& term : differential_terms(m, key.first, key.second)) {
                int fn = n - 1;
                index[fn].emplace(std::make_pair(term.face_simplex, term.h), 0);
            }
        }
    }
    for (int n = 0; n <= d; ++n) {
        for (auto& [key, pos] : index[n]) {
            pos = (int)comp.basis[n].size();
            comp.basis[n].push_back(key);
        }
    }

    comp.complex.lo = 0;
    comp.complex.field = m.field;
    for (int n = 0; n <= d; ++n) comp.complex.dims.push_back(comp.dim(n));
    for (int n = 1; n <= d; ++n) {
        SparseMatrix mat(comp.dim(n - 1), comp.dim(n), m.field);
        for (int k = 0; k < comp.dim(n); ++k) {
            const auto& [s, h] = comp.basis[n][k];
            for (const auto& term : differential_terms(m, s, h)) {
                auto it = index[n - 1].find({term.face_simplex, term.h});
                if (it == index[n - 1].end())
                    throw std::logic_error("class component basis not closed");
                Scalar c = term.sign > 0 ? Scalar::one(m.field) : -Scalar::one(m.field);
                mat.add(it->second, k, c);
            }
        }
        comp.complex.differentials[n] = std::move(mat);
    }
    comp.complex.validate();  // asserts d^2 = 0
    return comp;
}

std::vector<int> component_betti(const ClassComponent& comp) {
    auto h = homology(comp.complex);
    std::vector<int> out;
    for (int n = 0; n < (int)comp.basis.size(); ++n) out.push_back(h[n].betti);
    return out;
}

Vec fundamental_class(const TriangulatedManifoldModel& m, const ClassComponent& comp) {
    int d = m.dimension;
    auto top_ids = m.S.ids_of_dim(d);
    Vec chain = zero_vec(m.field, comp.dim(d));
    for (int k = 0; k < (int)top_ids.size(); ++k) {
        int s = top_ids[k];
        Word h = m.group->invert(m.gamma(s));
        int pos = comp.index_of(d, s, h);
        if (pos < 0) throw std::runtime_error("fundamental class: basis pair missing");
        chain[pos] = m.orientation[k];
    }
    const SparseMatrix* dd = comp.complex.diff(d);
    if (dd && !is_zero_vec(dd->apply(chain)))
        throw std::runtime_error("fundamental class is not a cycle");
    HomologyBasis hb = homology_basis_at(comp.complex, d);
    if (hb.betti() != 1)
        throw std::runtime_error("top homology of the identity component has rank " +
                                 std::to_string(hb.betti()));
    auto coords = hb.express(chain);
    if (!coords || (*coords)[0].is_zero())
        throw std::runtime_error("fundamental class does not generate the top homology");
    return chain;
}

Vec bp_pushforward(const TriangulatedManifoldModel& m, const ClassComponent& comp, int degree,
                   const Vec& chain) {
    auto ids = m.S.ids_of_dim(degree);
    std::map<int, int> pos;
    for (int k = 0; k < (int)ids.size(); ++k) pos[ids[k]] = k;
    Vec out = zero_vec(m.field, (int)ids.size());
    if ((int)chain.size() != comp.dim(degree))
        throw std::runtime_error("bp_pushforward: chain size mismatch");
    for (int k = 0; k < comp.dim(degree); ++k) {
        if (chain[k].is_zero()) continue;
        out[pos.at(comp.basis[degree][k].first)] += chain[k];
    }
    return out;
}

}  // namespace spalg
