// Conjugacy-class components of the Hochschild complex built from the
// bimodule resolution of a one-vertex triangulation: basis pairs (simplex,
// group element), the twisted simplicial differential, the fundamental
// class, and the basepoint pushforward.
#ifndef SPALG_LOOP_HPP
#define SPALG_LOOP_HPP

#include <optional>

#include "spalg/manifold.hpp"

namespace spalg {

struct ClassComponent {
    Word label;           // minimal class element found
    bool exact = false;   // class fiber finite (closed orbit)
    int radius = 0;       // exploration radius (relevant when truncated)
    // basis[n]: pairs (nondegenerate n-simplex id, group element h) with
    // h * gamma(s) in the class; sorted.
    std::vector<std::vector<std::pair<int, Word>>> basis;
    BoundedChainComplex complex;

    int dim(int n) const {
        return (n < 0 || n >= (int)basis.size()) ? 0 : (int)basis[n].size();
    }
    int index_of(int n, int simplex, const Word& h) const;  // -1 if absent
};

// The class component of g explored within ball(radius); the differential is
// d(s,h) = (d0 s, h z0(s)) + sum_i (-1)^i (di s, h) + (-1)^t (dt s, z_{t-1}(s) h),
// with degenerate faces dropped.  d^2 = 0 is asserted at construction.
ClassComponent hochschild_component(const TriangulatedManifoldModel& m, const Word& class_rep,
                                    int radius);

// Betti numbers of the component, degrees 0..d.
std::vector<int> component_betti(const ClassComponent& comp);

// The chain sum of (s, gamma(s)^{-1}) over top simplices weighted by the
// orientation; verified to be a cycle generating the rank-one top homology.
Vec fundamental_class(const TriangulatedManifoldModel& m, const ClassComponent& identity_comp);

// (s,h) -> s: lands in the normalized chain complex of S.
Vec bp_pushforward(const TriangulatedManifoldModel& m, const ClassComponent& comp, int degree,
                   const Vec& chain);

}  // namespace spalg

#endif
