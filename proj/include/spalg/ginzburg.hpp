// The superpotential dg-algebra on a doubled quiver: construction, the d^2
// check, the degree-zero presentation, the moment map, and the exactness
// witness epsilon with its verification report.
#ifndef SPALG_GINZBURG_HPP
#define SPALG_GINZBURG_HPP

#include <string>
#include <vector>

#include "spalg/forms.hpp"
#include "spalg/quiver.hpp"

namespace spalg {

// Base quiver extended by dual arrows a* (degree -1, reversed) and one loop
// t_v per vertex (degree c-1).  Arrow indices: base 0..n-1, duals n..2n-1,
// t-loops 2n..2n+V-1.
struct GinzburgDGA {
    GradedQuiver gq;
    Field field = Field::rationals();
    int n_base = 0;
    int omega_degree = 0;  // c
    Potential W;
    std::map<int, FormSum> d_value;  // per generator arrow

    int dual_of(int base_arrow) const { return n_base + base_arrow; }
    int t_index(int vertex) const { return 2 * n_base + vertex; }
    int n_vertices() const { return (int)gq.q.vertices.size(); }
    bool is_dual(int arrow) const { return arrow >= n_base && arrow < 2 * n_base; }
    bool is_t(int arrow) const { return arrow >= 2 * n_base; }
    // d(t) = sum over vertices of d(t_v).
    FormSum dt_total() const;
};

// The doubled quiver without t (degrees 0 and -1), for moment-map work.
GradedQuiver doubled_quiver(const Quiver& base);

// Sum of commutators [a, a*] over the base arrows, as a form of degree -1.
FormSum moment_map(const GradedQuiver& doubled, Field f, int n_base);

// The standard bisymplectic 2-form on the doubled quiver.  The stored sign
// is the one for which D(moment_map) = reduced_contraction(Delta, omega).
FormSum standard_bisymplectic(const GradedQuiver& doubled, Field f, int n_base);

GinzburgDGA ginzburg_dga(const Quiver& base, const Potential& W, int c, Field f);

struct DsqVerdict {
    bool ok = true;
    std::string failing_generator;
    FormSum defect;
};

DsqVerdict check_d_squared(const GinzburgDGA& g);

struct H0Presentation {
    Quiver quiver;  // the base quiver, localized
    std::vector<NCPoly> relations;
};

H0Presentation h0_presentation(const GinzburgDGA& g);

struct WitnessReport {
    FormSum epsilon;        // sum of a Da*
    bool sigma_matches_dt = false;
    bool cycle_closes = false;  // d(epsilon) = D(correction) in the cyclic quotient
    FormSum correction;         // algebra element u with D(u) = d(epsilon)
    FormSum b_image;            // class of D(t): the image of (epsilon, t) under B
};

// Throws when sigma(epsilon) != d(t) (a sign-convention defect); the other
// checks are reported.
WitnessReport exact_cy_witness(const GinzburgDGA& g);

}  // namespace spalg

#endif
