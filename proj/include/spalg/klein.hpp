// The Klein bottle second-Ext bimodule: basis r (x) 1 over the group ring,
// twisted left action a.(r(x)1) = a^{-1} r (x) 1, b.(r(x)1) = -(b r) (x) 1,
// plain right action.  Case study checks in characteristic 0 and 2.
#ifndef SPALG_KLEIN_HPP
#define SPALG_KLEIN_HPP

#include "spalg/groups.hpp"

namespace spalg {

// An element of the bimodule: coefficients on basis vectors r (x) 1.
using Ext2Element = GroupAlgebraElement;

Ext2Element ext2_basis(Field f, const Word& r);
Ext2Element ext2_left_action(const GroupModel& klein, Field f, const Word& s,
                             const Ext2Element& m);
Ext2Element ext2_right_action(const GroupModel& klein, Field f, const Ext2Element& m,
                              const Word& s);

struct KleinCaseStudy {
    int characteristic = 0;  // 0 or 2
    int radius = 4;
    bool commutator_identity = false;  // char 0: (1/2)((b^-1 x 1) b - b (b^-1 x 1)) = 1 x 1
    int coinvariants_rank = -1;        // char 0: rank of M/[A,M] on the ball, expected 0
    bool intertwiner_ok = false;       // char 2: left-multiplication-by-b intertwines
};

KleinCaseStudy klein_ext2_casestudy(int characteristic, int radius = 4);

}  // namespace spalg

#endif
