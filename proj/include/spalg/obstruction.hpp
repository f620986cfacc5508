// The central-unit obstruction report: candidate central units from closed
// finite conjugacy classes, and for each such class whether some cyclic class
// has a Connes-boundary image with nonzero basepoint pushforward.
#ifndef SPALG_OBSTRUCTION_HPP
#define SPALG_OBSTRUCTION_HPP

#include "spalg/barslice.hpp"
#include "spalg/loop.hpp"
#include "spalg/manifold.hpp"

namespace spalg {

struct ClassObstructionCheck {
    Word label;
    int hc_dim = 0;       // dim HC_{d-1} of the class slice
    bool nonzero_bp = false;  // some B-image class has nonzero bp pushforward
};

struct ObstructionReport {
    int radius = 0;
    CentralUnitReport units;
    std::vector<ClassObstructionCheck> class_checks;
    bool exactness_possible = false;
    std::optional<Word> witness_class;
};

// Default atom budget: |class| + dimension + 2.
ObstructionReport exactness_obstruction(const TriangulatedManifoldModel& m, int radius,
                                        int max_classes = 16);

// Composite bp o B on the identity-class slice: the matrix
// HC_{n-1} -> H_n(nerve slice) for 1 <= n <= top_degree; zero columns
// certify the vanishing.
struct BpOfBResult {
    std::vector<SparseMatrix> composite;   // index n = 1..top_degree
    std::vector<bool> zero_at_degree;      // parallel to composite
    bool all_zero = true;
};

BpOfBResult bp_of_connes_b(const TriangulatedManifoldModel& m, const Word& class_rep,
                           int top_degree, int atom_budget);

// Edge alphabet of a model (distinct nonidentity edge words).
std::vector<Word> edge_alphabet(const TriangulatedManifoldModel& m);

}  // namespace spalg

#endif
