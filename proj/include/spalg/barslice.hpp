// Per-conjugacy-class slices of the normalized cyclic bar complex of a group
// algebra: finite sub-mixed-complexes generated by tuples of alphabet atoms,
// closed under the b and B operator terms.  Carries the cyclic (b,B) double
// complex, its homology, and the long-exact-sequence maps.
#ifndef SPALG_BARSLICE_HPP
#define SPALG_BARSLICE_HPP

#include <optional>
#include <set>

#include "spalg/groups.hpp"
#include "spalg/linalg.hpp"

namespace spalg {

struct BarTuple {
    Word head;               // a_0 (may be the identity)
    std::vector<Word> tail;  // a_1..a_n, never the identity

    int degree() const { return (int)tail.size(); }
    bool operator==(const BarTuple& o) const { return head == o.head && tail == o.tail; }
    bool operator<(const BarTuple& o) const {
        return head != o.head ? head < o.head : tail < o.tail;
    }
};

// A formal chain: map tuple -> coefficient.
using BarChain = std::map<BarTuple, Scalar>;

struct BarSlice {
    GroupPtr group;
    Field field = Field::rationals();
    int max_degree = 0;   // degrees 0..max_degree stored
    int atom_budget = 0;  // the radius parameter
    std::set<Word> class_set;
    std::vector<std::vector<BarTuple>> basis;  // per degree, sorted
    std::vector<SparseMatrix> b_mat;           // b_mat[n]: C_n -> C_{n-1}
    std::vector<SparseMatrix> B_mat;           // B_mat[n]: C_n -> C_{n+1}

    int dim(int n) const {
        return (n < 0 || n > max_degree) ? 0 : (int)basis[n].size();
    }
    int index_of(const BarTuple& t) const;  // -1 if absent
    Vec chain_to_vec(int degree, const BarChain& c) const;
};

// The b and B operators applied symbolically (no truncation); usable on any
// normalized tuple.
BarChain bar_b(const GroupModel& g, Field f, const BarTuple& t);
BarChain bar_B(const GroupModel& g, Field f, const BarTuple& t);
// The structural output tuples of the operators, kept even when coefficients
// cancel (the slice basis is closed under these).
std::vector<BarTuple> bar_b_terms(const GroupModel& g, const BarTuple& t);
std::vector<BarTuple> bar_B_terms(const GroupModel& g, const BarTuple& t);

// class_rep is explored within ball(orbit_radius) to obtain the class set
// (exact when the orbit closes; for abelian models it is a singleton).
BarSlice build_bar_slice(GroupPtr group, Field f, const Word& class_rep, int orbit_radius,
                         const std::vector<Word>& alphabet, int atom_budget, int max_degree);

// Cyclic homology of the slice through total degree N (requires
// max_degree >= N + 1), with the long-exact-sequence maps on representatives.
class CyclicTower {
  public:
    CyclicTower(const BarSlice& slice, int N);

    int N() const { return N_; }
    int hc_betti(int n) const;
    int hh_betti(int n) const;

    // Matrices on homology representatives.
    SparseMatrix S_map(int n) const;  // HC_n -> HC_{n-2}
    SparseMatrix B_map(int n) const;  // HC_{n-1} -> HH_n
    SparseMatrix I_map(int n) const;  // HH_n -> HC_n

    // Representative cycles of HH_n in the bar slice basis.
    const std::vector<Vec>& hh_representatives(int n) const;
    // Express a b-cycle of degree n in the HH_n basis.
    std::optional<Vec> express_hh(int n, const Vec& cycle) const;

  private:
    const BarSlice& slice_;
    int N_;
    // Total complex data: T_n = sum over p of C_{n-2p}.
    std::vector<std::vector<std::pair<int, int>>> tslots_;  // per n: (p, offset)
    std::vector<int> tdim_;
    std::vector<SparseMatrix> D_;  // D_[n]: T_n -> T_{n-1}
    std::vector<HomologyBasis> hc_;
    std::vector<HomologyBasis> hh_;
    std::vector<std::vector<Vec>> hc_reps_;  // total-complex vectors
    std::vector<std::vector<Vec>> hh_reps_;

    int tdim(int n) const { return (n < 0 || n > N_ + 1) ? 0 : tdim_[n]; }
    Vec project_column0(int n, const Vec& total) const;  // T_n -> C_n
    Vec drop_column0(int n, const Vec& total) const;     // T_n -> T_{n-2}
    Vec include_column0(int n, const Vec& c) const;      // C_n -> T_n
};

// The group-nerve complex slice receiving the basepoint map
// (a_0, a_1..a_n) -> (a_1..a_n); computes homology of the underlying space.
struct NerveSlice {
    GroupPtr group;
    Field field = Field::rationals();
    int max_degree = 0;
    std::vector<std::vector<std::vector<Word>>> basis;  // tuples per degree
    std::vector<SparseMatrix> d_mat;                    // d[n]: C_n -> C_{n-1}

    int dim(int n) const {
        return (n < 0 || n > max_degree) ? 0 : (int)basis[n].size();
    }
    int index_of(int degree, const std::vector<Word>& t) const;
};

// Built from the tails of all slice tuples, closed under the nerve
// differential terms.
NerveSlice build_nerve_slice(const BarSlice& slice);

// res(a_0, a_1..a_n) = (a_1..a_n): the basepoint map on bar chains.
Vec res_to_nerve(const BarSlice& slice, const NerveSlice& nerve, int degree, const Vec& chain);

}  // namespace spalg

#endif
