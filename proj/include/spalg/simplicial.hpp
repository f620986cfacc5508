// Finite simplicial sets presented by their nondegenerate simplices, with
// faces encoded through degeneracy words (every simplex is a unique
// degeneracy of a nondegenerate one).  Products are enumerated by shuffles;
// contractions are pushouts to a point.
#ifndef SPALG_SIMPLICIAL_HPP
#define SPALG_SIMPLICIAL_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "spalg/linalg.hpp"

namespace spalg {

// A possibly-degenerate simplex: the degeneracy word (strictly decreasing
// s-indices) applied to a nondegenerate simplex.
struct SimplexRef {
    std::vector<int> degeneracies;
    int id = 0;

    bool degenerate() const { return !degeneracies.empty(); }
    bool operator==(const SimplexRef& o) const {
        return degeneracies == o.degeneracies && id == o.id;
    }
    bool operator<(const SimplexRef& o) const {
        return degeneracies != o.degeneracies ? degeneracies < o.degeneracies : id < o.id;
    }
};

struct Simplex {
    int dim = 0;
    std::string label;
    std::vector<SimplexRef> faces;  // size dim+1; empty for vertices
};

// Weakly order-preserving map [m] -> [n].
struct MonotoneMap {
    int codomain = 0;             // n
    std::vector<int> values;      // size m+1

    int domain() const { return (int)values.size() - 1; }
    bool surjective() const;
    static MonotoneMap identity(int n);
    static MonotoneMap face_inclusion(int n, int skip);        // [n-1] -> [n]
    static MonotoneMap from_degeneracy_word(const std::vector<int>& word, int target_dim);
    std::vector<int> to_degeneracy_word() const;               // requires surjective
    MonotoneMap compose(const MonotoneMap& inner) const;       // this o inner
};

struct FiniteSimplicialSet {
    std::vector<Simplex> simplices;  // id = index; stable

    int count() const { return (int)simplices.size(); }
    int top_dim() const;
    std::vector<int> ids_of_dim(int d) const;
    int count_nondegenerate(int d) const { return (int)ids_of_dim(d).size(); }
    // Total number of n-simplices including degenerate ones.
    long long count_all_simplices(int n) const;

    // The simplex h*(underlying simplex of (word, id)) in normal form.
    SimplexRef resolve(int id, const MonotoneMap& h) const;
    SimplexRef face(const SimplexRef& ref, int i) const;
    SimplexRef face_of(int id, int i) const;  // face of a nondegenerate simplex
    // The edge of a simplex joining vertex i to vertex j (i < j).
    SimplexRef edge_between(int id, int i, int j) const;

    void validate() const;  // simplicial identities on the encoding
};

using SimplicialSubset = std::set<int>;  // nondegenerate ids, face-closed

FiniteSimplicialSet from_abstract(const std::vector<std::string>& vertices,
                                  const std::vector<std::vector<std::string>>& faces);
// Downward closure of a face list (convenience for specifying a complex by
// its maximal faces; from_abstract itself rejects non-closed input).
std::vector<std::vector<std::string>> subsets_closure(
    const std::vector<std::vector<std::string>>& faces);
FiniteSimplicialSet standard_simplex(int n);
FiniteSimplicialSet minimal_s1();

struct ProductTrace {
    // For each nondegenerate product simplex: the two component references.
    std::vector<std::pair<SimplexRef, SimplexRef>> components;
};

FiniteSimplicialSet product(const FiniteSimplicialSet& S, const FiniteSimplicialSet& T,
                            ProductTrace* trace = nullptr);

// Pushout contracting the (face-closed, nonempty) subset to a fresh vertex.
// Surviving simplices keep their relative order; the result's vertex 0 is
// the new basepoint.  old_to_new maps surviving ids.
FiniteSimplicialSet contract(const FiniteSimplicialSet& S, const SimplicialSubset& U,
                             std::map<int, int>* old_to_new = nullptr);

void check_face_closed(const FiniteSimplicialSet& S, const SimplicialSubset& U);

BoundedChainComplex normalized_chain_complex(const FiniteSimplicialSet& S, Field f);
std::vector<int> betti_numbers(const FiniteSimplicialSet& S, Field f);
std::vector<int> compact_cohomology_betti(const FiniteSimplicialSet& S, Field f);

bool is_connected(const FiniteSimplicialSet& S);
SimplicialSubset maximal_tree(const FiniteSimplicialSet& S);  // throws if disconnected

}  // namespace spalg

#endif
