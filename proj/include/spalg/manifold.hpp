// Triangulated manifold models: a one-vertex simplicial set, a group backend,
// an edge labelling, and an orientation cycle.  Ships the four built-in
// models (torus, 3-torus, genus-2 surface, Klein bottle).
#ifndef SPALG_MANIFOLD_HPP
#define SPALG_MANIFOLD_HPP

#include <map>
#include <string>

#include "spalg/groups.hpp"
#include "spalg/linalg.hpp"
#include "spalg/simplicial.hpp"

namespace spalg {

struct NotOrientable : std::runtime_error {
    explicit NotOrientable(const std::string& what) : std::runtime_error(what) {}
};

struct TriangulatedManifoldModel {
    FiniteSimplicialSet S;  // one 0-simplex
    GroupPtr group;
    Field field = Field::rationals();
    int dimension = 0;
    std::map<int, Word> edge_map;  // nondegenerate 1-simplex id -> element
    Vec orientation;               // over nondegenerate top simplices, ids_of_dim order

    // Identity for degenerate edges, edge_map otherwise.
    Word element_of_edge(const SimplexRef& e) const;
    Word zeta(int simplex_id, int i) const;   // edge (i, i+1)
    Word gamma(int simplex_id) const;         // edge (0, dim)
};

// Contracts a maximal tree, matches edge labels to group words, verifies the
// relators on every 2-simplex, and finds the orientation cycle (top homology
// of rank one) or throws NotOrientable.
TriangulatedManifoldModel build_model(const FiniteSimplicialSet& S_raw, GroupPtr group,
                                      const std::map<std::string, std::string>& edge_words,
                                      Field f);

TriangulatedManifoldModel builtin_torus2(Field f);
TriangulatedManifoldModel builtin_torus3(Field f);
TriangulatedManifoldModel builtin_genus2(Field f);
TriangulatedManifoldModel builtin_klein(Field f);
// Dispatch by name: torus2, torus3, genus2, klein.
TriangulatedManifoldModel builtin_model(const std::string& name, Field f);

}  // namespace spalg

#endif
