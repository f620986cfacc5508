// Quivers, localized path algebras, noncommutative polynomials, cyclic words,
// potentials and their cyclic derivatives.
#ifndef SPALG_QUIVER_HPP
#define SPALG_QUIVER_HPP

#include <map>
#include <string>
#include <vector>

#include "spalg/scalar.hpp"

namespace spalg {

struct Arrow {
    std::string name;
    int src = 0;
    int dst = 0;
    bool invertible = false;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& label) const;
    int arrow_index(const std::string& name) const;  // -1 if absent
    void validate() const;  // unique arrow names, endpoints declared
};

// One letter of a path word: arrow index with exponent +-1.
struct Letter {
    int arrow = 0;
    int exp = 1;
    bool operator==(const Letter& o) const { return arrow == o.arrow && exp == o.exp; }
    bool operator<(const Letter& o) const {
        return arrow != o.arrow ? arrow < o.arrow : exp < o.exp;
    }
};

// A composable, freely reduced word in arrows and formal inverses.  The
// empty word is the trivial path at a vertex (tracked explicitly).
struct PathWord {
    std::vector<Letter> letters;
    int base_vertex = 0;  // source of the path; for empty words, the vertex

    bool empty() const { return letters.empty(); }
    size_t size() const { return letters.size(); }
    bool operator==(const PathWord& o) const {
        return letters == o.letters && (letters.empty() ? base_vertex == o.base_vertex : true);
    }
    bool operator<(const PathWord& o) const;
};

int letter_source(const Quiver& q, const Letter& l);
int letter_target(const Quiver& q, const Letter& l);

// Checks composability and inverse legality; throws on violation.
PathWord make_word(const Quiver& q, const std::vector<Letter>& letters, int base_vertex = -1);
int word_source(const Quiver& q, const PathWord& w);
int word_target(const Quiver& q, const PathWord& w);

// Free cancellation in the localized path algebra.
PathWord reduce(const Quiver& q, const PathWord& w);
PathWord concat(const Quiver& q, const PathWord& a, const PathWord& b);  // reduced
PathWord inverse_word(const Quiver& q, const PathWord& w);

// Noncommutative polynomial: exact linear combination of path words.
struct NCPoly {
    Field field = Field::rationals();
    std::map<PathWord, Scalar> terms;  // no zero coefficients

    static NCPoly zero(Field f) { return NCPoly{f, {}}; }
    bool is_zero() const { return terms.empty(); }
    void add_term(const PathWord& w, const Scalar& c);
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const Scalar& c) const;
    bool operator==(const NCPoly& o) const { return field == o.field && terms == o.terms; }
    std::string str(const Quiver& q) const;
};

NCPoly mul(const Quiver& q, const NCPoly& a, const NCPoly& b);
NCPoly word_poly(const Quiver& q, Field f, const PathWord& w);
NCPoly commutator(const Quiver& q, const NCPoly& a, const NCPoly& b);  // ab - ba

// Closed path up to rotation: stored as the canonical representative
// (cyclically reduced, lexicographically minimal rotation).
struct CyclicWord {
    PathWord representative;
    bool operator==(const CyclicWord& o) const { return representative == o.representative; }
    bool operator<(const CyclicWord& o) const { return representative < o.representative; }
};

CyclicWord cyclic_canonical(const Quiver& q, const PathWord& w);  // throws if not closed

struct Potential {
    Field field = Field::rationals();
    std::map<CyclicWord, Scalar> terms;

    void add_term(const Quiver& q, const PathWord& w, const Scalar& c);
    bool is_zero() const { return terms.empty(); }
    // True when every letter of every term is a plain (positive) arrow.
    bool inverse_free() const;
    std::string str(const Quiver& q) const;
};

// Sum over occurrences of the arrow (exponent +1 only) of the rotated
// remainder; occurrences of the formal inverse are rejected.
NCPoly cyclic_derivative(const Quiver& q, const Potential& W, int arrow);

std::vector<NCPoly> jacobi_relations(const Quiver& q, const Potential& W);

}  // namespace spalg

#endif
