// Finitely presented group backends with a solvable word problem: free
// abelian, free, Klein bottle, hyperbolic surface groups (Dehn's algorithm),
// and products with Z.  Elements are canonical words over the generators.
#ifndef SPALG_GROUPS_HPP
#define SPALG_GROUPS_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spalg/scalar.hpp"

namespace spalg {

// A word over generators: letter +-(i+1) is generator i or its inverse.
using Word = std::vector<int>;

Word concat_words(const Word& a, const Word& b);
Word invert_word(const Word& w);

class GroupModel {
  public:
    virtual ~GroupModel() = default;

    virtual int num_generators() const = 0;
    virtual std::string generator_name(int i) const = 0;
    virtual bool is_abelian() const = 0;
    virtual std::string describe() const = 0;

    // Canonical form of a word (exact for every built-in model except
    // surface groups, where words longer than half the relator may alias;
    // see surface_group()).
    virtual Word normal_form(const Word& w) const = 0;

    Word identity() const { return {}; }
    Word multiply(const Word& a, const Word& b) const {
        return normal_form(concat_words(a, b));
    }
    Word invert(const Word& a) const { return normal_form(invert_word(a)); }
    Word conjugate(const Word& x, const Word& g) const {
        return normal_form(concat_words(concat_words(x, g), invert_word(x)));
    }
    bool is_identity(const Word& w) const { return normal_form(w).empty(); }
    int word_length(const Word& w) const { return (int)normal_form(w).size(); }

    // All elements of word length <= r, sorted by (length, lex).
    std::vector<Word> ball(int r) const;

    virtual std::optional<Word> conjugacy_normal_form(const Word& g) const {
        if (is_abelian()) return normal_form(g);
        return std::nullopt;
    }

    // Generator index i as a one-letter word / its inverse.
    Word gen(int i) const { return {i + 1}; }
    Word gen_inv(int i) const { return {-(i + 1)}; }

    Word parse(const std::string& text) const;   // "a b^-1 a"
    std::string print(const Word& w) const;      // inverse of parse
};

using GroupPtr = std::shared_ptr<const GroupModel>;

GroupPtr free_abelian(int rank);           // rank >= 0
GroupPtr free_group(int rank);             // rank >= 1
GroupPtr klein_bottle();                   // <a, b | aba = b>, normal forms b^m a^n
GroupPtr surface_group(int genus);         // genus >= 2, Dehn-reduced words
GroupPtr direct_product_with_Z(GroupPtr inner);  // extra central generator z

struct ConjugacyOrbit {
    Word label;                   // minimal element found
    std::vector<Word> elements;   // sorted; word-level for surface groups
    bool closed = false;          // orbit closed up without touching the boundary
};

// Orbit of g under conjugation by generators, explored inside ball(r).
ConjugacyOrbit conjugacy_class_in_ball(const GroupModel& m, const Word& g, int r);

struct GroupAlgebraElement {
    Field field = Field::rationals();
    std::map<Word, Scalar> terms;  // keys in normal form, no zero coefficients

    void add_term(const Word& w, const Scalar& c);
};

struct CentralUnitReport {
    int radius = 0;
    bool found = false;  // NONE_FOUND(radius) when false; evidence, not proof
    std::vector<ConjugacyOrbit> classes;  // closed nontrivial classes
    // Class sums s_c, candidate central elements of the group algebra.
    std::vector<GroupAlgebraElement> class_sums(Field f) const;
};

CentralUnitReport central_unit_search(const GroupModel& m, int radius);

}  // namespace spalg

#endif
