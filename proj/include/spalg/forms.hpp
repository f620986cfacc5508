// Noncommutative differential forms over a graded (localized) quiver algebra:
// the de Rham differential, Lie derivatives, reduced contraction of double
// derivations, and the cyclic (supercommutator) quotient.
//
// Koszul signs are taken with respect to total degree = internal degree of
// the generator plus one per D-mark.
#ifndef SPALG_FORMS_HPP
#define SPALG_FORMS_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "spalg/quiver.hpp"

namespace spalg {

struct GradedQuiver {
    Quiver q;
    std::vector<int> degree;  // per arrow; inverses only for degree-0 arrows

    int arrow_degree(int a) const { return degree.at(a); }
    void validate() const;
};

struct FormLetter {
    int arrow = 0;
    int exp = 1;        // -1 only on invertible degree-0 arrows, never with dmark
    bool dmark = false;

    bool operator==(const FormLetter& o) const {
        return arrow == o.arrow && exp == o.exp && dmark == o.dmark;
    }
    bool operator<(const FormLetter& o) const {
        return std::tie(arrow, exp, dmark) < std::tie(o.arrow, o.exp, o.dmark);
    }
};

struct FormWord {
    std::vector<FormLetter> letters;
    int base_vertex = 0;  // for the empty word

    bool empty() const { return letters.empty(); }
    bool operator==(const FormWord& o) const {
        return letters == o.letters && (letters.empty() ? base_vertex == o.base_vertex : true);
    }
    bool operator<(const FormWord& o) const;
};

int form_letter_source(const GradedQuiver& gq, const FormLetter& l);
int form_letter_target(const GradedQuiver& gq, const FormLetter& l);
int form_word_source(const GradedQuiver& gq, const FormWord& w);
int form_word_target(const GradedQuiver& gq, const FormWord& w);
bool form_word_closed(const GradedQuiver& gq, const FormWord& w);

int form_letter_degree(const GradedQuiver& gq, const FormLetter& l);  // internal + dmark
int form_word_degree(const GradedQuiver& gq, const FormWord& w);
int form_word_form_degree(const FormWord& w);  // number of D-marks
inline int parity(int degree) { return ((degree % 2) + 2) % 2; }

struct FormSum {
    Field field = Field::rationals();
    std::map<FormWord, Scalar> terms;

    static FormSum zero(Field f) { return FormSum{f, {}}; }
    bool is_zero() const { return terms.empty(); }
    void add_term(const FormWord& w, const Scalar& c);
    FormSum operator+(const FormSum& o) const;
    FormSum operator-(const FormSum& o) const;
    FormSum operator*(const Scalar& c) const;
    bool operator==(const FormSum& o) const { return field == o.field && terms == o.terms; }
    std::string str(const GradedQuiver& gq) const;
};

// Word constructors (validated, freely reduced).
FormWord make_form_word(const GradedQuiver& gq, const std::vector<FormLetter>& ls,
                        int base_vertex = -1);
FormSum form_from_ncpoly(const GradedQuiver& gq, const NCPoly& p);
FormSum form_one(const GradedQuiver& gq, Field f, int vertex);

FormSum form_mul(const GradedQuiver& gq, const FormSum& a, const FormSum& b);

// de Rham differential (square zero, degree +1 in form degree).
FormSum de_rham_D(const GradedQuiver& gq, const FormSum& f);

// A graded derivation given by its values on arrows: extends by the graded
// Leibniz rule, with L(Da) = D(L(a)).
struct GradedDerivation {
    int degree = 0;
    std::map<int, FormSum> values;  // per arrow
};

FormSum lie_derivative(const GradedQuiver& gq, const GradedDerivation& theta, const FormSum& f);

// A double derivation: values in the algebra tensor square.
struct DoubleDerivation {
    int degree = 0;
    // value(a) = sum of c * (u (x) v); u, v are D-mark-free words.
    std::map<int, std::vector<std::tuple<Scalar, FormWord, FormWord>>> values;
};

// Canonical double derivation Delta: a -> a (x) 1 - 1 (x) a on the listed arrows.
DoubleDerivation canonical_double_derivation(const GradedQuiver& gq, Field f,
                                             const std::vector<int>& arrows);

// Reduced contraction: contract at each D-mark, swap the two halves with the
// Koszul sign, and multiply.
FormSum reduced_contraction(const GradedQuiver& gq, const DoubleDerivation& lam,
                            const FormSum& f);

// Class in the supercommutator quotient DR = Omega / [Omega, Omega]:
// canonical rotation representative with sign, non-closed words vanish.
FormSum dr_canonical(const GradedQuiver& gq, const FormSum& f);

// sigma : (Omega^1)_natural -> algebra, u Dv |-> [u, v].
FormSum sigma_map(const GradedQuiver& gq, const FormSum& one_forms);

// Differential induced on forms by algebra-level generator values
// (d(Da) = D(da), graded Leibniz).
FormSum apply_differential(const GradedQuiver& gq, const std::map<int, FormSum>& d_values,
                           const FormSum& f);

}  // namespace spalg

#endif
