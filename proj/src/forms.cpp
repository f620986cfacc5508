#include "spalg/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace spalg {

void GradedQuiver::validate() const {
    q.validate();
    if (degree.size() != q.arrows.size())
        throw std::runtime_error("graded quiver: degree list size mismatch");
    for (size_t i = 0; i < q.arrows.size(); ++i)
        if (q.arrows[i].invertible && degree[i] != 0)
            throw std::runtime_error("only degree-0 arrows may be invertible");
}

int form_letter_source(const GradedQuiver& gq, const FormLetter& l) {
    const Arrow& a = gq.q.arrows.at(l.arrow);
    return l.exp > 0 ? a.src : a.dst;
}

int form_letter_target(const GradedQuiver& gq, const FormLetter& l) {
    const Arrow& a = gq.q.arrows.at(l.arrow);
    return l.exp > 0 ? a.dst : a.src;
}

int form_word_source(const GradedQuiver& gq, const FormWord& w) {
    return w.empty() ? w.base_vertex : form_letter_source(gq, w.letters.front());
}

int form_word_target(const GradedQuiver& gq, const FormWord& w) {
    return w.empty() ? w.base_vertex : form_letter_target(gq, w.letters.back());
}

bool form_word_closed(const GradedQuiver& gq, const FormWord& w) {
    return form_word_source(gq, w) == form_word_target(gq, w);
}

int form_letter_degree(const GradedQuiver& gq, const FormLetter& l) {
    return gq.arrow_degree(l.arrow) + (l.dmark ? 1 : 0);
}

int form_word_degree(const GradedQuiver& gq, const FormWord& w) {
    int d = 0;
    for (const auto& l : w.letters) d += form_letter_degree(gq, l);
    return d;
}

int form_word_form_degree(const FormWord& w) {
    int d = 0;
    for (const auto& l : w.letters) d += l.dmark ? 1 : 0;
    return d;
}

bool FormWord::operator<(const FormWord& o) const {
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    if (letters != o.letters) return letters < o.letters;
    if (letters.empty()) return base_vertex < o.base_vertex;
    return false;
}

void FormSum::add_term(const FormWord& w, const Scalar& c) {
    if (c.field() != field) throw FieldMismatch();
    auto it = terms.find(w);
    if (it == terms.end()) {
        if (!c.is_zero()) terms[w] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

FormSum FormSum::operator+(const FormSum& o) const {
    FormSum r = *this;
    for (const auto& [w, c] : o.terms) r.add_term(w, c);
    return r;
}

FormSum FormSum::operator-(const FormSum& o) const {
    FormSum r = *this;
    for (const auto& [w, c] : o.terms) r.add_term(w, -c);
    return r;
}

FormSum FormSum::operator*(const Scalar& c) const {
    FormSum r = FormSum::zero(field);
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms) r.terms[w] = k * c;
    return r;
}

std::string FormSum::str(const GradedQuiver& gq) const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) s += " + ";
        first = false;
        s += c.str() + "*";
        if (w.empty()) {
            s += "e_" + gq.q.vertices.at(w.base_vertex);
            continue;
        }
        for (const auto& l : w.letters) {
            if (l.dmark) s += "D";
            s += gq.q.arrows.at(l.arrow).name;
            if (l.exp < 0) s += "^-1";
            s += ".";
        }
        s.pop_back();
    }
    return s;
}

namespace {

// Free reduction: cancel adjacent inverse pairs of unmarked letters.
std::vector<FormLetter> reduce_letters(const std::vector<FormLetter>& in) {
    std::vector<FormLetter> out;
    for (const auto& l : in) {
        if (!out.empty() && !out.back().dmark && !l.dmark && out.back().arrow == l.arrow &&
            out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

}  // namespace

FormWord make_form_word(const GradedQuiver& gq, const std::vector<FormLetter>& ls,
                        int base_vertex) {
    for (const auto& l : ls) {
        if (l.exp != 1 && l.exp != -1) throw std::runtime_error("form letter exponent must be +-1");
        if (l.exp == -1) {
            if (!gq.q.arrows.at(l.arrow).invertible)
                throw std::runtime_error("inverse of non-invertible arrow");
            if (l.dmark) throw std::runtime_error("D-mark on an inverse letter");
        }
    }
    for (size_t i = 0; i + 1 < ls.size(); ++i)
        if (form_letter_target(gq, ls[i]) != form_letter_source(gq, ls[i + 1]))
            throw std::runtime_error("form word not composable");
    FormWord w;
    w.letters = reduce_letters(ls);
    if (w.letters.empty()) {
        int v = ls.empty() ? base_vertex : form_letter_source(gq, ls.front());
        if (v < 0) throw std::runtime_error("empty form word needs a base vertex");
        w.base_vertex = v;
    }
    return w;
}

FormSum form_from_ncpoly(const GradedQuiver& gq, const NCPoly& p) {
    FormSum r = FormSum::zero(p.field);
    for (const auto& [w, c] : p.terms) {
        std::vector<FormLetter> ls;
        for (const auto& l : w.letters) ls.push_back({l.arrow, l.exp, false});
        r.add_term(make_form_word(gq, ls, w.base_vertex), c);
    }
    return r;
}

FormSum form_one(const GradedQuiver& gq, Field f, int vertex) {
    FormSum r = FormSum::zero(f);
    r.add_term(make_form_word(gq, {}, vertex), Scalar::one(f));
    return r;
}

FormSum form_mul(const GradedQuiver& gq, const FormSum& a, const FormSum& b) {
    if (a.field != b.field) throw FieldMismatch();
    FormSum r = FormSum::zero(a.field);
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            if (form_word_target(gq, wa) != form_word_source(gq, wb)) continue;
            std::vector<FormLetter> ls = wa.letters;
            ls.insert(ls.end(), wb.letters.begin(), wb.letters.end());
            FormWord w;
            w.letters = reduce_letters(ls);
            w.base_vertex = form_word_source(gq, wa);
            r.add_term(w, ca * cb);
        }
    return r;
}

FormSum de_rham_D(const GradedQuiver& gq, const FormSum& f) {
    FormSum r = FormSum::zero(f.field);
    for (const auto& [w, c] : f.terms) {
        int prefix_deg = 0;
        for (size_t i = 0; i < w.letters.size(); ++i) {
            const FormLetter& l = w.letters[i];
            if (l.dmark) {
                prefix_deg += form_letter_degree(gq, l);
                continue;
            }
            Scalar sign = parity(prefix_deg) ? -Scalar::one(f.field) : Scalar::one(f.field);
            std::vector<FormLetter> pre(w.letters.begin(), w.letters.begin() + i);
            std::vector<FormLetter> post(w.letters.begin() + i + 1, w.letters.end());
            if (l.exp > 0) {
                std::vector<FormLetter> ls = pre;
                ls.push_back({l.arrow, 1, true});
                ls.insert(ls.end(), post.begin(), post.end());
                r.add_term(make_form_word(gq, ls, w.base_vertex), c * sign);
            } else {
                // D(a^-1) = -a^-1 (Da) a^-1
                std::vector<FormLetter> ls = pre;
                ls.push_back({l.arrow, -1, false});
                ls.push_back({l.arrow, 1, true});
                ls.push_back({l.arrow, -1, false});
                ls.insert(ls.end(), post.begin(), post.end());
                r.add_term(make_form_word(gq, ls, w.base_vertex), -(c * sign));
            }
            prefix_deg += form_letter_degree(gq, l);
        }
    }
    return r;
}

namespace {

// theta(letter) for a derivation with given arrow values; handles inverses.
FormSum derivation_on_letter(const GradedQuiver& gq, const std::map<int, FormSum>& values,
                             Field f, const FormLetter& l) {
    auto it = values.find(l.arrow);
    FormSum val = it == values.end() ? FormSum::zero(f) : it->second;
    if (l.dmark) throw std::logic_error("derivation_on_letter on a D-marked letter");
    if (l.exp > 0) return val;
    // theta(a^-1) = -a^-1 theta(a) a^-1  (degree-0 a)
    FormSum inv = FormSum::zero(f);
    FormWord wi;
    wi.letters = {{l.arrow, -1, false}};
    inv.add_term(wi, Scalar::one(f));
    return (form_mul(gq, inv, form_mul(gq, val, inv))) * -Scalar::one(f);
}

}  // namespace

FormSum lie_derivative(const GradedQuiver& gq, const GradedDerivation& theta, const FormSum& f) {
    FormSum r = FormSum::zero(f.field);
    for (const auto& [w, c] : f.terms) {
        int prefix_deg = 0;
        for (size_t i = 0; i < w.letters.size(); ++i) {
            const FormLetter& l = w.letters[i];
            if (!theta.values.count(l.arrow))
                throw std::runtime_error("lie_derivative: no value for arrow '" +
                                         gq.q.arrows.at(l.arrow).name + "'");
            Scalar sign = parity(prefix_deg * theta.degree) ? -Scalar::one(f.field)
                                                            : Scalar::one(f.field);
            FormLetter core = l;
            core.dmark = false;
            FormSum val = derivation_on_letter(gq, theta.values, f.field, core);
            if (l.dmark) val = de_rham_D(gq, val);
            if (!val.is_zero()) {
                FormSum pre = FormSum::zero(f.field);
                pre.add_term(make_form_word(
                                 gq, std::vector<FormLetter>(w.letters.begin(),
                                                             w.letters.begin() + i),
                                 form_word_source(gq, w)),
                             c * sign);
                FormSum post = FormSum::zero(f.field);
                post.add_term(make_form_word(
                                  gq, std::vector<FormLetter>(w.letters.begin() + i + 1,
                                                              w.letters.end()),
                                  form_word_target(gq, w)),
                              Scalar::one(f.field));
                r = r + form_mul(gq, form_mul(gq, pre, val), post);
            }
            prefix_deg += form_letter_degree(gq, l);
        }
    }
    return r;
}

DoubleDerivation canonical_double_derivation(const GradedQuiver& gq, Field f,
                                             const std::vector<int>& arrows) {
    DoubleDerivation d;
    d.degree = 0;
    for (int a : arrows) {
        const Arrow& ar = gq.q.arrows.at(a);
        FormWord wa;
        wa.letters = {{a, 1, false}};
        FormWord e_src = FormWord{{}, ar.src};
        FormWord e_dst = FormWord{{}, ar.dst};
        // a (x) 1 - 1 (x) a
        d.values[a] = {{Scalar::one(f), wa, e_dst}, {-Scalar::one(f), e_src, wa}};
    }
    return d;
}

FormSum reduced_contraction(const GradedQuiver& gq, const DoubleDerivation& lam,
                            const FormSum& f) {
    FormSum r = FormSum::zero(f.field);
    for (const auto& [w, c] : f.terms) {
        int prefix_deg = 0;
        for (size_t i = 0; i < w.letters.size(); ++i) {
            const FormLetter& l = w.letters[i];
            if (!l.dmark) {
                prefix_deg += form_letter_degree(gq, l);
                continue;
            }
            auto it = lam.values.find(l.arrow);
            if (it != lam.values.end()) {
                // i_lam has parity |lam| + 1.
                int s1 = parity(prefix_deg * (lam.degree + 1));
                FormWord pre = make_form_word(
                    gq, std::vector<FormLetter>(w.letters.begin(), w.letters.begin() + i),
                    form_word_source(gq, w));
                FormWord post = make_form_word(
                    gq, std::vector<FormLetter>(w.letters.begin() + i + 1, w.letters.end()),
                    form_word_target(gq, w));
                int pre_deg = form_word_degree(gq, pre);
                int post_deg = form_word_degree(gq, post);
                for (const auto& [cv, u, v] : it->second) {
                    // left = pre*u, right = v*post; result = +- right*left.
                    if (form_word_target(gq, pre) != form_word_source(gq, u)) continue;
                    if (form_word_target(gq, v) != form_word_source(gq, post)) continue;
                    if (form_word_target(gq, post) != form_word_source(gq, pre)) continue;
                    int left_deg = pre_deg + form_word_degree(gq, u);
                    int right_deg = form_word_degree(gq, v) + post_deg;
                    int s2 = parity(left_deg * right_deg);
                    Scalar coef = c * cv;
                    if ((s1 + s2) % 2) coef = -coef;
                    std::vector<FormLetter> ls = v.letters;
                    ls.insert(ls.end(), post.letters.begin(), post.letters.end());
                    ls.insert(ls.end(), pre.letters.begin(), pre.letters.end());
                    ls.insert(ls.end(), u.letters.begin(), u.letters.end());
                    FormWord out;
                    out.letters = reduce_letters(ls);
                    out.base_vertex = form_word_source(gq, v);
                    r.add_term(out, coef);
                }
            }
            prefix_deg += form_letter_degree(gq, l);
        }
    }
    return r;
}

FormSum dr_canonical(const GradedQuiver& gq, const FormSum& f) {
    FormSum r = FormSum::zero(f.field);
    for (const auto& [w, c] : f.terms) {
        if (!form_word_closed(gq, w)) continue;  // a commutator with a vertex idempotent
        if (w.empty()) {
            r.add_term(w, c);
            continue;
        }
        FormWord best = w;
        int best_sign = 0;  // 0: +, 1: -
        bool kill = false;
        std::map<FormWord, int> seen;
        seen[w] = 0;
        FormWord rot = w;
        int sign = 0;
        int total = form_word_degree(gq, w);
        for (size_t i = 1; i <= w.letters.size(); ++i) {
            // Move the front letter to the back.
            int front_deg = form_letter_degree(gq, rot.letters.front());
            sign = parity(sign + front_deg * (total - front_deg));
            std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
            auto it = seen.find(rot);
            if (it != seen.end()) {
                if (it->second != sign) kill = true;  // w = -w in the quotient
            } else {
                seen[rot] = sign;
            }
            if (rot < best) {
                best = rot;
                best_sign = sign;
            }
        }
        if (kill) continue;
        r.add_term(best, best_sign ? -c : c);
    }
    return r;
}

FormSum sigma_map(const GradedQuiver& gq, const FormSum& one_forms) {
    FormSum r = FormSum::zero(one_forms.field);
    for (const auto& [w, c] : one_forms.terms) {
        if (form_word_form_degree(w) != 1)
            throw std::runtime_error("sigma_map expects 1-forms");
        if (!form_word_closed(gq, w)) continue;
        size_t k = 0;
        while (!w.letters[k].dmark) ++k;
        FormWord u = make_form_word(gq, std::vector<FormLetter>(w.letters.begin(),
                                                                w.letters.begin() + k),
                                    form_word_source(gq, w));
        FormLetter dl = w.letters[k];
        FormWord v = make_form_word(gq, std::vector<FormLetter>(w.letters.begin() + k + 1,
                                                                w.letters.end()),
                                    form_word_target(gq, w));
        // u (Dl) v == +- (v u) (Dl); sigma((vu) Dl) = [vu, l].
        int u_deg = form_word_degree(gq, u);
        int v_deg = form_word_degree(gq, v);
        int l_deg = form_letter_degree(gq, dl) - 1;  // internal degree of the letter
        int move = parity(v_deg * (u_deg + l_deg + 1));
        Scalar base = move ? -c : c;
        std::vector<FormLetter> zls = v.letters;
        zls.insert(zls.end(), u.letters.begin(), u.letters.end());
        FormWord z;
        z.letters = reduce_letters(zls);
        z.base_vertex = form_word_source(gq, v);
        FormLetter plain = dl;
        plain.dmark = false;
        // z*l
        {
            std::vector<FormLetter> ls = z.letters;
            ls.push_back(plain);
            FormWord t;
            t.letters = reduce_letters(ls);
            t.base_vertex = form_word_source(gq, z);
            r.add_term(t, base);
        }
        // -(-1)^{|z||l|} l*z
        {
            std::vector<FormLetter> ls = {plain};
            ls.insert(ls.end(), z.letters.begin(), z.letters.end());
            FormWord t;
            t.letters = reduce_letters(ls);
            t.base_vertex = form_letter_source(gq, plain);
            int s = parity((u_deg + v_deg) * l_deg);
            r.add_term(t, s ? base : -base);
        }
    }
    return r;
}

FormSum apply_differential(const GradedQuiver& gq, const std::map<int, FormSum>& d_values,
                           const FormSum& f) {
    FormSum r = FormSum::zero(f.field);
    for (const auto& [w, c] : f.terms) {
        int prefix_deg = 0;
        for (size_t i = 0; i < w.letters.size(); ++i) {
            const FormLetter& l = w.letters[i];
            Scalar sign = parity(prefix_deg) ? -Scalar::one(f.field) : Scalar::one(f.field);
            FormLetter core = l;
            core.dmark = false;
            FormSum val = derivation_on_letter(gq, d_values, f.field, core);
            if (l.dmark) val = de_rham_D(gq, val);
            if (!val.is_zero()) {
                FormSum pre = FormSum::zero(f.field);
                pre.add_term(make_form_word(
                                 gq, std::vector<FormLetter>(w.letters.begin(),
                                                             w.letters.begin() + i),
                                 form_word_source(gq, w)),
                             c * sign);
                FormSum post = FormSum::zero(f.field);
                post.add_term(make_form_word(
                                  gq, std::vector<FormLetter>(w.letters.begin() + i + 1,
                                                              w.letters.end()),
                                  form_word_target(gq, w)),
                              Scalar::one(f.field));
                r = r + form_mul(gq, form_mul(gq, pre, val), post);
            }
            prefix_deg += form_letter_degree(gq, l);
        }
    }
    return r;
}

}  // namespace spalg
