#include "spalg/ginzburg.hpp"

#include <stdexcept>

namespace spalg {

GradedQuiver doubled_quiver(const Quiver& base) {
    base.validate();
    GradedQuiver gq;
    gq.q = base;
    gq.degree.assign(base.arrows.size(), 0);
    for (const auto& a : base.arrows) {
        Arrow star;
        star.name = a.name + "*";
        star.src = a.dst;
        star.dst = a.src;
        star.invertible = false;
        gq.q.arrows.push_back(star);
        gq.degree.push_back(-1);
    }
    gq.validate();
    return gq;
}

FormSum moment_map(const GradedQuiver& doubled, Field f, int n_base) {
    FormSum r = FormSum::zero(f);
    for (int a = 0; a < n_base; ++a) {
        FormSum fa = FormSum::zero(f);
        fa.add_term(make_form_word(doubled, {{a, 1, false}}), Scalar::one(f));
        FormSum fs = FormSum::zero(f);
        fs.add_term(make_form_word(doubled, {{n_base + a, 1, false}}), Scalar::one(f));
        r = r + form_mul(doubled, fa, fs) - form_mul(doubled, fs, fa);
    }
    return r;
}

FormSum standard_bisymplectic(const GradedQuiver& doubled, Field f, int n_base) {
    FormSum r = FormSum::zero(f);
    for (int a = 0; a < n_base; ++a) {
        FormWord w = make_form_word(doubled, {{a, 1, true}, {n_base + a, 1, true}});
        r.add_term(w, -Scalar::one(f));
    }
    return r;
}

FormSum GinzburgDGA::dt_total() const {
    FormSum r = FormSum::zero(field);
    for (int v = 0; v < n_vertices(); ++v) {
        auto it = d_value.find(t_index(v));
        if (it != d_value.end()) r = r + it->second;
    }
    return r;
}

GinzburgDGA ginzburg_dga(const Quiver& base, const Potential& W, int c, Field f) {
    base.validate();
    if (W.field != f) throw FieldMismatch();
    if (!W.inverse_free())
        throw std::runtime_error("potential contains inverse letters");
    for (const auto& [cw, coef] : W.terms)
        for (const auto& l : cw.representative.letters)
            if (l.arrow < 0 || l.arrow >= (int)base.arrows.size())
                throw std::runtime_error("potential uses an arrow outside the base quiver");
    if (c != -1 && !W.is_zero())
        throw std::runtime_error("unsupported degree: only c = -1, or arbitrary c with W = 0");

    GinzburgDGA g;
    g.field = f;
    g.n_base = (int)base.arrows.size();
    g.omega_degree = c;
    g.W = W;
    g.gq = doubled_quiver(base);
    for (int v = 0; v < (int)base.vertices.size(); ++v) {
        Arrow t;
        t.name = base.vertices.size() == 1 ? "t" : "t_" + base.vertices[v];
        t.src = v;
        t.dst = v;
        t.invertible = false;
        g.gq.q.arrows.push_back(t);
        g.gq.degree.push_back(c - 1);
    }
    g.gq.validate();

    for (int a = 0; a < g.n_base; ++a) {
        g.d_value[a] = FormSum::zero(f);
        NCPoly da = cyclic_derivative(base, W, a);
        // The derivative lives in the base quiver; re-embed in the extended one.
        g.d_value[g.dual_of(a)] = form_from_ncpoly(g.gq, da);
    }
    FormSum ncml = moment_map(g.gq, f, g.n_base);
    for (int v = 0; v < g.n_vertices(); ++v) {
        // The component of the moment map sitting at vertex v.
        FormSum at_v = FormSum::zero(f);
        for (const auto& [w, coef] : ncml.terms)
            if (form_word_source(g.gq, w) == v && form_word_target(g.gq, w) == v)
                at_v.add_term(w, coef);
        g.d_value[g.t_index(v)] = at_v;
    }
    return g;
}

DsqVerdict check_d_squared(const GinzburgDGA& g) {
    DsqVerdict v;
    for (int a = 0; a < (int)g.gq.q.arrows.size(); ++a) {
        auto it = g.d_value.find(a);
        if (it == g.d_value.end()) continue;
        FormSum dd = apply_differential(g.gq, g.d_value, it->second);
        if (!dd.is_zero()) {
            v.ok = false;
            v.failing_generator = g.gq.q.arrows[a].name;
            v.defect = dd;
            return v;
        }
    }
    return v;
}

H0Presentation h0_presentation(const GinzburgDGA& g) {
    H0Presentation p;
    p.quiver.vertices = g.gq.q.vertices;
    for (int a = 0; a < g.n_base; ++a) p.quiver.arrows.push_back(g.gq.q.arrows[a]);
    for (int a = 0; a < g.n_base; ++a)
        p.relations.push_back(cyclic_derivative(p.quiver, g.W, a));
    return p;
}

WitnessReport exact_cy_witness(const GinzburgDGA& g) {
    if (g.omega_degree != -1)
        throw std::runtime_error("witness construction requires c = -1");
    WitnessReport rep;
    rep.epsilon = FormSum::zero(g.field);
    for (int a = 0; a < g.n_base; ++a) {
        FormWord w = make_form_word(g.gq, {{a, 1, false}, {g.dual_of(a), 1, true}});
        rep.epsilon.add_term(w, Scalar::one(g.field));
    }

    FormSum dt = g.dt_total();
    FormSum sig = sigma_map(g.gq, rep.epsilon);
    rep.sigma_matches_dt = dr_canonical(g.gq, sig - dt).is_zero();
    if (!rep.sigma_matches_dt)
        throw std::runtime_error("sigma(epsilon) != d(t): sign convention defect");

    // d(epsilon) is exact in the cyclic quotient: equal to D(u) for
    // u = sum over potential terms of (length - 1) * term.
    FormSum deps = apply_differential(g.gq, g.d_value, rep.epsilon);
    FormSum u = FormSum::zero(g.field);
    for (const auto& [cw, coef] : g.W.terms) {
        long long n = (long long)cw.representative.letters.size();
        NCPoly p = NCPoly::zero(g.field);
        p.add_term(cw.representative, coef * Scalar::from_integer(g.field, n - 1));
        u = u + form_from_ncpoly(g.gq, p);
    }
    rep.correction = u;
    rep.cycle_closes = dr_canonical(g.gq, deps - de_rham_D(g.gq, u)).is_zero();

    // Image of (epsilon, t) under the B operator of the two-term model:
    // the class of D(t).
    FormSum t_sum = FormSum::zero(g.field);
    for (int v = 0; v < g.n_vertices(); ++v) {
        FormWord w = make_form_word(g.gq, {{g.t_index(v), 1, true}});
        t_sum.add_term(w, Scalar::one(g.field));
    }
    rep.b_image = t_sum;
    return rep;
}

}  // namespace spalg
