#include "spalg/klein.hpp"

#include <map>

#include "spalg/linalg.hpp"

namespace spalg {

Ext2Element ext2_basis(Field f, const Word& r) {
    Ext2Element e;
    e.field = f;
    e.add_term(r, Scalar::one(f));
    return e;
}

Ext2Element ext2_left_action(const GroupModel& klein, Field f, const Word& s,
                             const Ext2Element& m) {
    // Letter actions: a: r -> a^-1 r; a^-1: r -> a r; b^eps: r -> b^eps r with
    // an extra sign.
    Ext2Element cur = m;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        int letter = *it;
        Ext2Element next;
        next.field = f;
        for (const auto& [r, c] : cur.terms) {
            Word lw;
            Scalar coef = c;
            if (std::abs(letter) == 1) {
                lw = {-letter};  // a acts through its inverse
            } else {
                lw = {letter};
                coef = -coef;
            }
            next.add_term(klein.multiply(lw, r), coef);
        }
        cur = std::move(next);
    }
    return cur;
}

Ext2Element ext2_right_action(const GroupModel& klein, Field f, const Ext2Element& m,
                              const Word& s) {
    Ext2Element out;
    out.field = f;
    for (const auto& [r, c] : m.terms) out.add_term(klein.multiply(r, s), c);
    return out;
}

KleinCaseStudy klein_ext2_casestudy(int characteristic, int radius) {
    if (characteristic != 0 && characteristic != 2)
        throw std::runtime_error("characteristic must be 0 or 2");
    KleinCaseStudy out;
    out.characteristic = characteristic;
    out.radius = radius;
    Field f = characteristic == 0 ? Field::rationals() : Field::prime(2);
    auto K = klein_bottle();
    Word a = K->parse("a"), b = K->parse("b"), binv = K->parse("b^-1");

    if (characteristic == 0) {
        // (1/2)((b^-1 x 1) . b  -  b . (b^-1 x 1)) = 1 x 1
        Ext2Element m = ext2_basis(f, binv);
        Ext2Element lhs = ext2_right_action(*K, f, m, b);
        Ext2Element rhs = ext2_left_action(*K, f, b, m);
        Ext2Element diff;
        diff.field = f;
        for (const auto& [r, c] : lhs.terms) diff.add_term(r, c);
        for (const auto& [r, c] : rhs.terms) diff.add_term(r, -c);
        Scalar half = Scalar::parse(f, "1/2");
        Ext2Element scaled;
        scaled.field = f;
        for (const auto& [r, c] : diff.terms) scaled.add_term(r, c * half);
        out.commutator_identity =
            scaled.terms.size() == 1 && scaled.terms.count(Word{}) == 1 &&
            scaled.terms.at(Word{}).is_one();

        // Truncated coinvariants: the sub-bimodule generated by the
        // commutators [x, r x 1], closed under the generator actions inside
        // the ball(radius) window, should already be the whole window.
        std::vector<Word> ball = K->ball(radius);
        std::map<Word, int> pos;
        for (int i = 0; i < (int)ball.size(); ++i) pos[ball[i]] = i;
        auto in_window = [&](const Ext2Element& e) {
            for (const auto& [r, c] : e.terms)
                if (!pos.count(r)) return false;
            return true;
        };
        auto to_vec = [&](const Ext2Element& e) {
            Vec v = zero_vec(f, (int)ball.size());
            for (const auto& [r, c] : e.terms) v[pos.at(r)] += c;
            return v;
        };
        IncrementalSpan span(f, (int)ball.size());
        std::vector<Ext2Element> frontier;
        for (const Word& r : K->ball(radius - 1)) {
            for (const Word& x : {a, b}) {
                Ext2Element m2 = ext2_basis(f, r);
                Ext2Element comm;
                comm.field = f;
                for (const auto& [w, c] : ext2_left_action(*K, f, x, m2).terms)
                    comm.add_term(w, c);
                for (const auto& [w, c] : ext2_right_action(*K, f, m2, x).terms)
                    comm.add_term(w, -c);
                if (in_window(comm) && span.insert(to_vec(comm)).was_new)
                    frontier.push_back(std::move(comm));
            }
        }
        while (!frontier.empty()) {
            std::vector<Ext2Element> next;
            for (const auto& e : frontier) {
                for (int gi = 0; gi < 2; ++gi)
                    for (int sgn : {1, -1}) {
                        Word s{sgn * (gi + 1)};
                        for (Ext2Element img : {ext2_left_action(*K, f, s, e),
                                                ext2_right_action(*K, f, e, s)}) {
                            if (!in_window(img)) continue;
                            if (span.insert(to_vec(img)).was_new) next.push_back(std::move(img));
                        }
                    }
            }
            frontier = std::move(next);
        }
        out.coinvariants_rank = (int)ball.size() - span.rank();
    } else {
        // psi(r) = (b r) x 1 intertwines: s.psi(r) = psi(s r) and
        // psi(r).s = psi(r s) for all generators s and r in the ball.
        bool ok = true;
        for (const Word& r : K->ball(radius)) {
            Ext2Element psi_r = ext2_basis(f, K->multiply(b, r));
            for (int gi = 0; gi < 2; ++gi)
                for (int sgn : {1, -1}) {
                    Word s{sgn * (gi + 1)};
                    Ext2Element left = ext2_left_action(*K, f, s, psi_r);
                    Ext2Element expect_left = ext2_basis(f, K->multiply(b, K->multiply(s, r)));
                    if (!(left.terms == expect_left.terms)) ok = false;
                    Ext2Element right = ext2_right_action(*K, f, psi_r, s);
                    Ext2Element expect_right = ext2_basis(f, K->multiply(b, K->multiply(r, s)));
                    if (!(right.terms == expect_right.terms)) ok = false;
                }
        }
        out.intertwiner_ok = ok;
    }
    return out;
}

}  // namespace spalg
