#include "spalg/quiver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spalg {

int Quiver::vertex_index(const std::string& label) const {
    for (int i = 0; i < (int)vertices.size(); ++i)
        if (vertices[i] == label) return i;
    throw std::runtime_error("unknown vertex '" + label + "'");
}

int Quiver::arrow_index(const std::string& name) const {
    for (int i = 0; i < (int)arrows.size(); ++i)
        if (arrows[i].name == name) return i;
    return -1;
}

void Quiver::validate() const {
    std::set<std::string> names;
    for (const auto& a : arrows) {
        if (!names.insert(a.name).second)
            throw std::runtime_error("duplicate arrow name '" + a.name + "'");
        if (a.src < 0 || a.src >= (int)vertices.size() || a.dst < 0 ||
            a.dst >= (int)vertices.size())
            throw std::runtime_error("arrow '" + a.name + "' has undeclared endpoint");
    }
}

int letter_source(const Quiver& q, const Letter& l) {
    const Arrow& a = q.arrows.at(l.arrow);
    return l.exp > 0 ? a.src : a.dst;
}

int letter_target(const Quiver& q, const Letter& l) {
    const Arrow& a = q.arrows.at(l.arrow);
    return l.exp > 0 ? a.dst : a.src;
}

PathWord make_word(const Quiver& q, const std::vector<Letter>& letters, int base_vertex) {
    PathWord w;
    w.letters = letters;
    for (const auto& l : letters) {
        if (l.exp != 1 && l.exp != -1) throw std::runtime_error("letter exponent must be +-1");
        if (l.exp == -1 && !q.arrows.at(l.arrow).invertible)
            throw std::runtime_error("inverse of non-invertible arrow '" +
                                     q.arrows.at(l.arrow).name + "'");
    }
    for (size_t i = 0; i + 1 < letters.size(); ++i)
        if (letter_target(q, letters[i]) != letter_source(q, letters[i + 1]))
            throw std::runtime_error("word not composable");
    if (letters.empty()) {
        if (base_vertex < 0) throw std::runtime_error("empty word needs a base vertex");
        w.base_vertex = base_vertex;
    } else {
        w.base_vertex = letter_source(q, letters.front());
    }
    return w;
}

int word_source(const Quiver& q, const PathWord& w) {
    return w.empty() ? w.base_vertex : letter_source(q, w.letters.front());
}

int word_target(const Quiver& q, const PathWord& w) {
    return w.empty() ? w.base_vertex : letter_target(q, w.letters.back());
}

bool PathWord::operator<(const PathWord& o) const {
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    if (letters != o.letters) return letters < o.letters;
    if (letters.empty()) return base_vertex < o.base_vertex;
    return false;
}

PathWord reduce(const Quiver& q, const PathWord& w) {
    std::vector<Letter> out;
    for (const auto& l : w.letters) {
        if (!out.empty() && out.back().arrow == l.arrow && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    PathWord r;
    r.letters = std::move(out);
    r.base_vertex = word_source(q, w);
    return r;
}

PathWord concat(const Quiver& q, const PathWord& a, const PathWord& b) {
    if (word_target(q, a) != word_source(q, b)) throw std::runtime_error("concat: not composable");
    PathWord c;
    c.letters = a.letters;
    c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
    c.base_vertex = word_source(q, a);
    return reduce(q, c);
}

PathWord inverse_word(const Quiver& q, const PathWord& w) {
    PathWord r;
    r.base_vertex = word_target(q, w);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (!q.arrows.at(it->arrow).invertible)
            throw std::runtime_error("inverse of non-invertible arrow '" +
                                     q.arrows.at(it->arrow).name + "'");
        r.letters.push_back({it->arrow, -it->exp});
    }
    return r;
}

void NCPoly::add_term(const PathWord& w, const Scalar& c) {
    if (c.field() != field) throw FieldMismatch();
    auto it = terms.find(w);
    if (it == terms.end()) {
        if (!c.is_zero()) terms[w] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms) r.add_term(w, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms) r.add_term(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const Scalar& c) const {
    NCPoly r = NCPoly::zero(field);
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms) r.terms[w] = k * c;
    return r;
}

std::string NCPoly::str(const Quiver& q) const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) s += " + ";
        first = false;
        s += c.str() + "*";
        if (w.empty()) {
            s += "e_" + q.vertices.at(w.base_vertex);
        } else {
            for (const auto& l : w.letters) {
                s += q.arrows.at(l.arrow).name;
                if (l.exp < 0) s += "^-1";
                s += ".";
            }
            s.pop_back();
        }
    }
    return s;
}

NCPoly mul(const Quiver& q, const NCPoly& a, const NCPoly& b) {
    if (a.field != b.field) throw FieldMismatch();
    NCPoly r = NCPoly::zero(a.field);
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            if (word_target(q, wa) != word_source(q, wb)) continue;  // product vanishes
            r.add_term(concat(q, wa, wb), ca * cb);
        }
    return r;
}

NCPoly word_poly(const Quiver& q, Field f, const PathWord& w) {
    NCPoly r = NCPoly::zero(f);
    r.add_term(reduce(q, w), Scalar::one(f));
    return r;
}

NCPoly commutator(const Quiver& q, const NCPoly& a, const NCPoly& b) {
    return mul(q, a, b) - mul(q, b, a);
}

CyclicWord cyclic_canonical(const Quiver& q, const PathWord& w0) {
    PathWord w = reduce(q, w0);
    if (word_source(q, w) != word_target(q, w))
        throw std::runtime_error("cyclic_canonical: word not closed");
    // Cyclic reduction: cancel inverse pairs across the seam.
    while (w.letters.size() >= 2 && w.letters.front().arrow == w.letters.back().arrow &&
           w.letters.front().exp == -w.letters.back().exp) {
        std::vector<Letter> inner(w.letters.begin() + 1, w.letters.end() - 1);
        w = make_word(q, inner, letter_target(q, w.letters.front()));
    }
    if (w.empty()) return CyclicWord{w};
    PathWord best = w;
    PathWord rot = w;
    for (size_t i = 1; i < w.letters.size(); ++i) {
        std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
        rot.base_vertex = letter_source(q, rot.letters.front());
        if (rot < best) best = rot;
    }
    return CyclicWord{best};
}

void Potential::add_term(const Quiver& q, const PathWord& w, const Scalar& c) {
    if (c.field() != field) throw FieldMismatch();
    CyclicWord cw = cyclic_canonical(q, w);
    auto it = terms.find(cw);
    if (it == terms.end()) {
        if (!c.is_zero()) terms[cw] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

bool Potential::inverse_free() const {
    for (const auto& [cw, c] : terms)
        for (const auto& l : cw.representative.letters)
            if (l.exp < 0) return false;
    return true;
}

std::string Potential::str(const Quiver& q) const {
    NCPoly p = NCPoly::zero(field);
    for (const auto& [cw, c] : terms) p.add_term(cw.representative, c);
    return p.str(q);
}

NCPoly cyclic_derivative(const Quiver& q, const Potential& W, int arrow) {
    NCPoly r = NCPoly::zero(W.field);
    for (const auto& [cw, c] : W.terms) {
        const auto& ls = cw.representative.letters;
        for (size_t i = 0; i < ls.size(); ++i) {
            if (ls[i].arrow != arrow) continue;
            if (ls[i].exp < 0)
                throw std::runtime_error(
                    "cyclic derivative with respect to '" + q.arrows.at(arrow).name +
                    "': potential contains its formal inverse");
            std::vector<Letter> rest(ls.begin() + i + 1, ls.end());
            rest.insert(rest.end(), ls.begin(), ls.begin() + i);
            int base = letter_target(q, ls[i]);
            r.add_term(make_word(q, rest, base), c);
        }
    }
    return r;
}

std::vector<NCPoly> jacobi_relations(const Quiver& q, const Potential& W) {
    std::vector<NCPoly> out;
    for (int a = 0; a < (int)q.arrows.size(); ++a) out.push_back(cyclic_derivative(q, W, a));
    return out;
}

}  // namespace spalg
