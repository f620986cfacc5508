#include "spalg/manifold.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace spalg {

Word TriangulatedManifoldModel::element_of_edge(const SimplexRef& e) const {
    if (e.degenerate()) return {};
    auto it = edge_map.find(e.id);
    if (it == edge_map.end()) throw std::runtime_error("edge without a label");
    return it->second;
}

Word TriangulatedManifoldModel::zeta(int simplex_id, int i) const {
    return element_of_edge(S.edge_between(simplex_id, i, i + 1));
}

Word TriangulatedManifoldModel::gamma(int simplex_id) const {
    int d = S.simplices.at(simplex_id).dim;
    if (d == 0) return {};
    return element_of_edge(S.edge_between(simplex_id, 0, d));
}

namespace {

void verify_relators(const TriangulatedManifoldModel& m) {
    for (int id : m.S.ids_of_dim(2)) {
        Word lhs = m.group->multiply(m.zeta(id, 0), m.zeta(id, 1));
        Word rhs = m.group->normal_form(m.gamma(id));
        if (lhs != rhs)
            throw std::runtime_error("relator check fails on 2-simplex '" +
                                     m.S.simplices[id].label + "'");
    }
}

Vec find_orientation(const TriangulatedManifoldModel& m) {
    BoundedChainComplex c = normalized_chain_complex(m.S, m.field);
    int d = m.dimension;
    auto hb = homology_basis_at(c, d);
    if (hb.betti() != 1)
        throw NotOrientable(
            "top homology has rank " + std::to_string(hb.betti()) + " over " +
            m.field.name() +
            " (non-orientable manifolds have an orientation only in characteristic 2)");
    Vec o = hb.representatives()[0];
    // Deterministic sign: first nonzero coefficient positive (over Q).
    if (m.field.kind == Field::Kind::Rationals) {
        for (const auto& x : o) {
            if (x.is_zero()) continue;
            if (x.rational() < 0)
                for (auto& y : o) y = -y;
            break;
        }
    }
    return o;
}

}  // namespace

TriangulatedManifoldModel build_model(const FiniteSimplicialSet& S_raw, GroupPtr group,
                                      const std::map<std::string, std::string>& edge_words,
                                      Field f) {
    if (!is_connected(S_raw)) throw std::runtime_error("model must be connected");
    TriangulatedManifoldModel m;
    m.group = std::move(group);
    m.field = f;
    if (S_raw.count_nondegenerate(0) == 1) {
        m.S = S_raw;
    } else {
        m.S = contract(S_raw, maximal_tree(S_raw));
    }
    m.dimension = m.S.top_dim();
    for (int id : m.S.ids_of_dim(1)) {
        auto it = edge_words.find(m.S.simplices[id].label);
        if (it == edge_words.end())
            throw std::runtime_error("no word supplied for edge '" +
                                     m.S.simplices[id].label + "'");
        m.edge_map[id] = m.group->parse(it->second);
    }
    verify_relators(m);
    m.orientation = find_orientation(m);
    return m;
}

namespace {

// One-vertex models are specified directly: each triangle is a pair of
// composable loops with their composite, (d2, d0, d1) = (p, q, pq).
struct OneVertexBuilder {
    FiniteSimplicialSet S;
    std::map<std::string, int> edge_ids;

    OneVertexBuilder() {
        Simplex v;
        v.dim = 0;
        v.label = "v";
        S.simplices.push_back(v);
    }
    int edge(const std::string& name) {
        auto it = edge_ids.find(name);
        if (it != edge_ids.end()) return it->second;
        Simplex e;
        e.dim = 1;
        e.label = name;
        e.faces = {SimplexRef{{}, 0}, SimplexRef{{}, 0}};
        edge_ids[name] = S.count();
        S.simplices.push_back(e);
        return edge_ids[name];
    }
    int triangle(const std::string& label, const std::string& first,
                 const std::string& second, const std::string& composite) {
        Simplex t;
        t.dim = 2;
        t.label = label;
        t.faces = {SimplexRef{{}, edge(second)}, SimplexRef{{}, edge(composite)},
                   SimplexRef{{}, edge(first)}};
        S.simplices.push_back(t);
        return S.count() - 1;
    }
};

}  // namespace

TriangulatedManifoldModel builtin_torus2(Field f) {
    OneVertexBuilder b;
    b.triangle("s", "x", "y", "xy");
    b.triangle("t", "y", "x", "xy");
    b.S.validate();
    TriangulatedManifoldModel m;
    m.S = b.S;
    m.group = free_abelian(2);
    m.field = f;
    m.dimension = 2;
    m.edge_map[b.edge("x")] = m.group->parse("e0");
    m.edge_map[b.edge("y")] = m.group->parse("e1");
    m.edge_map[b.edge("xy")] = m.group->parse("e0 e1");
    verify_relators(m);
    m.orientation = find_orientation(m);
    return m;
}

TriangulatedManifoldModel builtin_torus3(Field f) {
    // Nondegenerate simplices are tuples of disjoint nonempty subsets of
    // {0,1,2} (the quotient of the standard cube triangulation): 1 vertex,
    // 7 edges, 12 triangles, 6 tetrahedra.
    FiniteSimplicialSet S;
    std::map<std::vector<int>, int> ids;  // tuple encoded as subset bitmasks
    auto subset_name = [](int mask) {
        std::string n;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) n += ('x' + i);
        return n;
    };
    auto tuple_label = [&](const std::vector<int>& t) {
        std::string l;
        for (size_t i = 0; i < t.size(); ++i) l += (i ? "|" : "") + subset_name(t[i]);
        return l.empty() ? std::string("v") : l;
    };
    std::function<int(const std::vector<int>&)> id_of = [&](const std::vector<int>& t) -> int {
        auto it = ids.find(t);
        if (it != ids.end()) return it->second;
        Simplex s;
        s.dim = (int)t.size();
        s.label = tuple_label(t);
        if (!t.empty()) {
            for (int i = 0; i <= (int)t.size(); ++i) {
                std::vector<int> face;
                if (i == 0)
                    face.assign(t.begin() + 1, t.end());
                else if (i == (int)t.size())
                    face.assign(t.begin(), t.end() - 1);
                else {
                    face.assign(t.begin(), t.end());
                    face[i - 1] = t[i - 1] | t[i];
                    face.erase(face.begin() + i);
                }
                s.faces.push_back(SimplexRef{{}, id_of(face)});
            }
        }
        ids[t] = S.count();
        S.simplices.push_back(s);
        return ids[t];
    };
    id_of({});
    // Enumerate all tuples of disjoint nonempty subsets covering up to {0,1,2}.
    std::function<void(std::vector<int>&, int)> gen = [&](std::vector<int>& cur, int used) {
        if (!cur.empty()) id_of(cur);
        for (int mask = 1; mask < 8; ++mask) {
            if (mask & used) continue;
            cur.push_back(mask);
            gen(cur, used | mask);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    gen(cur, 0);
    S.validate();

    TriangulatedManifoldModel m;
    m.S = S;
    m.group = free_abelian(3);
    m.field = f;
    m.dimension = 3;
    for (const auto& [t, id] : ids) {
        if (t.size() != 1) continue;
        Word w;
        for (int i = 0; i < 3; ++i)
            if (t[0] & (1 << i)) w.push_back(i + 1);
        m.edge_map[id] = m.group->normal_form(w);
    }
    verify_relators(m);
    m.orientation = find_orientation(m);
    return m;
}

TriangulatedManifoldModel builtin_genus2(Field f) {
    // Coned octagon with boundary word a b a^-1 b^-1 c d c^-1 d^-1; diagonals
    // c2..c6 oriented out of the cone point.
    OneVertexBuilder b;
    b.triangle("t1", "a", "b", "c2");    // a.b = c2
    b.triangle("t2", "c3", "a", "c2");   // c3.a = c2
    b.triangle("t3", "c4", "b", "c3");   // c4.b = c3
    b.triangle("t4", "c4", "c", "c5");   // c4.c = c5
    b.triangle("t5", "c5", "d", "c6");   // c5.d = c6
    b.triangle("t6", "d", "c", "c6");    // d.c = c6
    b.S.validate();
    TriangulatedManifoldModel m;
    m.S = b.S;
    m.group = surface_group(2);  // a1 b1 a2 b2
    m.field = f;
    m.dimension = 2;
    auto set = [&](const char* e, const char* w) { m.edge_map[b.edge(e)] = m.group->parse(w); };
    set("a", "a1");
    set("b", "b1");
    set("c", "a2");
    set("d", "b2");
    set("c2", "a1 b1");
    set("c3", "a1 b1 a1^-1");
    set("c4", "a1 b1 a1^-1 b1^-1");
    set("c5", "a1 b1 a1^-1 b1^-1 a2");
    set("c6", "a1 b1 a1^-1 b1^-1 a2 b2");
    verify_relators(m);
    m.orientation = find_orientation(m);
    return m;
}

TriangulatedManifoldModel builtin_klein(Field f) {
    // Coned square with boundary word a b a b^-1; the two triangles encode
    // exactly a.b = e and e.a = b, i.e. the relation aba = b.
    OneVertexBuilder b;
    b.triangle("t1", "a", "b", "e");
    b.triangle("t2", "e", "a", "b");
    b.S.validate();
    TriangulatedManifoldModel m;
    m.S = b.S;
    m.group = klein_bottle();
    m.field = f;
    m.dimension = 2;
    m.edge_map[b.edge("a")] = m.group->parse("a");
    m.edge_map[b.edge("b")] = m.group->parse("b");
    m.edge_map[b.edge("e")] = m.group->parse("a b");
    verify_relators(m);
    m.orientation = find_orientation(m);
    return m;
}

TriangulatedManifoldModel builtin_model(const std::string& name, Field f) {
    if (name == "torus2") return builtin_torus2(f);
    if (name == "torus3") return builtin_torus3(f);
    if (name == "genus2") return builtin_genus2(f);
    if (name == "klein") return builtin_klein(f);
    throw std::runtime_error("unknown built-in model '" + name + "'");
}

}  // namespace spalg
