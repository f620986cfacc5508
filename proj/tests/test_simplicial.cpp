#include "doctest.h"

#include <cstdlib>

#include "spalg/simplicial.hpp"

using namespace spalg;

namespace {
Field Q = Field::rationals();
Field F2 = Field::prime(2);

FiniteSimplicialSet triangle_boundary() {
    return from_abstract({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

std::vector<int> trimmed(std::vector<int> v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
    return v;
}

// Kunneth over a field: betti of the product from betti of the factors.
std::vector<int> kunneth(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

TEST_CASE("abstract complexes: triangle boundary and filled triangle") {
    FiniteSimplicialSet S = triangle_boundary();
    CHECK(S.count_nondegenerate(0) == 3);
    CHECK(S.count_nondegenerate(1) == 3);
    CHECK(betti_numbers(S, Q) == std::vector<int>{1, 1});

    FiniteSimplicialSet full =
        from_abstract({"a", "b", "c"}, subsets_closure({{"a", "b", "c"}}));
    CHECK(betti_numbers(full, Q) == std::vector<int>{1, 0, 0});

    FiniteSimplicialSet two_points = from_abstract({"a", "b"}, {});
    CHECK(betti_numbers(two_points, Q) == std::vector<int>{2});

    CHECK_THROWS(from_abstract({"a", "b"}, {{"a", "c"}}));
}

TEST_CASE("minimal circle") {
    FiniteSimplicialSet S1 = minimal_s1();
    CHECK(betti_numbers(S1, Q) == std::vector<int>{1, 1});
    CHECK(S1.count_all_simplices(2) == 3);
    CHECK(S1.count_nondegenerate(2) == 0);
    // product with a point is again the circle
    FiniteSimplicialSet P = product(S1, standard_simplex(0));
    CHECK(P.count() == 2);
    CHECK(betti_numbers(P, Q) == std::vector<int>{1, 1});
}

TEST_CASE("circle times simplices: nondegenerate counts") {
    FiniteSimplicialSet S1 = minimal_s1();
    for (int n = 1; n <= 5; ++n) {
        FiniteSimplicialSet P = product(S1, standard_simplex(n));
        CHECK(P.count_nondegenerate(n + 1) == n + 1);
        // contractible in the simplex factor
        CHECK(trimmed(betti_numbers(P, Q)) == std::vector<int>{1, 1});
    }
}

TEST_CASE("torus as a product of circles") {
    FiniteSimplicialSet S1 = minimal_s1();
    FiniteSimplicialSet T2 = product(S1, S1);
    CHECK(T2.count_nondegenerate(0) == 1);
    CHECK(T2.count_nondegenerate(1) == 3);
    CHECK(T2.count_nondegenerate(2) == 2);
    CHECK(betti_numbers(T2, Q) == std::vector<int>{1, 2, 1});
    CHECK(betti_numbers(T2, Q) == kunneth({1, 1}, {1, 1}));
}

TEST_CASE("product homology matches Kunneth on random small complexes") {
    std::srand(7);
    std::vector<FiniteSimplicialSet> pool;
    pool.push_back(triangle_boundary());
    pool.push_back(standard_simplex(1));
    pool.push_back(minimal_s1());
    pool.push_back(from_abstract({"a", "b"}, {}));
    for (int trial = 0; trial < 6; ++trial) {
        const auto& A = pool[std::rand() % pool.size()];
        const auto& B = pool[std::rand() % pool.size()];
        FiniteSimplicialSet P = product(A, B);
        CHECK(trimmed(betti_numbers(P, Q)) == kunneth(betti_numbers(A, Q), betti_numbers(B, Q)));
    }
}

TEST_CASE("contraction of a spanning tree of the triangle gives the circle") {
    FiniteSimplicialSet S = triangle_boundary();
    SimplicialSubset tree = maximal_tree(S);
    CHECK(tree.size() == 5);  // 3 vertices + 2 edges
    FiniteSimplicialSet C = contract(S, tree);
    CHECK(C.count_nondegenerate(0) == 1);
    CHECK(C.count_nondegenerate(1) == 1);
    CHECK(betti_numbers(C, Q) == std::vector<int>{1, 1});
}

TEST_CASE("contract a single vertex and the whole complex") {
    FiniteSimplicialSet S = triangle_boundary();
    FiniteSimplicialSet C1 = contract(S, SimplicialSubset{0});
    CHECK(betti_numbers(C1, Q) == betti_numbers(S, Q));

    FiniteSimplicialSet full = from_abstract({"a", "b", "c"}, subsets_closure({{"a", "b", "c"}}));
    SimplicialSubset everything;
    for (int i = 0; i < full.count(); ++i) everything.insert(i);
    FiniteSimplicialSet pt = contract(full, everything);
    CHECK(pt.count() == 1);

    CHECK_THROWS(contract(S, SimplicialSubset{}));
    // not face-closed
    int edge = S.ids_of_dim(1)[0];
    CHECK_THROWS(contract(S, SimplicialSubset{edge}));
}

TEST_CASE("compactly supported cohomology equals homology for finite sets") {
    for (const FiniteSimplicialSet& S :
         {triangle_boundary(), minimal_s1(), standard_simplex(2)}) {
        CHECK(compact_cohomology_betti(S, Q) == betti_numbers(S, Q));
    }
    FiniteSimplicialSet T2 = product(minimal_s1(), minimal_s1());
    CHECK(compact_cohomology_betti(T2, Q) == std::vector<int>{1, 2, 1});
}

TEST_CASE("maximal tree errors on disconnected input") {
    FiniteSimplicialSet two = from_abstract({"a", "b"}, {});
    CHECK_THROWS(maximal_tree(two));
    FiniteSimplicialSet pt = standard_simplex(0);
    CHECK(maximal_tree(pt) == SimplicialSubset{0});
}

TEST_CASE("contracting the maximal tree leaves one vertex") {
    auto check_one_vertex = [](const FiniteSimplicialSet& S) {
        FiniteSimplicialSet C = contract(S, maximal_tree(S));
        CHECK(C.count_nondegenerate(0) == 1);
    };
    check_one_vertex(triangle_boundary());
    check_one_vertex(standard_simplex(3));
    // 7-vertex torus triangulation
    std::vector<std::string> vs;
    for (int i = 0; i < 7; ++i) vs.push_back(std::to_string(i));
    std::vector<std::vector<std::string>> tris;
    auto tri = [&](int a, int b, int c) {
        tris.push_back({std::to_string(a), std::to_string(b), std::to_string(c)});
    };
    // The classical 7-vertex torus triangulation (every pair of vertices
    // spans an edge, 14 triangles).
    int cs[14][3] = {{1, 2, 4}, {2, 4, 5}, {2, 3, 5}, {3, 5, 6}, {3, 4, 6},
                     {4, 6, 7}, {4, 5, 7}, {5, 7, 1}, {5, 6, 1}, {6, 1, 2},
                     {6, 7, 2}, {7, 2, 3}, {7, 1, 3}, {1, 4, 3}};
    for (auto& f : cs) tri(f[0] - 1, f[1] - 1, f[2] - 1);
    FiniteSimplicialSet T = from_abstract(vs, subsets_closure(tris));
    CHECK(betti_numbers(T, Q) == std::vector<int>{1, 2, 1});
    SimplicialSubset tree = maximal_tree(T);
    CHECK(tree.size() == 7 + 6);
    check_one_vertex(T);
    // contraction preserves homology (tree is contractible)
    FiniteSimplicialSet C = contract(T, tree);
    CHECK(betti_numbers(C, Q) == std::vector<int>{1, 2, 1});
    CHECK(compact_cohomology_betti(C, Q) == std::vector<int>{1, 2, 1});
}

namespace {

// A random small abstract complex on up to 6 vertices.
FiniteSimplicialSet random_complex() {
    int nv = 3 + std::rand() % 4;
    std::vector<std::string> vs;
    for (int i = 0; i < nv; ++i) vs.push_back(std::to_string(i));
    std::vector<std::vector<std::string>> faces;
    int nf = 1 + std::rand() % 6;
    for (int k = 0; k < nf; ++k) {
        int sz = 2 + std::rand() % 2;  // edges and triangles only
        std::set<int> pick;
        while ((int)pick.size() < sz) pick.insert(std::rand() % nv);
        std::vector<std::string> f;
        for (int v : pick) f.push_back(std::to_string(v));
        faces.push_back(f);
    }
    return from_abstract(vs, subsets_closure(faces));
}

// Greedily pick disjoint contractible subsets: closed stars are too big, so
// use single closed simplices (cones) which are always contractible.
std::vector<SimplicialSubset> disjoint_contractible_subsets(const FiniteSimplicialSet& S) {
    std::vector<SimplicialSubset> out;
    std::set<int> used;
    for (int id = S.count() - 1; id >= 0; --id) {
        // closure of the single simplex id
        SimplicialSubset closure;
        std::vector<int> stack{id};
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            if (closure.count(cur)) continue;
            closure.insert(cur);
            for (const auto& fr : S.simplices[cur].faces) stack.push_back(fr.id);
        }
        bool clash = false;
        for (int c : closure)
            if (used.count(c)) clash = true;
        if (clash) continue;
        if (std::rand() % 2) continue;
        for (int c : closure) used.insert(c);
        out.push_back(closure);
    }
    return out;
}

}  // namespace

TEST_CASE("contracting disjoint contractible subsets preserves homology and "
          "compact cohomology") {
    std::srand(1661);
    int done = 0;
    while (done < 50) {
        FiniteSimplicialSet S = random_complex();
        auto subsets = disjoint_contractible_subsets(S);
        if (subsets.empty()) continue;
        ++done;
        auto h0 = betti_numbers(S, Q);
        auto hc0 = compact_cohomology_betti(S, Q);
        auto h0_2 = betti_numbers(S, F2);
        FiniteSimplicialSet cur = S;
        // Iterate: contract each subset to its own point, tracking ids.
        std::map<int, int> remap;
        for (int i = 0; i < cur.count(); ++i) remap[i] = i;
        for (const auto& U : subsets) {
            SimplicialSubset Ucur;
            for (int id : U) Ucur.insert(remap.at(id));
            std::map<int, int> step;
            cur = contract(cur, Ucur, &step);
            std::map<int, int> next;
            for (auto& [oldid, mid] : remap)
                if (step.count(mid)) next[oldid] = step.at(mid);
            remap = next;
        }
        auto h1 = betti_numbers(cur, Q);
        auto hc1 = compact_cohomology_betti(cur, Q);
        auto h1_2 = betti_numbers(cur, F2);
        h0.resize(4, 0);
        h1.resize(4, 0);
        hc0.resize(4, 0);
        hc1.resize(4, 0);
        h0_2.resize(4, 0);
        h1_2.resize(4, 0);
        CHECK(h0 == h1);
        CHECK(hc0 == hc1);
        CHECK(h0_2 == h1_2);
    }
}

TEST_CASE("edge_between extracts spine edges") {
    FiniteSimplicialSet full = from_abstract({"a", "b", "c"}, subsets_closure({{"a", "b", "c"}}));
    int t = full.ids_of_dim(2)[0];
    SimplexRef e01 = full.edge_between(t, 0, 1);
    SimplexRef e02 = full.edge_between(t, 0, 2);
    CHECK(!e01.degenerate());
    CHECK(!e02.degenerate());
    CHECK(full.simplices[e01.id].label == "a,b");
    CHECK(full.simplices[e02.id].label == "a,c");
    // degenerate edge of a vertex-degenerate pair
    FiniteSimplicialSet S1 = minimal_s1();
    // edge (0,1) of the degenerate 2-simplex s0(loop): resolve via a monotone map
    MonotoneMap h;
    h.codomain = 1;
    h.values = {0, 0};
    SimplexRef deg = S1.resolve(1, h);
    CHECK(deg.degenerate());
}
