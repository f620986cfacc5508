#include "spalg/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace spalg {

bool MonotoneMap::surjective() const {
    // Weakly increasing values; surjective iff 0 and n present and no gaps.
    if (values.empty()) return false;
    if (values.front() != 0 || values.back() != codomain) return false;
    for (size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i + 1] - values[i] > 1) return false;
    return true;
}

MonotoneMap MonotoneMap::identity(int n) {
    MonotoneMap m;
    m.codomain = n;
    for (int i = 0; i <= n; ++i) m.values.push_back(i);
    return m;
}

MonotoneMap MonotoneMap::face_inclusion(int n, int skip) {
    MonotoneMap m;
    m.codomain = n;
    for (int i = 0; i <= n; ++i)
        if (i != skip) m.values.push_back(i);
    return m;
}

MonotoneMap MonotoneMap::from_degeneracy_word(const std::vector<int>& word, int target_dim) {
    MonotoneMap m;
    m.codomain = target_dim;
    int domain = target_dim + (int)word.size();
    for (int i = 0; i <= domain; ++i) {
        int drop = 0;
        for (int j : word)
            if (j < i) ++drop;
        m.values.push_back(i - drop);
    }
    return m;
}

std::vector<int> MonotoneMap::to_degeneracy_word() const {
    if (!surjective()) throw std::logic_error("degeneracy word of a non-surjection");
    std::vector<int> word;
    for (int i = domain() - 1; i >= 0; --i)
        if (values[i] == values[i + 1]) word.push_back(i);
    return word;  // strictly decreasing
}

MonotoneMap MonotoneMap::compose(const MonotoneMap& inner) const {
    if (inner.codomain != domain()) throw std::logic_error("monotone map composition mismatch");
    MonotoneMap m;
    m.codomain = codomain;
    for (int v : inner.values) m.values.push_back(values[v]);
    return m;
}

int FiniteSimplicialSet::top_dim() const {
    int d = 0;
    for (const auto& s : simplices) d = std::max(d, s.dim);
    return d;
}

std::vector<int> FiniteSimplicialSet::ids_of_dim(int d) const {
    std::vector<int> out;
    for (int i = 0; i < count(); ++i)
        if (simplices[i].dim == d) out.push_back(i);
    return out;
}

long long FiniteSimplicialSet::count_all_simplices(int n) const {
    // Degeneracies of a p-simplex in dimension n: surjections [n] ->> [p].
    long long total = 0;
    for (const auto& s : simplices) {
        if (s.dim > n) continue;
        // binomial(n, s.dim) counts surjections [n] ->> [dim] ... the number of
        // epis [n]->>[p] is binomial(n, p).
        long long c = 1;
        for (int k = 1; k <= s.dim; ++k) c = c * (n - k + 1) / k;
        total += c;
    }
    return total;
}

SimplexRef FiniteSimplicialSet::resolve(int id, const MonotoneMap& h0) const {
    int z = id;
    MonotoneMap h = h0;
    while (true) {
        const Simplex& s = simplices.at(z);
        if (h.codomain != s.dim) throw std::logic_error("resolve: codomain mismatch");
        if (h.surjective()) return SimplexRef{h.to_degeneracy_word(), z};
        // Find the largest missing value and strip it through the stored face.
        std::vector<bool> hit(s.dim + 1, false);
        for (int v : h.values) hit[v] = true;
        int j = s.dim;
        while (hit[j]) --j;
        const SimplexRef& fr = s.faces.at(j);
        MonotoneMap hp;
        hp.codomain = s.dim - 1;
        for (int v : h.values) hp.values.push_back(v < j ? v : v - 1);
        MonotoneMap w = MonotoneMap::from_degeneracy_word(fr.degeneracies,
                                                          simplices.at(fr.id).dim);
        h = w.compose(hp);
        z = fr.id;
    }
}

SimplexRef FiniteSimplicialSet::face(const SimplexRef& ref, int i) const {
    const Simplex& s = simplices.at(ref.id);
    MonotoneMap eta = MonotoneMap::from_degeneracy_word(ref.degeneracies, s.dim);
    MonotoneMap h = eta.compose(MonotoneMap::face_inclusion(eta.domain(), i));
    return resolve(ref.id, h);
}

SimplexRef FiniteSimplicialSet::face_of(int id, int i) const {
    return face(SimplexRef{{}, id}, i);
}

SimplexRef FiniteSimplicialSet::edge_between(int id, int i, int j) const {
    const Simplex& s = simplices.at(id);
    if (!(0 <= i && i < j && j <= s.dim)) throw std::logic_error("edge_between: bad indices");
    MonotoneMap h;
    h.codomain = s.dim;
    h.values = {i, j};
    return resolve(id, h);
}

void FiniteSimplicialSet::validate() const {
    for (int id = 0; id < count(); ++id) {
        const Simplex& s = simplices[id];
        if ((int)s.faces.size() != (s.dim == 0 ? 0 : s.dim + 1))
            throw std::runtime_error("simplex '" + s.label + "': wrong face count");
        for (const auto& fr : s.faces) {
            if (fr.id < 0 || fr.id >= count())
                throw std::runtime_error("simplex '" + s.label + "': face id out of range");
            int fd = simplices[fr.id].dim + (int)fr.degeneracies.size();
            if (fd != s.dim - 1)
                throw std::runtime_error("simplex '" + s.label + "': face dimension mismatch");
            for (size_t k = 0; k + 1 < fr.degeneracies.size(); ++k)
                if (fr.degeneracies[k] <= fr.degeneracies[k + 1])
                    throw std::runtime_error("degeneracy word not normalized");
        }
        // d_i d_j = d_{j-1} d_i for i < j (needs faces of faces).
        if (s.dim < 2) continue;
        for (int j = 1; j <= s.dim; ++j)
            for (int i = 0; i < j; ++i) {
                SimplexRef a = face(face_of(id, j), i);
                SimplexRef b = face(face_of(id, i), j - 1);
                if (!(a == b))
                    throw std::runtime_error("simplicial identity fails on '" + s.label + "'");
            }
    }
}

FiniteSimplicialSet from_abstract(const std::vector<std::string>& vertices,
                                  const std::vector<std::vector<std::string>>& faces) {
    std::map<std::string, int> vindex;
    for (const auto& v : vertices) {
        if (vindex.count(v)) throw std::runtime_error("duplicate vertex '" + v + "'");
        vindex[v] = (int)vindex.size();
    }
    std::set<std::vector<int>> sets;
    for (const auto& f : faces) {
        std::vector<int> s;
        for (const auto& v : f) {
            if (!vindex.count(v)) throw std::runtime_error("unknown vertex '" + v + "'");
            s.push_back(vindex[v]);
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::runtime_error("face with a repeated vertex");
        if (s.empty()) throw std::runtime_error("empty face");
        sets.insert(s);
    }
    for (int i = 0; i < (int)vertices.size(); ++i) sets.insert({i});
    // Subset closure check.
    for (const auto& s : sets) {
        if (s.size() == 1) continue;
        for (size_t k = 0; k < s.size(); ++k) {
            std::vector<int> sub = s;
            sub.erase(sub.begin() + k);
            if (!sets.count(sub))
                throw std::runtime_error("face set not closed under subsets");
        }
    }
    FiniteSimplicialSet S;
    std::map<std::vector<int>, int> ids;
    // Dimension order so faces exist before cofaces.
    std::vector<std::vector<int>> ordered(sets.begin(), sets.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& s : ordered) {
        Simplex sx;
        sx.dim = (int)s.size() - 1;
        for (size_t k = 0; k < s.size(); ++k) {
            sx.label += (k ? "," : "") + vertices[s[k]];
        }
        if (sx.dim > 0)
            for (size_t k = 0; k < s.size(); ++k) {
                std::vector<int> sub = s;
                sub.erase(sub.begin() + k);
                sx.faces.push_back(SimplexRef{{}, ids.at(sub)});
            }
        ids[s] = S.count();
        S.simplices.push_back(std::move(sx));
    }
    S.validate();
    return S;
}

std::vector<std::vector<std::string>> subsets_closure(
    const std::vector<std::vector<std::string>>& faces) {
    std::set<std::vector<std::string>> out;
    std::vector<std::vector<std::string>> stack = faces;
    while (!stack.empty()) {
        auto f = stack.back();
        stack.pop_back();
        std::sort(f.begin(), f.end());
        if (!out.insert(f).second) continue;
        if (f.size() <= 1) continue;
        for (size_t k = 0; k < f.size(); ++k) {
            auto sub = f;
            sub.erase(sub.begin() + k);
            stack.push_back(sub);
        }
    }
    return {out.begin(), out.end()};
}

FiniteSimplicialSet standard_simplex(int n) {
    std::vector<std::string> vs;
    for (int i = 0; i <= n; ++i) vs.push_back(std::to_string(i));
    return from_abstract(vs, subsets_closure({vs}));
}

FiniteSimplicialSet minimal_s1() {
    FiniteSimplicialSet S;
    Simplex v;
    v.dim = 0;
    v.label = "pt";
    S.simplices.push_back(v);
    Simplex e;
    e.dim = 1;
    e.label = "loop";
    e.faces = {SimplexRef{{}, 0}, SimplexRef{{}, 0}};
    S.simplices.push_back(e);
    S.validate();
    return S;
}

namespace {

// Surjections [n] ->> [p] indexed by their repeat set (size n-p).
void enumerate_subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    // subsets of {0..n-1} of size k
    std::function<void(int)> rec = [&](int from) {
        if ((int)cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (int i = from; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

MonotoneMap surjection_with_repeats(int n, int p, const std::vector<int>& repeats) {
    MonotoneMap m;
    m.codomain = p;
    std::set<int> rep(repeats.begin(), repeats.end());
    int v = 0;
    for (int i = 0; i <= n; ++i) {
        m.values.push_back(v);
        if (i < n && !rep.count(i)) ++v;
    }
    return m;
}

std::vector<int> repeat_positions(const MonotoneMap& m) {
    std::vector<int> out;
    for (int i = 0; i < m.domain(); ++i)
        if (m.values[i] == m.values[i + 1]) out.push_back(i);
    return out;
}

}  // namespace

FiniteSimplicialSet product(const FiniteSimplicialSet& S, const FiniteSimplicialSet& T,
                            ProductTrace* trace) {
    FiniteSimplicialSet P;
    ProductTrace tr;
    // key: (x, alpha word, y, beta word) -> product id
    std::map<std::tuple<int, std::vector<int>, int, std::vector<int>>, int> index;

    struct Cell {
        int n;
        int x, y;
        std::vector<int> aword, bword;
    };
    std::vector<Cell> cells;
    for (int x = 0; x < S.count(); ++x)
        for (int y = 0; y < T.count(); ++y) {
            int p = S.simplices[x].dim, q = T.simplices[y].dim;
            for (int n = std::max(p, q); n <= p + q; ++n) {
                std::vector<std::vector<int>> As, Bs;
                enumerate_subsets(n, n - p, As);
                for (const auto& A : As) {
                    Bs.clear();
                    enumerate_subsets(n, n - q, Bs);
                    for (const auto& B : Bs) {
                        bool disjoint = true;
                        for (int a : A)
                            for (int b : B)
                                if (a == b) disjoint = false;
                        if (!disjoint) continue;
                        cells.push_back({n, x, y, A, B});
                    }
                }
            }
        }
    // Dimension order so faces exist before cofaces.
    std::stable_sort(cells.begin(), cells.end(),
                     [](const Cell& a, const Cell& b) { return a.n < b.n; });

    auto key_of = [](int x, const MonotoneMap& a, int y, const MonotoneMap& b) {
        std::vector<int> aw(a.values), bw(b.values);
        return std::make_tuple(x, aw, y, bw);
    };

    for (const auto& c : cells) {
        MonotoneMap alpha = surjection_with_repeats(c.n, S.simplices[c.x].dim, c.aword);
        MonotoneMap beta = surjection_with_repeats(c.n, T.simplices[c.y].dim, c.bword);
        Simplex sx;
        sx.dim = c.n;
        sx.label = "(" + S.simplices[c.x].label + "|" + T.simplices[c.y].label + ")";
        if (c.n > 0) {
            for (int i = 0; i <= c.n; ++i) {
                MonotoneMap di = MonotoneMap::face_inclusion(c.n, i);
                SimplexRef fu = S.resolve(c.x, alpha.compose(di));
                SimplexRef fv = T.resolve(c.y, beta.compose(di));
                MonotoneMap eu = MonotoneMap::from_degeneracy_word(
                    fu.degeneracies, S.simplices[fu.id].dim);
                MonotoneMap ev = MonotoneMap::from_degeneracy_word(
                    fv.degeneracies, T.simplices[fv.id].dim);
                // Joint normal form: split off the common repeats.
                std::vector<int> ru = repeat_positions(eu), rv = repeat_positions(ev);
                std::vector<int> common;
                std::set_intersection(ru.begin(), ru.end(), rv.begin(), rv.end(),
                                      std::back_inserter(common));
                std::set<int> commonset(common.begin(), common.end());
                int m = c.n - 1;
                // rho collapses at positions in common; factor eu = au o rho etc.
                MonotoneMap au, av;
                au.codomain = eu.codomain;
                av.codomain = ev.codomain;
                for (int k = 0; k <= m; ++k) {
                    if (k > 0 && commonset.count(k - 1)) continue;  // collapsed with previous
                    au.values.push_back(eu.values[k]);
                    av.values.push_back(ev.values[k]);
                }
                auto key = key_of(fu.id, au, fv.id, av);
                auto it = index.find(key);
                if (it == index.end())
                    throw std::logic_error("product: face cell not yet enumerated");
                std::vector<int> word(common.rbegin(), common.rend());
                sx.faces.push_back(SimplexRef{word, it->second});
            }
        }
        index[key_of(c.x, alpha, c.y, beta)] = P.count();
        tr.components.push_back({SimplexRef{alpha.to_degeneracy_word(), c.x},
                                 SimplexRef{beta.to_degeneracy_word(), c.y}});
        P.simplices.push_back(std::move(sx));
    }
    P.validate();
    if (trace) *trace = tr;
    return P;
}

void check_face_closed(const FiniteSimplicialSet& S, const SimplicialSubset& U) {
    for (int id : U) {
        if (id < 0 || id >= S.count()) throw std::runtime_error("subset id out of range");
        const Simplex& s = S.simplices[id];
        for (int i = 0; i <= s.dim && s.dim > 0; ++i) {
            SimplexRef f = S.face_of(id, i);
            if (!U.count(f.id))
                throw std::runtime_error("subset not face-closed at '" + s.label + "'");
        }
    }
}

FiniteSimplicialSet contract(const FiniteSimplicialSet& S, const SimplicialSubset& U,
                             std::map<int, int>* old_to_new) {
    if (U.empty()) throw std::runtime_error("contract: empty subset");
    check_face_closed(S, U);
    FiniteSimplicialSet R;
    Simplex base;
    base.dim = 0;
    base.label = "*";
    R.simplices.push_back(base);
    std::map<int, int> remap;
    for (int id = 0; id < S.count(); ++id) {
        if (U.count(id)) continue;
        remap[id] = R.count();
        R.simplices.push_back(S.simplices[id]);  // faces fixed below
    }
    for (auto& [old_id, new_id] : remap) {
        Simplex& s = R.simplices[new_id];
        for (int i = 0; i < (int)s.faces.size(); ++i) {
            const SimplexRef& f = s.faces[i];
            if (U.count(f.id)) {
                // The face collapses to a degeneracy of the basepoint.
                int fdim = s.dim - 1;
                std::vector<int> word;
                for (int k = fdim - 1; k >= 0; --k) word.push_back(k);
                s.faces[i] = SimplexRef{word, 0};
            } else {
                s.faces[i] = SimplexRef{f.degeneracies, remap.at(f.id)};
            }
        }
    }
    R.validate();
    if (old_to_new) *old_to_new = remap;
    return R;
}

BoundedChainComplex normalized_chain_complex(const FiniteSimplicialSet& S, Field f) {
    BoundedChainComplex c;
    c.lo = 0;
    c.field = f;
    int top = S.top_dim();
    std::vector<std::vector<int>> byd(top + 1);
    std::vector<int> pos(S.count(), -1);
    for (int d = 0; d <= top; ++d) {
        byd[d] = S.ids_of_dim(d);
        for (int k = 0; k < (int)byd[d].size(); ++k) pos[byd[d][k]] = k;
        c.dims.push_back((int)byd[d].size());
    }
    for (int n = 1; n <= top; ++n) {
        SparseMatrix d((int)byd[n - 1].size(), (int)byd[n].size(), f);
        for (int k = 0; k < (int)byd[n].size(); ++k) {
            int id = byd[n][k];
            for (int i = 0; i <= n; ++i) {
                SimplexRef fr = S.simplices[id].faces[i];
                if (fr.degenerate()) continue;
                Scalar sign = (i % 2) ? -Scalar::one(f) : Scalar::one(f);
                d.add(pos[fr.id], k, sign);
            }
        }
        c.differentials[n] = std::move(d);
    }
    c.validate();
    return c;
}

std::vector<int> betti_numbers(const FiniteSimplicialSet& S, Field f) {
    auto h = homology(normalized_chain_complex(S, f));
    std::vector<int> out;
    for (int n = 0; n <= S.top_dim(); ++n) out.push_back(h[n].betti);
    return out;
}

std::vector<int> compact_cohomology_betti(const FiniteSimplicialSet& S, Field f) {
    BoundedChainComplex c = normalized_chain_complex(S, f);
    // Dual complex: reverse degrees so it is again a chain complex.
    BoundedChainComplex dual;
    dual.lo = 0;
    dual.field = f;
    int top = (int)c.dims.size() - 1;
    for (int n = top; n >= 0; --n) dual.dims.push_back(c.dims[n]);
    for (int n = 1; n <= top; ++n) {
        const SparseMatrix* d = c.diff(n);
        // d^T : C^{n-1} -> C^n becomes dual differential in degree top-(n-1).
        dual.differentials[top - n + 1] = d->transpose();
    }
    dual.validate();
    auto h = homology(dual);
    std::vector<int> out;
    for (int n = 0; n <= top; ++n) out.push_back(h[top - n].betti);
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) {
        for (int i = 0; i < n; ++i) up[i] = i;
    }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

bool is_connected(const FiniteSimplicialSet& S) {
    auto verts = S.ids_of_dim(0);
    if (verts.empty()) return false;
    std::map<int, int> vpos;
    for (int k = 0; k < (int)verts.size(); ++k) vpos[verts[k]] = k;
    UnionFind uf((int)verts.size());
    for (int id : S.ids_of_dim(1)) {
        SimplexRef a = S.face_of(id, 0), b = S.face_of(id, 1);
        uf.unite(vpos.at(a.id), vpos.at(b.id));
    }
    int root = uf.find(0);
    for (int k = 1; k < (int)verts.size(); ++k)
        if (uf.find(k) != root) return false;
    return true;
}

SimplicialSubset maximal_tree(const FiniteSimplicialSet& S) {
    if (!is_connected(S)) throw std::runtime_error("maximal_tree: simplicial set disconnected");
    auto verts = S.ids_of_dim(0);
    std::map<int, int> vpos;
    for (int k = 0; k < (int)verts.size(); ++k) vpos[verts[k]] = k;
    UnionFind uf((int)verts.size());
    SimplicialSubset tree(verts.begin(), verts.end());
    for (int id : S.ids_of_dim(1)) {
        SimplexRef a = S.face_of(id, 0), b = S.face_of(id, 1);
        int pa = vpos.at(a.id), pb = vpos.at(b.id);
        if (uf.find(pa) != uf.find(pb)) {
            uf.unite(pa, pb);
            tree.insert(id);
        }
    }
    return tree;
}

}  // namespace spalg
