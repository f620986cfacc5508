#include "spalg/barslice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace spalg {

int BarSlice::index_of(const BarTuple& t) const {
    int n = t.degree();
    if (n < 0 || n > max_degree) return -1;
    auto it = std::lower_bound(basis[n].begin(), basis[n].end(), t);
    if (it == basis[n].end() || !(*it == t)) return -1;
    return (int)(it - basis[n].begin());
}

Vec BarSlice::chain_to_vec(int degree, const BarChain& c) const {
    Vec v = zero_vec(field, dim(degree));
    for (const auto& [t, coef] : c) {
        if (coef.is_zero()) continue;
        if (t.degree() != degree) throw std::runtime_error("chain degree mismatch");
        int pos = index_of(t);
        if (pos < 0) throw std::runtime_error("chain leaves the slice");
        v[pos] += coef;
    }
    return v;
}

namespace {

void chain_add(BarChain& c, const BarTuple& t, const Scalar& coef) {
    auto it = c.find(t);
    if (it == c.end()) {
        if (!coef.is_zero()) c[t] = coef;
        return;
    }
    it->second += coef;
    if (it->second.is_zero()) c.erase(it);
}

}  // namespace

BarChain bar_b(const GroupModel& g, Field f, const BarTuple& t) {
    BarChain out;
    int n = t.degree();
    Scalar one = Scalar::one(f);
    for (int i = 0; i < n; ++i) {
        Scalar sign = (i % 2) ? -one : one;
        BarTuple r;
        if (i == 0) {
            r.head = g.multiply(t.head, t.tail[0]);
            r.tail.assign(t.tail.begin() + 1, t.tail.end());
        } else {
            Word merged = g.multiply(t.tail[i - 1], t.tail[i]);
            if (merged.empty()) continue;  // normalized: interior unit dies
            r.head = t.head;
            r.tail.assign(t.tail.begin(), t.tail.begin() + i - 1);
            r.tail.push_back(merged);
            r.tail.insert(r.tail.end(), t.tail.begin() + i + 1, t.tail.end());
        }
        chain_add(out, r, sign);
    }
    if (n > 0) {
        // wrap-around term (-1)^n (a_n a_0, a_1, ..., a_{n-1})
        Scalar sign = (n % 2) ? -one : one;
        BarTuple r;
        r.head = g.multiply(t.tail[n - 1], t.head);
        r.tail.assign(t.tail.begin(), t.tail.end() - 1);
        chain_add(out, r, sign);
    }
    return out;
}

std::vector<BarTuple> bar_b_terms(const GroupModel& g, const BarTuple& t) {
    std::vector<BarTuple> out;
    int n = t.degree();
    for (int i = 0; i < n; ++i) {
        BarTuple r;
        if (i == 0) {
            r.head = g.multiply(t.head, t.tail[0]);
            r.tail.assign(t.tail.begin() + 1, t.tail.end());
        } else {
            Word merged = g.multiply(t.tail[i - 1], t.tail[i]);
            if (merged.empty()) continue;
            r.head = t.head;
            r.tail.assign(t.tail.begin(), t.tail.begin() + i - 1);
            r.tail.push_back(merged);
            r.tail.insert(r.tail.end(), t.tail.begin() + i + 1, t.tail.end());
        }
        out.push_back(std::move(r));
    }
    if (n > 0) {
        BarTuple r;
        r.head = g.multiply(t.tail[n - 1], t.head);
        r.tail.assign(t.tail.begin(), t.tail.end() - 1);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BarTuple> bar_B_terms(const GroupModel& g, const BarTuple& t) {
    std::vector<BarTuple> out;
    if (t.head.empty()) return out;
    int n = t.degree();
    std::vector<Word> all;
    all.push_back(t.head);
    for (const auto& w : t.tail) all.push_back(w);
    for (int i = 0; i <= n; ++i) {
        BarTuple r;
        r.head = {};
        for (int k = 0; k <= n; ++k) r.tail.push_back(all[(i + k) % (n + 1)]);
        out.push_back(std::move(r));
    }
    return out;
}

BarChain bar_B(const GroupModel& g, Field f, const BarTuple& t) {
    BarChain out;
    if (t.head.empty()) return out;  // tuples with unit head die under B
    int n = t.degree();
    Scalar one = Scalar::one(f);
    // all entries, cyclic order: a_0 .. a_n
    std::vector<Word> all;
    all.push_back(t.head);
    for (const auto& w : t.tail) all.push_back(w);
    for (int i = 0; i <= n; ++i) {
        BarTuple r;
        r.head = {};  // the inserted unit
        for (int k = 0; k <= n; ++k) r.tail.push_back(all[(i + k) % (n + 1)]);
        Scalar sign = ((n * i) % 2) ? -one : one;
        chain_add(out, r, sign);
    }
    return out;
}

BarSlice build_bar_slice(GroupPtr group, Field f, const Word& class_rep, int orbit_radius,
                         const std::vector<Word>& alphabet, int atom_budget, int max_degree) {
    BarSlice sl;
    sl.group = group;
    sl.field = f;
    sl.max_degree = max_degree;
    sl.atom_budget = atom_budget;

    Word rep = group->normal_form(class_rep);
    if (rep.empty()) {
        sl.class_set.insert(Word{});
    } else if (group->is_abelian()) {
        sl.class_set.insert(rep);
    } else {
        ConjugacyOrbit orbit = conjugacy_class_in_ball(*group, rep, orbit_radius);
        sl.class_set.insert(orbit.elements.begin(), orbit.elements.end());
    }

    // Symbol set: alphabet elements and inverses, identity excluded.
    std::set<Word> symset;
    for (const auto& a : alphabet) {
        Word na = group->normal_form(a);
        if (!na.empty()) {
            symset.insert(na);
            symset.insert(group->invert(na));
        }
    }
    std::vector<Word> symbols(symset.begin(), symset.end());

    // Atomic tuples: head in symbols + identity, tail entries in symbols,
    // at most atom_budget non-identity entries, product in the class set.
    std::set<BarTuple> seen;
    std::deque<BarTuple> queue;
    auto enqueue = [&](const BarTuple& t) {
        if (t.degree() > max_degree) return;
        if (seen.insert(t).second) queue.push_back(t);
    };
    {
        // entries[0] is the head (possibly the identity); the rest is the tail.
        std::vector<Word> entries;
        std::function<void(int, const Word&)> rec = [&](int atoms_left, const Word& prod) {
            if (!entries.empty() && (int)entries.size() - 1 <= max_degree &&
                sl.class_set.count(prod)) {
                BarTuple t;
                t.head = entries[0];
                t.tail.assign(entries.begin() + 1, entries.end());
                enqueue(t);
            }
            if (atoms_left == 0 || (int)entries.size() > max_degree) return;
            for (const auto& s : symbols) {
                entries.push_back(s);
                rec(atoms_left - 1, group->multiply(prod, s));
                entries.pop_back();
            }
        };
        entries.push_back(Word{});  // identity head costs no atoms
        rec(atom_budget, Word{});
        entries.pop_back();
        rec(atom_budget, Word{});  // nonidentity head consumes the first atom
    }

    // Close under the operator terms (structurally: tuples are kept even
    // when their coefficients cancel, so degree-zero parts are populated).
    while (!queue.empty()) {
        BarTuple t = queue.front();
        queue.pop_front();
        for (const auto& r : bar_b_terms(*group, t)) enqueue(r);
        if (t.degree() < max_degree)
            for (const auto& r : bar_B_terms(*group, t)) enqueue(r);
    }

    sl.basis.assign(max_degree + 1, {});
    for (const auto& t : seen) sl.basis[t.degree()].push_back(t);
    for (auto& level : sl.basis) std::sort(level.begin(), level.end());

    sl.b_mat.assign(max_degree + 1, SparseMatrix());
    sl.B_mat.assign(max_degree + 1, SparseMatrix());
    for (int n = 1; n <= max_degree; ++n) {
        SparseMatrix mat(sl.dim(n - 1), sl.dim(n), f);
        for (int k = 0; k < sl.dim(n); ++k)
            for (const auto& [r, c] : bar_b(*group, f, sl.basis[n][k])) {
                int pos = sl.index_of(r);
                if (pos < 0) throw std::logic_error("bar slice not closed under b");
                mat.add(pos, k, c);
            }
        sl.b_mat[n] = std::move(mat);
    }
    for (int n = 0; n < max_degree; ++n) {
        SparseMatrix mat(sl.dim(n + 1), sl.dim(n), f);
        for (int k = 0; k < sl.dim(n); ++k)
            for (const auto& [r, c] : bar_B(*group, f, sl.basis[n][k])) {
                int pos = sl.index_of(r);
                if (pos < 0) throw std::logic_error("bar slice not closed under B");
                mat.add(pos, k, c);
            }
        sl.B_mat[n] = std::move(mat);
    }
    return sl;
}

CyclicTower::CyclicTower(const BarSlice& slice, int N) : slice_(slice), N_(N) {
    if (slice.max_degree < N + 1)
        throw std::runtime_error("cyclic tower needs slice degrees up to N+1");
    tslots_.assign(N_ + 2, {});
    tdim_.assign(N_ + 2, 0);
    for (int n = 0; n <= N_ + 1; ++n) {
        int off = 0;
        for (int p = 0; n - 2 * p >= 0; ++p) {
            tslots_[n].push_back({p, off});
            off += slice_.dim(n - 2 * p);
        }
        tdim_[n] = off;
    }
    D_.assign(N_ + 2, SparseMatrix());
    for (int n = 1; n <= N_ + 1; ++n) {
        SparseMatrix D(tdim_[n - 1], tdim_[n], slice_.field);
        for (auto [p, off] : tslots_[n]) {
            int row_deg = n - 2 * p;
            // b: C_{row_deg} -> C_{row_deg-1} stays in column p (total n-1).
            if (row_deg >= 1 && p < (int)tslots_[n - 1].size()) {
                int dst_off = tslots_[n - 1][p].second;
                const SparseMatrix& b = slice_.b_mat[row_deg];
                for (const auto& [rc, v] : b.entries)
                    D.add(dst_off + rc.first, off + rc.second, v);
            }
            // B: C_{row_deg} -> C_{row_deg+1} moves to column p-1.
            if (p >= 1) {
                int dst_off = tslots_[n - 1][p - 1].second;
                const SparseMatrix& B = slice_.B_mat[row_deg];
                for (const auto& [rc, v] : B.entries)
                    D.add(dst_off + rc.first, off + rc.second, v);
            }
        }
        D_[n] = std::move(D);
    }
    // Homology of the total complex at degrees 0..N, and of b at 0..N.
    hc_.reserve(N_ + 1);
    hh_.reserve(N_ + 1);
    for (int n = 0; n <= N_; ++n) {
        HomologyBasis hcb(slice_.field, tdim_[n]);
        for (int j = 0; j < D_[n + 1].cols; ++j) hcb.add_boundary(D_[n + 1].column(j));
        if (n >= 1 && tdim_[n - 1] > 0) {
            RankKernel rk = rank_and_kernel(D_[n]);
            for (const auto& z : rk.kernel_basis) hcb.add_cycle(z);
        } else {
            for (int j = 0; j < tdim_[n]; ++j) {
                Vec e = zero_vec(slice_.field, tdim_[n]);
                e[j] = Scalar::one(slice_.field);
                hcb.add_cycle(e);
            }
        }
        hc_reps_.push_back(hcb.representatives());
        hc_.push_back(std::move(hcb));

        HomologyBasis hhb(slice_.field, slice_.dim(n));
        for (int j = 0; j < slice_.b_mat[n + 1].cols; ++j)
            hhb.add_boundary(slice_.b_mat[n + 1].column(j));
        if (n >= 1 && slice_.dim(n - 1) > 0) {
            RankKernel rk = rank_and_kernel(slice_.b_mat[n]);
            for (const auto& z : rk.kernel_basis) hhb.add_cycle(z);
        } else {
            for (int j = 0; j < slice_.dim(n); ++j) {
                Vec e = zero_vec(slice_.field, slice_.dim(n));
                e[j] = Scalar::one(slice_.field);
                hhb.add_cycle(e);
            }
        }
        hh_reps_.push_back(hhb.representatives());
        hh_.push_back(std::move(hhb));
    }
}

int CyclicTower::hc_betti(int n) const { return (n < 0 || n > N_) ? 0 : hc_[n].betti(); }
int CyclicTower::hh_betti(int n) const { return (n < 0 || n > N_) ? 0 : hh_[n].betti(); }

const std::vector<Vec>& CyclicTower::hh_representatives(int n) const { return hh_reps_[n]; }

std::optional<Vec> CyclicTower::express_hh(int n, const Vec& cycle) const {
    return hh_[n].express(cycle);
}

Vec CyclicTower::project_column0(int n, const Vec& total) const {
    Vec out = zero_vec(slice_.field, slice_.dim(n));
    for (int j = 0; j < slice_.dim(n); ++j) out[j] = total[j];  // column 0 offset is 0
    return out;
}

Vec CyclicTower::drop_column0(int n, const Vec& total) const {
    // T_n = C_n + T_{n-2}; the tail aligns with T_{n-2} slot for slot.
    Vec out = zero_vec(slice_.field, tdim(n - 2));
    int shift = slice_.dim(n);
    for (int j = 0; j < tdim(n - 2); ++j) out[j] = total[shift + j];
    return out;
}

Vec CyclicTower::include_column0(int n, const Vec& c) const {
    Vec out = zero_vec(slice_.field, tdim(n));
    for (int j = 0; j < (int)c.size(); ++j) out[j] = c[j];
    return out;
}

SparseMatrix CyclicTower::S_map(int n) const {
    int src = hc_betti(n), dst = hc_betti(n - 2);
    SparseMatrix m(dst, src, slice_.field);
    if (n - 2 < 0) return m;
    for (int k = 0; k < src; ++k) {
        Vec img = drop_column0(n, hc_reps_[n][k]);
        auto coords = hc_[n - 2].express(img);
        if (!coords) throw std::logic_error("S map image is not a cycle class");
        for (int r = 0; r < dst; ++r) m.set(r, k, (*coords)[r]);
    }
    return m;
}

SparseMatrix CyclicTower::B_map(int n) const {
    // HC_{n-1} -> HH_n: take column 0 of the representative and apply B.
    int src = hc_betti(n - 1), dst = hh_betti(n);
    SparseMatrix m(dst, src, slice_.field);
    if (n < 1 || n > N_) return m;
    for (int k = 0; k < src; ++k) {
        Vec col0 = project_column0(n - 1, hc_reps_[n - 1][k]);
        Vec img = slice_.B_mat[n - 1].apply(col0);
        auto coords = hh_[n].express(img);
        if (!coords) throw std::logic_error("B map image is not a b-cycle class");
        for (int r = 0; r < dst; ++r) m.set(r, k, (*coords)[r]);
    }
    return m;
}

SparseMatrix CyclicTower::I_map(int n) const {
    int src = hh_betti(n), dst = hc_betti(n);
    SparseMatrix m(dst, src, slice_.field);
    for (int k = 0; k < src; ++k) {
        Vec img = include_column0(n, hh_reps_[n][k]);
        auto coords = hc_[n].express(img);
        if (!coords) throw std::logic_error("I map image is not a total cycle class");
        for (int r = 0; r < dst; ++r) m.set(r, k, (*coords)[r]);
    }
    return m;
}

int NerveSlice::index_of(int degree, const std::vector<Word>& t) const {
    if (degree < 0 || degree > max_degree) return -1;
    auto it = std::lower_bound(basis[degree].begin(), basis[degree].end(), t);
    if (it == basis[degree].end() || *it != t) return -1;
    return (int)(it - basis[degree].begin());
}

NerveSlice build_nerve_slice(const BarSlice& slice) {
    NerveSlice nv;
    nv.group = slice.group;
    nv.field = slice.field;
    nv.max_degree = slice.max_degree;
    const GroupModel& g = *slice.group;

    std::set<std::vector<Word>> seen;
    std::deque<std::vector<Word>> queue;
    auto enqueue = [&](const std::vector<Word>& t) {
        if (seen.insert(t).second) queue.push_back(t);
    };
    for (int n = 0; n <= slice.max_degree; ++n)
        for (const auto& t : slice.basis[n]) enqueue(t.tail);
    while (!queue.empty()) {
        std::vector<Word> t = queue.front();
        queue.pop_front();
        int n = (int)t.size();
        if (n == 0) continue;
        // nerve differential terms
        enqueue(std::vector<Word>(t.begin() + 1, t.end()));
        enqueue(std::vector<Word>(t.begin(), t.end() - 1));
        for (int i = 0; i + 1 < n; ++i) {
            Word merged = g.multiply(t[i], t[i + 1]);
            if (merged.empty()) continue;
            std::vector<Word> r(t.begin(), t.begin() + i);
            r.push_back(merged);
            r.insert(r.end(), t.begin() + i + 2, t.end());
            enqueue(r);
        }
    }
    nv.basis.assign(nv.max_degree + 1, {});
    for (const auto& t : seen)
        if ((int)t.size() <= nv.max_degree) nv.basis[t.size()].push_back(t);
    for (auto& level : nv.basis) std::sort(level.begin(), level.end());

    Scalar one = Scalar::one(nv.field);
    nv.d_mat.assign(nv.max_degree + 1, SparseMatrix());
    for (int n = 1; n <= nv.max_degree; ++n) {
        SparseMatrix mat(nv.dim(n - 1), nv.dim(n), nv.field);
        for (int k = 0; k < nv.dim(n); ++k) {
            const auto& t = nv.basis[n][k];
            auto add = [&](const std::vector<Word>& r, int sign) {
                int pos = nv.index_of(n - 1, r);
                if (pos < 0) throw std::logic_error("nerve slice not closed");
                mat.add(pos, k, sign > 0 ? one : -one);
            };
            add(std::vector<Word>(t.begin() + 1, t.end()), 1);
            for (int i = 0; i + 1 < n; ++i) {
                Word merged = g.multiply(t[i], t[i + 1]);
                if (merged.empty()) continue;
                std::vector<Word> r(t.begin(), t.begin() + i);
                r.push_back(merged);
                r.insert(r.end(), t.begin() + i + 2, t.end());
                add(r, (i + 1) % 2 ? -1 : 1);
            }
            add(std::vector<Word>(t.begin(), t.end() - 1), n % 2 ? -1 : 1);
        }
        nv.d_mat[n] = std::move(mat);
    }
    return nv;
}

Vec res_to_nerve(const BarSlice& slice, const NerveSlice& nerve, int degree, const Vec& chain) {
    Vec out = zero_vec(nerve.field, nerve.dim(degree));
    for (int k = 0; k < slice.dim(degree); ++k) {
        if (chain[k].is_zero()) continue;
        int pos = nerve.index_of(degree, slice.basis[degree][k].tail);
        if (pos < 0) throw std::logic_error("res image outside the nerve slice");
        out[pos] += chain[k];
    }
    return out;
}

}  // namespace spalg
