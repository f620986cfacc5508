#include "spalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace spalg {

Vec zero_vec(Field f, int n) { return Vec(n, Scalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::runtime_error("matrix index out of range");
    if (v.field() != field) throw FieldMismatch();
    if (v.is_zero())
        entries.erase({r, c});
    else
        entries[{r, c}] = v;
}

void SparseMatrix::add(int r, int c, const Scalar& v) { set(r, c, get(r, c) + v); }

Scalar SparseMatrix::get(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Scalar::zero(field) : it->second;
}

Vec SparseMatrix::apply(const Vec& x) const {
    if ((int)x.size() != cols) throw std::runtime_error("apply: size mismatch");
    Vec y = zero_vec(field, rows);
    for (const auto& [rc, v] : entries) y[rc.first] += v * x[rc.second];
    return y;
}

Vec SparseMatrix::column(int c) const {
    Vec y = zero_vec(field, rows);
    for (auto it = entries.lower_bound({0, 0}); it != entries.end(); ++it)
        if (it->first.second == c) y[it->first.first] = it->second;
    return y;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols, rows, field);
    for (const auto& [rc, v] : entries) t.entries[{rc.second, rc.first}] = v;
    return t;
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& inner) const {
    if (cols != inner.rows) throw std::runtime_error("compose: shape mismatch");
    if (field != inner.field) throw FieldMismatch();
    SparseMatrix out(rows, inner.cols, field);
    for (const auto& [rc, v] : entries)
        for (const auto& [rc2, w] : inner.entries)
            if (rc.second == rc2.first) out.add(rc.first, rc2.second, v * w);
    return out;
}

void IncrementalSpan::reduce(Vec& v, Vec& combo) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& coef = v[leads_[i]];
        if (coef.is_zero()) continue;
        Scalar factor = coef / rows_[i][leads_[i]];
        const Vec& row = rows_[i];
        for (int j = 0; j < dim_; ++j)
            if (!row[j].is_zero()) v[j] -= factor * row[j];
        const Vec& rc = combos_[i];
        for (size_t j = 0; j < rc.size(); ++j)
            if (!rc[j].is_zero()) combo[j] -= factor * rc[j];
    }
}

void IncrementalSpan::normalize(Vec& v, Vec& combo) const {
    if (field_.kind != Field::Kind::Rationals) return;
    // Scale to a primitive integer vector (keeps entries small).
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& x : v)
        if (!x.is_zero()) den_lcm = lcm(den_lcm, denominator(x.rational()));
    if (den_lcm == 0) return;
    for (const auto& x : v)
        if (!x.is_zero())
            num_gcd = gcd(num_gcd, BigInt(numerator(x.rational()) * (den_lcm / denominator(x.rational()))));
    if (num_gcd == 0) return;
    Scalar factor = Scalar::from_rational(field_, Rational(den_lcm, num_gcd));
    for (auto& x : v) x *= factor;
    for (auto& x : combo) x *= factor;
}

IncrementalSpan::InsertResult IncrementalSpan::insert(const Vec& v) {
    if ((int)v.size() != dim_) throw std::runtime_error("span: dimension mismatch");
    Vec w = v;
    Vec combo = zero_vec(field_, inserted_ + 1);
    combo[inserted_] = Scalar::one(field_);
    reduce(w, combo);
    ++inserted_;
    InsertResult res;
    int lead = -1;
    for (int j = 0; j < dim_; ++j)
        if (!w[j].is_zero()) {
            lead = j;
            break;
        }
    if (lead < 0) {
        // v = -sum_{i < last} combo[i] * inserted[i] / combo[last]; combo[last] = 1.
        res.was_new = false;
        res.dependency = zero_vec(field_, inserted_ - 1);
        for (int i = 0; i + 1 < (int)combo.size(); ++i) res.dependency[i] = -combo[i];
        return res;
    }
    normalize(w, combo);
    rows_.push_back(std::move(w));
    combos_.push_back(std::move(combo));
    leads_.push_back(lead);
    res.was_new = true;
    return res;
}

bool IncrementalSpan::contains(const Vec& v) const {
    Vec w = v;
    Vec combo = zero_vec(field_, inserted_);
    reduce(w, combo);
    return is_zero_vec(w);
}

std::optional<Vec> IncrementalSpan::express(const Vec& v) const {
    Vec w = v;
    Vec combo = zero_vec(field_, inserted_);
    reduce(w, combo);
    if (!is_zero_vec(w)) return std::nullopt;
    for (auto& x : combo) x = -x;
    return combo;
}

RankKernel rank_and_kernel(const SparseMatrix& m) {
    for (const auto& [rc, v] : m.entries)
        if (v.field() != m.field) throw FieldMismatch();
    IncrementalSpan span(m.field, m.rows);
    RankKernel out;
    for (int c = 0; c < m.cols; ++c) {
        auto res = span.insert(m.column(c));
        if (!res.was_new) {
            Vec k = zero_vec(m.field, m.cols);
            k[c] = Scalar::one(m.field);
            for (int i = 0; i < (int)res.dependency.size(); ++i) k[i] = -res.dependency[i];
            out.kernel_basis.push_back(std::move(k));
        }
    }
    out.rank = span.rank();
    return out;
}

std::optional<Vec> solve(const SparseMatrix& m, const Vec& b) {
    IncrementalSpan span(m.field, m.rows);
    for (int c = 0; c < m.cols; ++c) span.insert(m.column(c));
    auto coeffs = span.express(b);
    if (!coeffs) return std::nullopt;
    coeffs->resize(m.cols, Scalar::zero(m.field));
    return coeffs;
}

const SparseMatrix* BoundedChainComplex::diff(int n) const {
    auto it = differentials.find(n);
    return it == differentials.end() ? nullptr : &it->second;
}

void BoundedChainComplex::validate() const {
    for (int n = lo + 1; n <= hi(); ++n) {
        const SparseMatrix* d = diff(n);
        int expect_rows = dim(n - 1), expect_cols = dim(n);
        if (!d) {
            if (expect_rows > 0 && expect_cols > 0)
                throw std::runtime_error("missing differential in degree " + std::to_string(n));
            continue;
        }
        if (d->rows != expect_rows || d->cols != expect_cols)
            throw std::runtime_error("differential shape mismatch in degree " + std::to_string(n));
        if (d->field != field) throw FieldMismatch();
    }
    for (int n = lo + 2; n <= hi(); ++n) {
        const SparseMatrix* dn = diff(n);
        const SparseMatrix* dn1 = diff(n - 1);
        if (!dn || !dn1) continue;
        if (!dn1->compose(*dn).is_zero())
            throw std::runtime_error("d^2 != 0 at degree " + std::to_string(n));
    }
}

std::map<int, DegreeHomology> homology(const BoundedChainComplex& c) {
    std::map<int, DegreeHomology> out;
    for (int n = c.lo; n <= c.hi(); ++n) {
        if (c.dim(n) == 0) {
            out[n] = DegreeHomology{};
            continue;
        }
        HomologyBasis hb = homology_basis_at(c, n);
        DegreeHomology h;
        h.betti = hb.betti();
        h.representatives = hb.representatives();
        out[n] = std::move(h);
    }
    return out;
}

void HomologyBasis::add_boundary(const Vec& b) {
    if (!reps_.empty()) throw std::runtime_error("boundaries must be added before cycles");
    if (span_.insert(b).was_new) ++boundary_count_;
}

void HomologyBasis::add_cycle(const Vec& z) {
    auto res = span_.insert(z);
    if (res.was_new) {
        reps_.push_back(z);
        rep_slots_.push_back(span_.inserted_count() - 1);
    }
}

std::optional<Vec> HomologyBasis::express(const Vec& z) const {
    auto coeffs = span_.express(z);
    if (!coeffs) return std::nullopt;
    Vec coords = zero_vec(field_, (int)reps_.size());
    for (size_t i = 0; i < reps_.size(); ++i)
        if (rep_slots_[i] < (int)coeffs->size()) coords[i] = (*coeffs)[rep_slots_[i]];
    return coords;
}

HomologyBasis homology_basis_at(const BoundedChainComplex& c, int degree) {
    HomologyBasis hb(c.field, c.dim(degree));
    const SparseMatrix* dup = c.diff(degree + 1);
    if (dup)
        for (int j = 0; j < dup->cols; ++j) hb.add_boundary(dup->column(j));
    const SparseMatrix* dn = c.diff(degree);
    if (dn && c.dim(degree - 1) > 0) {
        RankKernel rk = rank_and_kernel(*dn);
        for (const auto& z : rk.kernel_basis) hb.add_cycle(z);
    } else {
        // No outgoing differential: every chain is a cycle.
        for (int j = 0; j < c.dim(degree); ++j) {
            Vec e = zero_vec(c.field, c.dim(degree));
            e[j] = Scalar::one(c.field);
            hb.add_cycle(e);
        }
    }
    return hb;
}

}  // namespace spalg
