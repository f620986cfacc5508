// Sparse exact linear algebra over Q and F_p: rank, kernel, solving, and
// homology of bounded chain complexes.
#ifndef SPALG_LINALG_HPP
#define SPALG_LINALG_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "spalg/scalar.hpp"

namespace spalg {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, int n);
bool is_zero_vec(const Vec& v);

struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    Field field = Field::rationals();
    std::map<std::pair<int, int>, Scalar> entries;  // no explicit zeros

    SparseMatrix() = default;
    SparseMatrix(int r, int c, Field f) : rows(r), cols(c), field(f) {}

    void set(int r, int c, const Scalar& v);
    void add(int r, int c, const Scalar& v);
    Scalar get(int r, int c) const;

    Vec apply(const Vec& x) const;  // m * x
    Vec column(int c) const;
    SparseMatrix transpose() const;
    SparseMatrix compose(const SparseMatrix& inner) const;  // this * inner
    bool is_zero() const { return entries.empty(); }
};

// Incremental echelon span with dependency tracking.  Inserting a vector
// either extends the span or yields the linear combination expressing the
// vector over previously inserted ones.  Over Q every stored row is scaled
// to a primitive integer vector, which keeps the elimination fraction-free.
class IncrementalSpan {
  public:
    IncrementalSpan(Field f, int dim) : field_(f), dim_(dim) {}

    struct InsertResult {
        bool was_new = false;
        // When !was_new: v = sum_i dependency[i] * inserted[i] over all
        // previously inserted vectors (index = insertion order).
        Vec dependency;
    };

    InsertResult insert(const Vec& v);
    bool contains(const Vec& v) const;
    // Coefficients expressing v over the inserted vectors, if v lies in
    // the span.
    std::optional<Vec> express(const Vec& v) const;
    int rank() const { return (int)rows_.size(); }
    int inserted_count() const { return inserted_; }

  private:
    Field field_;
    int dim_;
    int inserted_ = 0;
    // Echelon rows with distinct leading indices, plus the expression of
    // each row over the inserted vectors.
    std::vector<Vec> rows_;
    std::vector<Vec> combos_;
    std::vector<int> leads_;

    void reduce(Vec& v, Vec& combo) const;
    void normalize(Vec& v, Vec& combo) const;
};

struct RankKernel {
    int rank = 0;
    std::vector<Vec> kernel_basis;
};

RankKernel rank_and_kernel(const SparseMatrix& m);

// A particular solution of m x = b, if one exists.
std::optional<Vec> solve(const SparseMatrix& m, const Vec& b);

struct BoundedChainComplex {
    // Degrees lo..hi; dims[k] is the dimension in degree lo+k.
    int lo = 0;
    std::vector<int> dims;
    Field field = Field::rationals();
    // differentials[n] : C_n -> C_{n-1}; present for lo < n <= hi.
    std::map<int, SparseMatrix> differentials;

    int hi() const { return lo + (int)dims.size() - 1; }
    int dim(int n) const {
        return (n < lo || n > hi()) ? 0 : dims[n - lo];
    }
    const SparseMatrix* diff(int n) const;
    // Shape and d._ = 0 checks; throws naming the failing degree.
    void validate() const;
};

struct DegreeHomology {
    int betti = 0;
    std::vector<Vec> representatives;  // cycles, independent mod boundaries
};

// Per-degree betti numbers and representatives (complex assumed valid).
std::map<int, DegreeHomology> homology(const BoundedChainComplex& c);

// Expression of cycles in a fixed homology basis at one degree.
class HomologyBasis {
  public:
    HomologyBasis(Field f, int dim) : span_(f, dim), field_(f), dim_(dim) {}

    // Boundaries first, then candidate cycles (duplicates simply fail to
    // extend the span).
    void add_boundary(const Vec& b);
    void add_cycle(const Vec& z);

    int betti() const { return (int)reps_.size(); }
    const std::vector<Vec>& representatives() const { return reps_; }

    // Coordinates of [z] in the representative basis; nullopt if z is not
    // in the span of boundaries + representatives.
    std::optional<Vec> express(const Vec& z) const;

  private:
    IncrementalSpan span_;
    Field field_;
    int dim_;
    int boundary_count_ = 0;
    std::vector<Vec> reps_;
    std::vector<int> rep_slots_;  // insertion indices of representatives
};

HomologyBasis homology_basis_at(const BoundedChainComplex& c, int degree);

}  // namespace spalg

#endif
