#include "spalg/intsolve.hpp"

#include <stdexcept>

namespace spalg {

void LinearSystem::add_equation(const std::vector<BigInt>& coeffs, const BigInt& b) {
    if ((int)coeffs.size() != nvars()) throw std::runtime_error("equation arity mismatch");
    rows.push_back(coeffs);
    rhs.push_back(b);
}

namespace {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZMat = std::vector<std::vector<BigInt>>;

bool is_integral(const Rational& q) { return denominator(q) == 1; }

// Row-reduce [A | b | I]; returns echelon rows with multiplier tracking.
struct RationalReduction {
    QMat rows;        // nvars + 1 + neqs wide
    int nvars, neqs;
    std::vector<int> pivot_col;  // per echelon row, < nvars, or == nvars (inconsistency row)
};

RationalReduction rational_reduce(const LinearSystem& sys) {
    RationalReduction rr;
    rr.nvars = sys.nvars();
    rr.neqs = sys.neqs();
    int width = rr.nvars + 1 + rr.neqs;
    QMat work;
    for (int i = 0; i < rr.neqs; ++i) {
        QVec row(width, Rational(0));
        for (int j = 0; j < rr.nvars; ++j) row[j] = Rational(sys.rows[i][j]);
        row[rr.nvars] = Rational(sys.rhs[i]);
        row[rr.nvars + 1 + i] = 1;
        work.push_back(std::move(row));
    }
    int lead = 0;
    for (int col = 0; col <= rr.nvars && lead < (int)work.size(); ++col) {
        int piv = -1;
        for (int i = lead; i < (int)work.size(); ++i)
            if (work[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(work[lead], work[piv]);
        Rational inv = Rational(1) / work[lead][col];
        for (auto& x : work[lead]) x *= inv;
        for (int i = 0; i < (int)work.size(); ++i) {
            if (i == lead || work[i][col] == 0) continue;
            Rational f = work[i][col];
            for (int j = 0; j < width; ++j) work[i][j] -= f * work[lead][j];
        }
        rr.rows.push_back(work[lead]);
        rr.pivot_col.push_back(col);
        ++lead;
    }
    return rr;
}

// Column Hermite staircase: A U = H with U unimodular.  Tracks U and U^{-1}.
struct HermiteData {
    ZMat H, U;
    std::vector<int> pivot_rows;  // row of the pivot in column k
};

HermiteData hermite(const ZMat& A, int m, int n) {
    HermiteData hd;
    hd.H = A;
    hd.U.assign(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) hd.U[i][i] = 1;

    auto col_addmul = [&](int dst, int src, const BigInt& q) {
        for (int r = 0; r < m; ++r) hd.H[r][dst] += q * hd.H[r][src];
        for (int r = 0; r < n; ++r) hd.U[r][dst] += q * hd.U[r][src];
    };
    auto col_swap = [&](int a, int b) {
        for (int r = 0; r < m; ++r) std::swap(hd.H[r][a], hd.H[r][b]);
        for (int r = 0; r < n; ++r) std::swap(hd.U[r][a], hd.U[r][b]);
    };
    auto col_negate = [&](int a) {
        for (int r = 0; r < m; ++r) hd.H[r][a] = -hd.H[r][a];
        for (int r = 0; r < n; ++r) hd.U[r][a] = -hd.U[r][a];
    };

    int k = 0;
    for (int r = 0; r < m && k < n; ++r) {
        // Euclid across columns k..n-1 on row r.
        while (true) {
            int nz = -1;
            for (int j = k; j < n; ++j)
                if (hd.H[r][j] != 0) {
                    if (nz < 0 || abs(hd.H[r][j]) < abs(hd.H[r][nz])) nz = j;
                }
            if (nz < 0) break;  // row r already clear on k..
            bool others = false;
            for (int j = k; j < n; ++j) {
                if (j == nz || hd.H[r][j] == 0) continue;
                BigInt q = hd.H[r][j] / hd.H[r][nz];
                col_addmul(j, nz, -q);
                others = others || hd.H[r][j] != 0;
            }
            if (!others) {
                if (nz != k) col_swap(nz, k);
                if (hd.H[r][k] < 0) col_negate(k);
                hd.pivot_rows.push_back(r);
                ++k;
                break;
            }
        }
    }
    return hd;
}

}  // namespace

IntegerFeasibility integer_feasible(const LinearSystem& sys) {
    int n = sys.nvars(), m = sys.neqs();

    RationalReduction rr = rational_reduce(sys);

    // Rational inconsistency: a pivot in the rhs column.
    for (size_t i = 0; i < rr.rows.size(); ++i) {
        if (rr.pivot_col[i] == n) {
            InfeasibilityCertificate cert;
            cert.kind = InfeasibilityCertificate::Kind::RationalInfeasible;
            cert.multipliers.assign(m, Rational(0));
            for (int e = 0; e < m; ++e) cert.multipliers[e] = rr.rows[i][n + 1 + e];
            return cert;
        }
    }

    // A variable with a single forced (constant) value: pivot row whose only
    // support among variables is the pivot itself.
    for (size_t i = 0; i < rr.rows.size(); ++i) {
        int pc = rr.pivot_col[i];
        bool lone = true;
        for (int j = 0; j < n; ++j)
            if (j != pc && rr.rows[i][j] != 0) {
                lone = false;
                break;
            }
        if (lone && !is_integral(rr.rows[i][n])) {
            InfeasibilityCertificate cert;
            cert.kind = InfeasibilityCertificate::Kind::ForcedNonInteger;
            cert.forced_var = pc;
            cert.forced_value = rr.rows[i][n];
            cert.multipliers.assign(m, Rational(0));
            for (int e = 0; e < m; ++e) cert.multipliers[e] = rr.rows[i][n + 1 + e];
            return cert;
        }
    }

    // Hermite staircase for the integer lattice question.
    HermiteData hd = hermite(sys.rows, m, n);
    int s = (int)hd.pivot_rows.size();
    // Solve H y = b on the pivot rows; y_k tracked as a functional of b.
    std::vector<Rational> y(s, Rational(0));
    QMat yfun(s, QVec(m, Rational(0)));
    for (int k = 0; k < s; ++k) {
        int r = hd.pivot_rows[k];
        Rational acc = Rational(sys.rhs[r]);
        QVec fn(m, Rational(0));
        fn[r] = 1;
        for (int j = 0; j < k; ++j) {
            if (hd.H[r][j] == 0) continue;
            Rational c(hd.H[r][j]);
            acc -= c * y[j];
            for (int e = 0; e < m; ++e) fn[e] -= c * yfun[j][e];
        }
        Rational piv(hd.H[r][k]);
        y[k] = acc / piv;
        for (int e = 0; e < m; ++e) fn[e] = fn[e] / piv;
        yfun[k] = fn;
        if (!is_integral(y[k])) {
            InfeasibilityCertificate cert;
            cert.kind = InfeasibilityCertificate::Kind::NonIntegralCombination;
            cert.multipliers = fn;
            cert.forced_value = y[k];
            return cert;
        }
    }

    IntegerWitness w;
    w.values.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < s; ++k)
            w.values[i] += hd.U[i][k] * numerator(y[k]);
    if (!verify_witness(sys, w)) throw std::runtime_error("internal: witness failed re-substitution");
    return w;
}

bool verify_witness(const LinearSystem& sys, const IntegerWitness& w) {
    if ((int)w.values.size() != sys.nvars()) return false;
    for (int i = 0; i < sys.neqs(); ++i) {
        BigInt acc = 0;
        for (int j = 0; j < sys.nvars(); ++j) acc += sys.rows[i][j] * w.values[j];
        if (acc != sys.rhs[i]) return false;
    }
    return true;
}

bool verify_certificate(const LinearSystem& sys, const InfeasibilityCertificate& c) {
    if ((int)c.multipliers.size() != sys.neqs()) return false;
    std::vector<Rational> lhs(sys.nvars(), Rational(0));
    Rational rhs(0);
    for (int i = 0; i < sys.neqs(); ++i) {
        for (int j = 0; j < sys.nvars(); ++j) lhs[j] += c.multipliers[i] * Rational(sys.rows[i][j]);
        rhs += c.multipliers[i] * Rational(sys.rhs[i]);
    }
    if (c.kind == InfeasibilityCertificate::Kind::RationalInfeasible) {
        for (const auto& x : lhs)
            if (x != 0) return false;
        return rhs != 0;
    }
    if (c.kind == InfeasibilityCertificate::Kind::ForcedNonInteger) {
        for (int j = 0; j < sys.nvars(); ++j)
            if (lhs[j] != (j == c.forced_var ? Rational(1) : Rational(0))) return false;
        return rhs == c.forced_value && !is_integral(rhs);
    }
    for (const auto& x : lhs)
        if (!is_integral(x)) return false;
    return !is_integral(rhs);
}

}  // namespace spalg
