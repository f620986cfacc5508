// Integer feasibility of small linear systems, with certifying output:
// either an integer witness or a rational functional proving infeasibility.
#ifndef SPALG_INTSOLVE_HPP
#define SPALG_INTSOLVE_HPP

#include <string>
#include <variant>
#include <vector>

#include "spalg/scalar.hpp"

namespace spalg {

struct LinearSystem {
    std::vector<std::string> var_names;
    std::vector<std::vector<BigInt>> rows;  // coefficient rows, one per equation
    std::vector<BigInt> rhs;

    int nvars() const { return (int)var_names.size(); }
    int neqs() const { return (int)rows.size(); }
    void add_equation(const std::vector<BigInt>& coeffs, const BigInt& b);
};

struct IntegerWitness {
    std::vector<BigInt> values;
};

struct InfeasibilityCertificate {
    enum class Kind {
        RationalInfeasible,  // lambda^T A = 0, lambda^T b != 0
        ForcedNonInteger,    // lambda^T A = e_var, lambda^T b = forced_value (not integral)
        NonIntegralCombination  // lambda^T A integral, lambda^T b not integral
    };
    Kind kind = Kind::NonIntegralCombination;
    std::vector<Rational> multipliers;  // lambda, one entry per equation
    int forced_var = -1;
    Rational forced_value = 0;
};

using IntegerFeasibility = std::variant<IntegerWitness, InfeasibilityCertificate>;

IntegerFeasibility integer_feasible(const LinearSystem& sys);

// Re-substitution checks used by tests and before reporting.
bool verify_witness(const LinearSystem& sys, const IntegerWitness& w);
bool verify_certificate(const LinearSystem& sys, const InfeasibilityCertificate& c);

}  // namespace spalg

#endif
