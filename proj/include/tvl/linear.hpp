#pragma once

#include "tvl/ints.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tvl::linear {

enum class Rel { Eq, Le, Ge, Lt, Gt };

struct LinTerm {
    int var = 0;
    Int coeff;
};

// Sparse row: sum of coeff*x_var  rel  rhs.  Terms sorted by var, no zeros.
struct LinRow {
    std::vector<LinTerm> terms;
    Rel rel = Rel::Eq;
    Int rhs = 0;

    void add(int var, Int coeff);
    void normalize();
};

LinRow make_row(const std::vector<Int>& dense, Rel rel, Int rhs);

// Integer linear system over variables ranging in N.
struct IntegerLinearSystem {
    int var_count = 0;
    std::vector<LinRow> rows;

    void add_row(LinRow r);
    void add_dense_row(const std::vector<Int>& coeffs, Rel rel, Int rhs);

    Int norm_A() const;
    Int norm_c() const;
    bool homogeneous() const;
    bool equalities_only() const;

    // Evaluates every row at the given point.
    bool satisfied_by(const std::vector<Int>& v) const;

    // Equivalent equalities-only system; slack variables are appended after
    // the original ones (integer semantics, so strict rows shift by 1).
    IntegerLinearSystem slacked() const;
};

// Raised when a resource cap was hit; callers map this to Inconclusive.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StateBudgetExceeded : ResourceError {
    explicit StateBudgetExceeded(uint64_t states);
    uint64_t state_count;
};
struct BoxTooLarge : ResourceError {
    using ResourceError::ResourceError;
};
struct BudgetExceeded : ResourceError {
    using ResourceError::ResourceError;
};

struct NonHomogeneousStrict : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact rational feasibility of the system with x >= 0 (no floating point).
// Strict rows are admitted only in homogeneous systems, where the cone is
// scale-invariant and "> 0" can be normalized to ">= 1".
bool rational_feasible(const IntegerLinearSystem& sys);

// Conjunction of rows plus disjunctive clauses, all over shared N-variables.
// Zero-implications (y1 = 0) -> (y2 = 0) are stored as the clause
// (sum y1 >= 1) or (sum y2 = 0), which is equivalent over N.
struct ConstraintProgram {
    int var_count = 0;
    std::vector<LinRow> rows;

    struct Clause {
        std::vector<std::vector<LinRow>> options;
    };
    std::vector<Clause> clauses;

    // Optional per-variable cap; -1 means "use the search box".
    std::vector<Int> upper_bounds;

    void add_row(LinRow r);
    void add_system(const IntegerLinearSystem& sys, int var_offset);
    void add_zero_implication(const std::vector<int>& lhs_vars,
                              const std::vector<int>& rhs_vars);
    void pin(int var, Int value);
    bool satisfied_by(const std::vector<Int>& v) const;
};

// Depth-first search with interval propagation; complete within the box.
// node_budget = 0 means unlimited, otherwise BudgetExceeded may be thrown.
std::optional<std::vector<Int>> integer_solve_bounded(const ConstraintProgram& prog,
                                                      const Int& box,
                                                      uint64_t node_budget = 0);

struct SmallSolutionBounds {
    Int nonzero_count_bound; // c1 * t * ceil(log2(max(1, c2*t*M)))
    Int value_bound;         // c1 * t * (t*M)^(c2*t)
};

// Bounds justifying search truncation; never used to refute feasibility.
SmallSolutionBounds small_solution_bounds(const IntegerLinearSystem& sys,
                                          const Int& c1, const Int& c2);

// L = ((n+1)*||A|| + ||c|| + 1)^m : max entry of any minimal solution.
Int minimal_solution_box(const IntegerLinearSystem& sys);

// All <=-minimal solutions of an equalities-only system, via enumeration of
// the box [0, L]^n.  Throws BoxTooLarge when (L+1)^n exceeds the budget.
std::vector<std::vector<Int>> minimal_solutions(const IntegerLinearSystem& sys,
                                                uint64_t enumeration_budget = 4'000'000);

// Same set, computed by a completion procedure (Contejean-Devie) that does
// not materialize the box; used where the box is astronomically large.
std::vector<std::vector<Int>> minimal_solutions_complete(const IntegerLinearSystem& sys,
                                                         uint64_t node_budget = 400'000);

// Acyclic unambiguous automaton with exactly one accepting state whose
// Parikh image is sandwiched between the minimal solutions and sol(Q).
struct SimpleAutomaton {
    struct Trans {
        int src = 0;
        int letter = 0;
        int dst = 0;
    };
    int letter_count = 0;
    int state_count = 0;
    int initial = 0;
    int accepting = 0;
    std::vector<Trans> transitions;

    bool accepts_only_epsilon() const { return transitions.empty() && initial == accepting; }
    std::string dump() const; // debug format: "state s; trans src letter dst; acc q"
};

struct AutomatonOptions {
    uint64_t state_budget = 1'000'000;
    uint64_t cd_node_budget = 400'000;
};

SimpleAutomaton build_simple_automaton(const IntegerLinearSystem& sys,
                                       const AutomatonOptions& opts = {});

// B_M in {0,1}^(n x t): row i marks the transitions labeled with letter i.
std::vector<std::vector<Int>> path_matrix(const SimpleAutomaton& aut);
// A_M in {-1,0,1}^(k x t): +1 incoming / -1 outgoing per interior state.
std::vector<std::vector<Int>> flow_matrix(const SimpleAutomaton& aut);

// The derived system whose solution set is the Kleene star of sol(A x = c):
//   exists y1, y2:  x = proj_n(y1) + y2,  Atilde y1 = 0,  A y2 = 0,
//                   (y1 = 0) -> (y2 = 0)
// with Atilde = [ -I | B_M ; 0 | A_M ].
struct StarSystem {
    IntegerLinearSystem original;
    bool homogeneous_bypass = false; // c = 0: star(sol) = sol
    SimpleAutomaton automaton;
    int n = 0;          // original variables
    int k_states = 0;
    int t_transitions = 0;

    // Variable layout of the membership program: x (n), y1 (n + t), y2 (n).
    ConstraintProgram membership_program;

    std::vector<std::vector<Int>> a_tilde() const; // (n+k) x (n+t)
    Int norm_a_tilde() const;
};

StarSystem kleene_star_system(const IntegerLinearSystem& sys,
                              const AutomatonOptions& opts = {});

// Decides v in star(sol) exactly; the box is widened to ||v||_1, which
// bounds every flow variable of any witness.
bool star_membership(const StarSystem& star, const std::vector<Int>& v,
                     const Int& box = 0);

} // namespace tvl::linear
