/**
 * @file leonard.hpp
 * @brief Leonard pairs of q-Racah type: feasible sequences, parameter
 *        arrays, Askey-Wilson triples, the Z3-symmetric completions, the
 *        realization on the evaluation module, and the compact basis.
 */
#pragma once

#include "qtet/eval_module.hpp"

namespace qtet {

struct FeasibleSeq {
    Scalar a, b, c;
    int d;
    Scalar q = sym_q();

    // t = a*b/c, the evaluation parameter of the associated module.
    Scalar t() const { return a * b / c; }
};

// Description of the violated clause, or nullopt when feasible.
// Indeterminates are automatically feasible.
std::optional<std::string> feasibility_violation(const FeasibleSeq& s);
inline bool is_feasible(const FeasibleSeq& s) {
    return !feasibility_violation(s).has_value();
}

struct infeasible_sequence : degenerate_parameter {
    explicit infeasible_sequence(const std::string& what)
        : degenerate_parameter(what) {}
};

struct ParameterArray {
    std::vector<Scalar> theta;       // d+1 values a q^{2n-d} + a^-1 q^{d-2n}
    std::vector<Scalar> theta_star;  // d+1 values with b in place of a
    std::vector<Scalar> phi;         // d split coefficients, first kind
    std::vector<Scalar> phi_flat;    // d split coefficients, second kind

    bool eq(const ParameterArray& o) const;
};

// Throws infeasible_sequence naming the violated clause.
ParameterArray parameter_array(const FeasibleSeq& s);

struct RelativeRow {
    std::string label;
    FeasibleSeq seq;
    ParameterArray array;  // predicted by the transformation table
};

// The five-row transformation table; every row's predicted array is
// verified against direct recomputation.
std::vector<RelativeRow> relatives(const FeasibleSeq& s);

// The eight-sequence orbit attached to one Leonard pair.
std::vector<FeasibleSeq> sequence_orbit(const FeasibleSeq& s);

struct AwTriple {
    SqMatrix A, B, C;
};

// A = a x + a^-1 y + b c^-1 [x,y]/(q-q^-1) and cyclic companions.
AwTriple aw_triple(const FeasibleSeq& s, const UqTriple& t);
// A' = a y + a^-1 z + c b^-1 [y,z]/(q-q^-1) and companions.
AwTriple dual_aw_triple(const FeasibleSeq& s, const UqTriple& t);

// The three Z3-symmetric relations with the Casimir matrix on the right;
// `dual` selects the reversed product order.
VerifyReport check_aw_z3(const AwTriple& triple, const FeasibleSeq& s,
                         const SqMatrix& lambda, bool dual);

struct LeonardRealization {
    SqMatrix A, B;
    SqMatrix C, C_dual;
    std::string basis_tag;
    FeasibleSeq seq;
};

struct LeonardBuild {
    LeonardRealization real;
    VerifyReport report;
};

// Split-form pair: A lower bidiagonal with subdiagonal 1 and reversed
// eigenvalue diagonal, B upper bidiagonal with the second-kind split
// coefficients. `first_kind` selects the other normalization.
std::pair<SqMatrix, SqMatrix> split_pair(const ParameterArray& pa, bool first_kind);

// Constructs the pair on the module via the Askey-Wilson triple, checks
// the closed-form bidiagonal entries, rescales into the split form, and
// cross-checks the dual-triple route; C and C_dual are the completions.
LeonardBuild build_leonard_on_Vd(const FeasibleSeq& s);

struct Completions {
    SqMatrix C, C_dual;
    VerifyReport report;
};

// Solves each completion from the relation where it enters linearly and
// verifies the remaining relations plus C' - C = [A,B]/(q-q^-1).
Completions z3_completions(const SqMatrix& A, const SqMatrix& B, const FeasibleSeq& s);

// Transpose antiautomorphism: finds invertible P with P A^T P^-1 = A and
// P B^T P^-1 = B, then checks that it swaps the two completions.
VerifyReport dagger_check(const LeonardRealization& r);

// The pair a x01 + a^-1 x12, b x23 + b^-1 x30 on the module with t=ab/c,
// verified against the unpacked triple forms and shown isomorphic to
// build_leonard_on_Vd by an explicit intertwiner.
LeonardBuild boxtimes_realization(const FeasibleSeq& s);

// The tridiagonal compact form, built from its closed-form entries and
// independently by a diagonal rescale of the boxtimes pair; completions
// compared against their closed triangular forms.
LeonardBuild compact_basis(const FeasibleSeq& s);

// Leonard-pair shape test: diagonalizes A on the supplied eigenvalues
// (falling back to the diagonal of a triangular matrix) and requires B to
// be irreducible tridiagonal in the eigenbasis, and vice versa.
VerifyReport verify_leonard_shape(const SqMatrix& A, const SqMatrix& B,
                                  const std::vector<Scalar>& eig_a = {},
                                  const std::vector<Scalar>& eig_b = {});

}  // namespace qtet
