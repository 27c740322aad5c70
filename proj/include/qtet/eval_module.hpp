/**
 * @file eval_module.hpp
 * @brief The (d+1)-dimensional evaluation module with parameter t: its
 *        generator matrices in all 24 normalized bases, the transition
 *        matrices with their pairing prefactors, the exchanger, and the
 *        eigenflag containment predicates.
 */
#pragma once

#include <array>

#include "qtet/basis.hpp"

namespace qtet {

/**
 * The twelve pairing values between the distinguished vectors of the
 * module and its dual. Seven are free; the remaining five are determined
 * by the multiplicative relation system (see derive_pairing).
 */
struct PairingTable {
    // value(i,j) for i != j; the diagonal is unused.
    std::array<std::array<Scalar, 4>, 4> values;

    const Scalar& at(int i, int j) const;
    Scalar& at(int i, int j);
};

// The seven free pairings, in the order
// (e0,e1*), (e0,e2*), (e0,e3*), (e1,e2*), (e2,e1*), (e3,e0*), (e3,e1*).
using Free7 = std::array<Scalar, 7>;

inline Free7 unit_free7() {
    return {Scalar(1), Scalar(1), Scalar(1), Scalar(1),
            Scalar(1), Scalar(1), Scalar(1)};
}

// Solves the relation system for the five dependent pairings and asserts
// that the full table satisfies all ten relations; throws on failure
// (impossible for nonzero inputs).
PairingTable derive_pairing(const Free7& free7, int d, const Scalar& t,
                            const Scalar& q = sym_q());

// The ten relations as a report (the derive_pairing oracle).
VerifyReport check_pairing_relations(const PairingTable& p, int d, const Scalar& t,
                                     const Scalar& q = sym_q());

struct EvalModule {
    int d;
    Scalar q;
    Scalar t;
    PairingTable pairing;
};

// t symbolic by default; numeric arguments must satisfy the degeneracy
// guards (validated here when both q and t are constant).
EvalModule make_eval_module(int d, const Scalar& t = sym_t(),
                            const Free7& free7 = unit_free7(),
                            const Scalar& q = sym_q());

// Matrix of one generator with respect to one of the 24 bases.
SqMatrix rep_matrix(const EvalModule& m, const BasisLabel& basis,
                    const GeneratorLabel& gen);

// All eight generators at once, as an assignment with orientation q.
GeneratorAssignment full_representation(const EvalModule& m, const BasisLabel& basis);

// Transition matrix from one normalized basis to another, composed along
// the deterministic shortest path of elementary moves.
SqMatrix transition(const EvalModule& m, const BasisLabel& from, const BasisLabel& to);

// Coordinates of the distinguished vector eta_j in the given basis
// (the all-ones vector transported from a basis with j in slot 1).
std::vector<Scalar> eta_coordinates(const EvalModule& m, int j, const BasisLabel& in_basis);

// For every elementary transition S: B1 -> B2 and every generator,
// S^-1 rep(B1) S = rep(B2); plus the two closed transition loops.
VerifyReport verify_transition_consistency(const EvalModule& m);

// Component 0 (resp. d) of each basis as a pairing multiple of eta_k
// (resp. eta_l).
VerifyReport verify_corner_components(const EvalModule& m);

// Matrix of the standard exchanger in the given basis (closed form on the
// eight tabulated bases, by conjugation elsewhere).
SqMatrix exchanger_matrix(const EvalModule& m, const BasisLabel& basis);

// Tabulated-bases consistency, X^2 = t^d, the generator conjugation
// property, the eta images, and the 24 basis-mapping scalars.
VerifyReport verify_exchanger(const EvalModule& m);

// Solution space of the exchanger conditions X rep(x_ij) = rep(x_{i+2,j+2}) X;
// dimension 1 by uniqueness.
std::vector<SqMatrix> exchanger_solution_space(const EvalModule& m,
                                               const BasisLabel& basis);

// Eigenflag containment predicates for every generator in the given basis.
VerifyReport shape_check(const EvalModule& m, const BasisLabel& basis);

// The Casimir image is the same scalar (q^{d+1}+q^{-d-1}) for all four
// embeddings, and the four product expressions and four two-generator
// expressions for it all agree.
VerifyReport upsilon_suite(const EvalModule& m);

// The defining parameter identities, their eight single-generator
// companions, and the four Askey-Wilson relations.
VerifyReport askey_wilson_suite(const EvalModule& m);

// Every identity of the appendix catalogue at diameter m.d: the commutator
// identities in matrix form, the closed transition loops, the conjugation
// identities, and the ten q-Weyl triples.
VerifyReport identity_suite_appendix2(const EvalModule& m);

}  // namespace qtet
