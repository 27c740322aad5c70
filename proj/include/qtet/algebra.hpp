/**
 * @file algebra.hpp
 * @brief Relation checking for the equitable presentation and for the
 *        eight-generator algebra, plus the symmetry operations realized
 *        at the matrix level.
 *
 * A GeneratorAssignment is a concrete module structure: one matrix per
 * generator x_ij (j-i in {1,2} mod 4), tagged with the orientation of the
 * deformation parameter. Twisting by the rotation or sign automorphisms,
 * duality by transposition, and the cross-presentation relabeling all act
 * on assignments. Relation failures are reported as data, not thrown.
 */
#pragma once

#include <array>
#include <functional>

#include "qtet/builders.hpp"

namespace qtet {

// The eight generators x_ij with j-i = 1 or 2 (mod 4).
struct GeneratorLabel {
    int i;
    int j;

    bool operator==(const GeneratorLabel&) const = default;
    std::string str() const {
        return "x" + std::to_string(i) + std::to_string(j);
    }
};

inline GeneratorLabel gen(int i, int j) {
    return GeneratorLabel{((i % 4) + 4) % 4, ((j % 4) + 4) % 4};
}

// Fixed enumeration order: x01, x12, x23, x30, x02, x13, x20, x31.
const std::array<GeneratorLabel, 8>& all_generators();
int generator_index(const GeneratorLabel& g);

struct VerifyCheck {
    std::string name;
    bool pass;
    std::string witness;  // first offending entry on failure
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& witness = "") {
        checks.push_back({name, pass, witness});
    }
    void add_eq(const std::string& name, const SqMatrix& lhs, const SqMatrix& rhs) {
        auto w = diff_witness(lhs, rhs);
        checks.push_back({name, !w.has_value(), w.value_or("")});
    }
    void merge(const VerifyReport& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return c.name + (c.witness.empty() ? "" : " @ " + c.witness);
        return "";
    }
};

struct GeneratorAssignment {
    std::array<SqMatrix, 8> matrices;
    Orientation orientation = Orientation::plus;
    Scalar q = sym_q();  // base deformation parameter (before orientation)

    int dim() const { return matrices[0].dim(); }
    // Effective deformation parameter for the defining relations.
    Scalar effective_q() const {
        return orientation == Orientation::plus ? q : q.inv();
    }
    const SqMatrix& mat(const GeneratorLabel& g) const {
        return matrices[generator_index(g)];
    }
    SqMatrix& mat(const GeneratorLabel& g) { return matrices[generator_index(g)]; }

    static GeneratorAssignment trivial(int dim);
};

struct UqTriple {
    SqMatrix x, y, y_inv, z;
};

// ---- relation checking ----

// The three q-Weyl relations plus y*y_inv = 1.
VerifyReport verify_equitable(const UqTriple& t, const Scalar& q = sym_q());

// Inverse pairs, the twelve q-Weyl instances, and the four cubic
// relations, with q taken from the assignment's orientation.
VerifyReport verify_boxtimes(const GeneratorAssignment& g);

// Casimir qx + q^-1 y + qz - qxyz; verifies all six equivalent
// expressions agree and throws std::runtime_error on mismatch.
SqMatrix casimir(const UqTriple& t, const Scalar& q = sym_q());

// Consequences of the q-Weyl relation for a pair (and of two stacked
// relations for a triple); hypotheses are checked first and failing
// hypotheses skip the dependent consequences.
VerifyReport weyl_consequences(const SqMatrix& u, const SqMatrix& v,
                               const std::optional<SqMatrix>& w = std::nullopt,
                               const Scalar& q = sym_q());

// ---- structure maps ----

// Pullback along the embedding with x -> x_{i+2,i+3}, y -> x_{i+3,i+1},
// y^-1 -> x_{i+1,i+3}, z -> x_{i+1,i+2}.
UqTriple kappa_pullback(const GeneratorAssignment& g, int i);

// Image of the Casimir under the i-th embedding.
SqMatrix upsilon(const GeneratorAssignment& g, int i);

// Rotation twist: the new matrix of x_ij is the old matrix of x_{i-1,j-1}.
GeneratorAssignment apply_rho(const GeneratorAssignment& g);
// Sign twist: negate every generator matrix.
GeneratorAssignment apply_sigma(const GeneratorAssignment& g);
// Relabeling x01<->x01, x12<->x30, x23<->x23, x02<->x31, x13<->x20 with
// orientation flip; lands in the opposite-parameter algebra.
GeneratorAssignment apply_theta(const GeneratorAssignment& g);
// Dual module: every matrix transposed, orientation flipped.
GeneratorAssignment dual_assignment(const GeneratorAssignment& g);

// The unique scalar with t*(x01 - x23) = [x30,x12]/(q-q^-1), cross-checked
// against the companion identity; throws std::runtime_error when the
// assignment is not an evaluation module.
Scalar extract_t(const GeneratorAssignment& g);

}  // namespace qtet
