/**
 * @file builders.hpp
 * @brief The standard matrix families Z, K, E, F(t), G(t), L(t), S(t),
 *        M(t), D(t), CalD(t), T and the closed-form inverses Einv, Linv.
 *
 * Every family is parametric in the deformation parameter, passed as a
 * Scalar; the q^-1 orientation is obtained by passing the inverse. The
 * t-taking families accept any Scalar argument (the indeterminate t, its
 * inverse, a rational value, or a product such as a*b/c).
 */
#pragma once

#include <optional>

#include "qtet/matrix.hpp"

namespace qtet {

enum class MatrixTag { Z, K, E, Einv, F, G, L, Linv, S, M, D, CalD, T };

enum class Orientation { plus, minus };  // q vs q^-1

inline Orientation flip(Orientation o) {
    return o == Orientation::plus ? Orientation::minus : Orientation::plus;
}

bool tag_takes_t(MatrixTag tag);
const char* tag_name(MatrixTag tag);
std::optional<MatrixTag> tag_from_name(const std::string& name);

struct MatrixName {
    MatrixTag tag;
    Orientation orientation = Orientation::plus;
    std::optional<Scalar> t_argument;  // required iff tag_takes_t(tag)
};

// Entry-level constructors; p is the deformation parameter.
SqMatrix mat_Z(int d);
SqMatrix mat_K(const Scalar& p, int d);
SqMatrix mat_E(const Scalar& p, int d);
SqMatrix mat_Einv(const Scalar& p, int d);
SqMatrix mat_F(const Scalar& p, const Scalar& t, int d);
SqMatrix mat_G(const Scalar& p, const Scalar& t, int d);
SqMatrix mat_L(const Scalar& p, const Scalar& t, int d);
SqMatrix mat_Linv(const Scalar& p, const Scalar& t, int d);
SqMatrix mat_S(const Scalar& p, const Scalar& t, int d);
SqMatrix mat_M(const Scalar& p, const Scalar& t, int d);
SqMatrix mat_D(const Scalar& p, const Scalar& t, int d);
SqMatrix mat_CalD(const Scalar& p, const Scalar& t, int d);
SqMatrix mat_T(const Scalar& p, int d);

// Dispatcher honoring the orientation tag; q is the base deformation
// parameter (the indeterminate by default).
SqMatrix build(const MatrixName& name, int d, const Scalar& q = sym_q());

inline SqMatrix conj_Z(const SqMatrix& m) {
    const SqMatrix z = mat_Z(m.diameter());
    return z * m * z;
}

}  // namespace qtet
