/**
 * @file matrix.hpp
 * @brief Dense square matrices over Scalar, with exact inverse and the
 *        band-shape classifier.
 *
 * Rows and columns are indexed 0..d. A symbolic entry counts as nonzero
 * iff its canonical numerator is a nonzero polynomial (generic
 * nonvanishing); specialization-level vanishing is guarded elsewhere.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtet/scalar.hpp"

namespace qtet {

struct singular_matrix : std::runtime_error {
    explicit singular_matrix(const std::string& what) : std::runtime_error(what) {}
};

class SqMatrix {
  public:
    SqMatrix() : n_(0) {}
    explicit SqMatrix(int dim) : n_(dim), e_(dim * dim, Scalar(0)) {}

    static SqMatrix identity(int dim);
    static SqMatrix zero(int dim) { return SqMatrix(dim); }

    int dim() const { return n_; }
    // Diameter d = dim - 1.
    int diameter() const { return n_ - 1; }

    const Scalar& at(int i, int j) const { return e_[i * n_ + j]; }
    Scalar& at(int i, int j) { return e_[i * n_ + j]; }

    SqMatrix operator+(const SqMatrix& o) const;
    SqMatrix operator-(const SqMatrix& o) const;
    SqMatrix operator*(const SqMatrix& o) const;
    SqMatrix operator-() const;
    SqMatrix scaled(const Scalar& s) const;
    friend SqMatrix operator*(const Scalar& s, const SqMatrix& m) {
        return m.scaled(s);
    }

    SqMatrix transpose() const;
    SqMatrix inverse() const;
    SqMatrix pow(long e) const;

    bool eq(const SqMatrix& o) const;
    bool is_zero() const;
    bool is_identity() const;
    // Scalar c with *this == c*I, when one exists.
    std::optional<Scalar> as_scalar_multiple_of_identity() const;

    std::vector<Scalar> row_sums() const;
    // Matrix-vector product.
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  private:
    int n_;
    std::vector<Scalar> e_;
};

inline SqMatrix commutator(const SqMatrix& x, const SqMatrix& y) {
    return x * y - y * x;
}

// "(i,j): lhs=..., rhs=..." for the first differing entry, or nullopt.
std::optional<std::string> diff_witness(const SqMatrix& lhs, const SqMatrix& rhs);

// ---- band-shape classification ----

enum class Shape {
    diagonal,
    upper_bidiagonal,
    lower_bidiagonal,
    tridiagonal,
    upper_triangular,
    lower_triangular,
    anti_diagonal,
    dense,
};

const char* shape_name(Shape s);

struct ShapeReport {
    Shape shape;
    // Meaningful for tridiagonal: every sub- and superdiagonal entry nonzero.
    bool irreducible = false;
    std::vector<Scalar> diagonal;
};

ShapeReport band_shape(const SqMatrix& m);

// Entry pattern predicates used by the flag/decomposition checks: entries
// allowed only in the band lo <= j - i <= hi.
bool within_band(const SqMatrix& m, int lo, int hi);

// ---- exact linear algebra helpers ----

// Basis of the right nullspace of an r x c matrix (rows of `rows` each of
// length c), as column vectors. Gauss elimination over the Scalar field.
std::vector<std::vector<Scalar>> nullspace(const std::vector<std::vector<Scalar>>& rows,
                                           int cols);

// Solution space of X*A - B*X = 0 and X*C - D*X = 0 (each pair optional),
// X square of dimension n. Returns a basis of vectorized matrices.
std::vector<SqMatrix> intertwiner_space(const std::vector<std::pair<SqMatrix, SqMatrix>>& pairs,
                                        int dim);

}  // namespace qtet
