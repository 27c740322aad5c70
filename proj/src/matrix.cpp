#include "qtet/matrix.hpp"

namespace qtet {

SqMatrix SqMatrix::identity(int dim) {
    SqMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Scalar(1);
    return m;
}

SqMatrix SqMatrix::operator+(const SqMatrix& o) const {
    SqMatrix r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

SqMatrix SqMatrix::operator-(const SqMatrix& o) const {
    SqMatrix r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

SqMatrix SqMatrix::operator-() const {
    SqMatrix r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = -e_[i];
    return r;
}

SqMatrix SqMatrix::operator*(const SqMatrix& o) const {
    SqMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

SqMatrix SqMatrix::scaled(const Scalar& s) const {
    SqMatrix r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] * s;
    return r;
}

SqMatrix SqMatrix::transpose() const {
    SqMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

SqMatrix SqMatrix::inverse() const {
    // Gauss-Jordan over the exact Scalar field.
    SqMatrix a = *this;
    SqMatrix inv = identity(n_);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int row = col; row < n_; ++row)
            if (!a.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            throw singular_matrix("singular matrix: no nonzero pivot in column " +
                                  std::to_string(col));
        if (pivot != col)
            for (int j = 0; j < n_; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const Scalar p = a.at(col, col);
        for (int j = 0; j < n_; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int row = 0; row < n_; ++row) {
            if (row == col || a.at(row, col).is_zero()) continue;
            const Scalar f = a.at(row, col);
            for (int j = 0; j < n_; ++j) {
                a.at(row, j) -= f * a.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

SqMatrix SqMatrix::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    SqMatrix acc = identity(n_);
    SqMatrix sq = *this;
    while (e > 0) {
        if (e & 1) acc = acc * sq;
        e >>= 1;
        if (e) sq = sq * sq;
    }
    return acc;
}

bool SqMatrix::eq(const SqMatrix& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_ * n_; ++i)
        if (!e_[i].eq(o.e_[i])) return false;
    return true;
}

bool SqMatrix::is_zero() const {
    for (const Scalar& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

bool SqMatrix::is_identity() const { return eq(identity(n_)); }

std::optional<Scalar> SqMatrix::as_scalar_multiple_of_identity() const {
    const Scalar& c = at(0, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && !at(i, j).eq(c)) return std::nullopt;
            if (i != j && !at(i, j).is_zero()) return std::nullopt;
        }
    return c;
}

std::vector<Scalar> SqMatrix::row_sums() const {
    std::vector<Scalar> sums(n_, Scalar(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) sums[i] += at(i, j);
    return sums;
}

std::vector<Scalar> SqMatrix::apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(n_, Scalar(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

std::optional<std::string> diff_witness(const SqMatrix& lhs, const SqMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) return "dimension mismatch";
    for (int i = 0; i < lhs.dim(); ++i)
        for (int j = 0; j < lhs.dim(); ++j)
            if (!lhs.at(i, j).eq(rhs.at(i, j)))
                return "(" + std::to_string(i) + "," + std::to_string(j) +
                       "): lhs=" + lhs.at(i, j).str() + ", rhs=" + rhs.at(i, j).str();
    return std::nullopt;
}

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::diagonal: return "diagonal";
        case Shape::upper_bidiagonal: return "upper bidiagonal";
        case Shape::lower_bidiagonal: return "lower bidiagonal";
        case Shape::tridiagonal: return "tridiagonal";
        case Shape::upper_triangular: return "upper triangular";
        case Shape::lower_triangular: return "lower triangular";
        case Shape::anti_diagonal: return "anti-diagonal";
        case Shape::dense: return "dense";
    }
    return "?";
}

bool within_band(const SqMatrix& m, int lo, int hi) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if ((j - i < lo || j - i > hi) && !m.at(i, j).is_zero()) return false;
    return true;
}

ShapeReport band_shape(const SqMatrix& m) {
    const int n = m.dim();
    ShapeReport rep;
    rep.diagonal.reserve(n);
    for (int i = 0; i < n; ++i) rep.diagonal.push_back(m.at(i, i));

    if (within_band(m, 0, 0)) rep.shape = Shape::diagonal;
    else if (within_band(m, 0, 1)) rep.shape = Shape::upper_bidiagonal;
    else if (within_band(m, -1, 0)) rep.shape = Shape::lower_bidiagonal;
    else if (within_band(m, -1, 1)) {
        rep.shape = Shape::tridiagonal;
        rep.irreducible = true;
        for (int i = 0; i + 1 < n; ++i)
            if (m.at(i, i + 1).is_zero() || m.at(i + 1, i).is_zero())
                rep.irreducible = false;
    } else if (within_band(m, 0, n - 1)) rep.shape = Shape::upper_triangular;
    else if (within_band(m, 1 - n, 0)) rep.shape = Shape::lower_triangular;
    else {
        bool anti = true;
        for (int i = 0; i < n && anti; ++i)
            for (int j = 0; j < n && anti; ++j)
                if (i + j != n - 1 && !m.at(i, j).is_zero()) anti = false;
        rep.shape = anti ? Shape::anti_diagonal : Shape::dense;
    }
    return rep;
}

std::vector<std::vector<Scalar>> nullspace(const std::vector<std::vector<Scalar>>& rows,
                                           int cols) {
    std::vector<std::vector<Scalar>> a = rows;
    const int r = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < r; ++col) {
        int pivot = -1;
        for (int row = rank; row < r; ++row)
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        const Scalar p = a[rank][col];
        for (int j = col; j < cols; ++j) a[rank][j] /= p;
        for (int row = 0; row < r; ++row) {
            if (row == rank || a[row][col].is_zero()) continue;
            const Scalar f = a[row][col];
            for (int j = col; j < cols; ++j) a[row][j] -= f * a[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (int k = 0; k < rank; ++k) v[pivot_col[k]] = -a[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<SqMatrix> intertwiner_space(
    const std::vector<std::pair<SqMatrix, SqMatrix>>& pairs, int dim) {
    // Unknown X vectorized row-major; constraint X*A - B*X = 0 per pair.
    const int n = dim;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& [a, b] : pairs) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<Scalar> row(n * n, Scalar(0));
                // (X*A)_{ij} = sum_k X_{ik} A_{kj};  (B*X)_{ij} = sum_k B_{ik} X_{kj}
                for (int k = 0; k < n; ++k) {
                    row[i * n + k] += a.at(k, j);
                    row[k * n + j] -= b.at(i, k);
                }
                rows.push_back(std::move(row));
            }
    }
    std::vector<SqMatrix> out;
    for (const auto& v : nullspace(rows, n * n)) {
        SqMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace qtet
