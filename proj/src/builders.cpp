#include "qtet/builders.hpp"

namespace qtet {

namespace {

// Guard for the factors (1 - t*p^k) that appear in denominators.
Scalar nonzero_factor(const Scalar& f, const std::string& desc) {
    if (f.is_zero()) throw degenerate_parameter("vanishing factor " + desc);
    return f;
}

Scalar one_minus_tp(const Scalar& p, const Scalar& t, long k) {
    return nonzero_factor(Scalar(1) - t * p.pow(k),
                          "1 - t*q^" + std::to_string(k));
}

// (base; p^2)_n with a per-factor degeneracy check.
Scalar poch_checked(const Scalar& p, const Scalar& t, long k0, long n) {
    Scalar acc(1);
    for (long m = 0; m < n; ++m) acc *= one_minus_tp(p, t, k0 + 2 * m);
    return acc;
}

}  // namespace

bool tag_takes_t(MatrixTag tag) {
    switch (tag) {
        case MatrixTag::F:
        case MatrixTag::G:
        case MatrixTag::L:
        case MatrixTag::Linv:
        case MatrixTag::S:
        case MatrixTag::M:
        case MatrixTag::D:
        case MatrixTag::CalD: return true;
        default: return false;
    }
}

const char* tag_name(MatrixTag tag) {
    switch (tag) {
        case MatrixTag::Z: return "Z";
        case MatrixTag::K: return "K";
        case MatrixTag::E: return "E";
        case MatrixTag::Einv: return "Einv";
        case MatrixTag::F: return "F";
        case MatrixTag::G: return "G";
        case MatrixTag::L: return "L";
        case MatrixTag::Linv: return "Linv";
        case MatrixTag::S: return "S";
        case MatrixTag::M: return "M";
        case MatrixTag::D: return "D";
        case MatrixTag::CalD: return "CalD";
        case MatrixTag::T: return "T";
    }
    return "?";
}

std::optional<MatrixTag> tag_from_name(const std::string& name) {
    for (MatrixTag tag :
         {MatrixTag::Z, MatrixTag::K, MatrixTag::E, MatrixTag::Einv, MatrixTag::F,
          MatrixTag::G, MatrixTag::L, MatrixTag::Linv, MatrixTag::S, MatrixTag::M,
          MatrixTag::D, MatrixTag::CalD, MatrixTag::T})
        if (name == tag_name(tag)) return tag;
    return std::nullopt;
}

SqMatrix mat_Z(int d) {
    SqMatrix m(d + 1);
    for (int i = 0; i <= d; ++i) m.at(i, d - i) = Scalar(1);
    return m;
}

SqMatrix mat_K(const Scalar& p, int d) {
    SqMatrix m(d + 1);
    for (int i = 0; i <= d; ++i) m.at(i, i) = p.pow(d - 2 * i);
    return m;
}

SqMatrix mat_E(const Scalar& p, int d) {
    SqMatrix m(d + 1);
    for (int i = 0; i <= d; ++i) m.at(i, i) = p.pow(2 * i - d);
    for (int i = 1; i <= d; ++i)
        m.at(i - 1, i) = p.pow(d) - p.pow(2 * i - 2 - d);
    return m;
}

SqMatrix mat_Einv(const Scalar& p, int d) {
    SqMatrix m(d + 1);
    for (int j = 0; j <= d; ++j)
        for (int i = 0; i <= j; ++i)
            m.at(i, j) = q_pochhammer(p.pow(2 * (d - j + 1)), p.pow(2), j - i) *
                         p.pow(d - 2 * j);
    return m;
}

SqMatrix mat_F(const Scalar& p, const Scalar& t, int d) {
    SqMatrix m(d + 1);
    for (int i = 0; i <= d; ++i) m.at(i, i) = p.pow(2 * i - d);
    for (int i = 1; i <= d; ++i)
        m.at(i - 1, i) = (p.pow(d) - p.pow(2 * i - 2 - d)) * p.pow(1 - d) * t;
    return m;
}

SqMatrix mat_G(const Scalar& p, const Scalar& t, int d) {
    SqMatrix m(d + 1);
    for (int i = 0; i <= d; ++i) m.at(i, i) = p.pow(2 * i - d);
    for (int i = 1; i <= d; ++i)
        m.at(i - 1, i) = (p.pow(d) - p.pow(2 * i - 2 - d)) *
                         (Scalar(1) - t * p.pow(d - 2 * i + 1));
    return m;
}

SqMatrix mat_L(const Scalar& p, const Scalar& t, int d) {
    SqMatrix m(d + 1);
    for (int i = 0; i <= d; ++i) m.at(i, i) = p.pow(2 * i - d);
    for (int i = 1; i <= d; ++i)
        m.at(i - 1, i) = (p.pow(d) - p.pow(2 * i - 2 - d)) /
                         one_minus_tp(p, t, d - 2 * i + 1);
    return m;
}

SqMatrix mat_Linv(const Scalar& p, const Scalar& t, int d) {
    SqMatrix m(d + 1);
    for (int j = 0; j <= d; ++j)
        for (int i = 0; i <= j; ++i)
            m.at(i, j) = q_pochhammer(p.pow(2 * (d - j + 1)), p.pow(2), j - i) /
                         poch_checked(p, t, d - 2 * j + 1, j - i) * p.pow(d - 2 * j);
    return m;
}

SqMatrix mat_S(const Scalar& p, const Scalar& t, int d) {
    SqMatrix m(d + 1);
    for (int i = 1; i <= d; ++i) {
        m.at(i - 1, i) = (p.pow(d) - p.pow(2 * i - d - 2)) *
                         (Scalar(1) - t * p.pow(2 * i - d - 1));
        m.at(i, i - 1) = (p.pow(2 * i - d) - p.pow(-d)) * p.pow(2 * i - d - 1) * t;
    }
    for (int i = 0; i <= d; ++i)
        m.at(i, i) = p.pow(d) -
                     (p.pow(2 * i - d) - p.pow(-d)) * p.pow(2 * i - d - 1) * t -
                     (p.pow(d) - p.pow(2 * i - d)) *
                         (Scalar(1) - t * p.pow(2 * i - d + 1));
    return m;
}

SqMatrix mat_M(const Scalar& p, const Scalar& t, int d) {
    SqMatrix m(d + 1);
    const Scalar tinv = t.inv();
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            if (i - j > 1) continue;
            if (i - j == 1) {
                m.at(i, j) = (p.pow(-1) - p.pow(2 * i - 1)) /
                             nonzero_factor(tinv - p.pow(2 * i - d - 1),
                                            "t^-1 - q^" + std::to_string(2 * i - d - 1));
                continue;
            }
            // j >= i from here on
            Scalar entry(1);
            if (i != 0)
                entry *= one_minus_tp(p, t, -d - 1) / one_minus_tp(p, t, 2 * i - d - 1);
            if (j != d)
                entry *= one_minus_tp(p, t, d + 1) / one_minus_tp(p, t, 2 * j - d + 1);
            entry *= q_pochhammer(p.pow(2 * i - 2 * d), p.pow(2), j - i) /
                     poch_checked(p, t, 2 * i - d + 1, j - i);
            entry *= p.pow(j == d ? d : 2 * j - d);
            m.at(i, j) = entry;
        }
    return m;
}

SqMatrix mat_D(const Scalar& p, const Scalar& t, int d) {
    SqMatrix m(d + 1);
    for (int i = 0; i <= d; ++i)
        m.at(i, i) = q_pochhammer(t * p.pow(d - 2 * i + 1), p.pow(2), i);
    return m;
}

SqMatrix mat_CalD(const Scalar& p, const Scalar& t, int d) {
    SqMatrix m(d + 1);
    for (int i = 0; i <= d; ++i) m.at(i, i) = t.pow(i) * p.pow(i * (d - 1));
    return m;
}

SqMatrix mat_T(const Scalar& p, int d) {
    SqMatrix m(d + 1);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= i; ++j)
            m.at(i, j) = Scalar(j % 2 == 0 ? 1 : -1) * p.pow(j * (1 - i)) *
                         q_binomial(i, j, p);
    return m;
}

SqMatrix build(const MatrixName& name, int d, const Scalar& q) {
    if (d < 1) throw std::domain_error("diameter must be at least 1");
    const Scalar p = name.orientation == Orientation::plus ? q : q.inv();
    if (tag_takes_t(name.tag) && !name.t_argument)
        throw std::domain_error(std::string(tag_name(name.tag)) +
                                " requires a t argument");
    const Scalar t = name.t_argument.value_or(Scalar(0));
    switch (name.tag) {
        case MatrixTag::Z: return mat_Z(d);
        case MatrixTag::K: return mat_K(p, d);
        case MatrixTag::E: return mat_E(p, d);
        case MatrixTag::Einv: return mat_Einv(p, d);
        case MatrixTag::F: return mat_F(p, t, d);
        case MatrixTag::G: return mat_G(p, t, d);
        case MatrixTag::L: return mat_L(p, t, d);
        case MatrixTag::Linv: return mat_Linv(p, t, d);
        case MatrixTag::S: return mat_S(p, t, d);
        case MatrixTag::M: return mat_M(p, t, d);
        case MatrixTag::D: return mat_D(p, t, d);
        case MatrixTag::CalD: return mat_CalD(p, t, d);
        case MatrixTag::T: return mat_T(p, d);
    }
    throw std::logic_error("unknown matrix tag");
}

}  // namespace qtet
