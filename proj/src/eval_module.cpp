#include "qtet/eval_module.hpp"

#include <map>

namespace qtet {

const Scalar& PairingTable::at(int i, int j) const {
    i = ((i % 4) + 4) % 4;
    j = ((j % 4) + 4) % 4;
    if (i == j) throw std::domain_error("pairing (eta_i, eta*_i) is zero by duality");
    return values[i][j];
}

Scalar& PairingTable::at(int i, int j) {
    i = ((i % 4) + 4) % 4;
    j = ((j % 4) + 4) % 4;
    if (i == j) throw std::domain_error("pairing (eta_i, eta*_i) is zero by duality");
    return values[i][j];
}

namespace {

// Product (1 - t q^{d-1})(1 - t q^{d-3}) ... (1 - t q^{1-d}).
Scalar locus_product(int d, const Scalar& t, const Scalar& q) {
    return q_pochhammer(t * q.pow(1 - d), q.pow(2), d);
}

Scalar sign_pow(int d) { return Scalar(d % 2 == 0 ? 1 : -1); }

}  // namespace

PairingTable derive_pairing(const Free7& free7, int d, const Scalar& t,
                            const Scalar& q) {
    for (const Scalar& f : free7)
        if (f.is_zero()) throw std::domain_error("free pairing values must be nonzero");
    const Scalar &f01 = free7[0], &f02 = free7[1], &f03 = free7[2], &f12 = free7[3],
                 &f21 = free7[4], &f30 = free7[5], &f31 = free7[6];

    const Scalar pi = locus_product(d, t, q);
    const Scalar qdd = q.pow(static_cast<long>(d) * (d - 1));
    const Scalar big_p = t.pow(d) * qdd;
    const Scalar big_n = sign_pow(d) * qdd;

    PairingTable p;
    p.at(0, 1) = f01;
    p.at(0, 2) = f02;
    p.at(0, 3) = f03;
    p.at(1, 2) = f12;
    p.at(2, 1) = f21;
    p.at(3, 0) = f30;
    p.at(3, 1) = f31;
    // The five dependent values, solved from the multiplicative system.
    p.at(2, 3) = big_p * f21 * f03 / f01;
    p.at(1, 3) = pi * f12 * f03 / f02;
    p.at(2, 0) = pi * f30 * f21 / f31;
    p.at(1, 0) = pi * f01 * f12 * f30 / (big_n * f02 * f31);
    p.at(3, 2) = sign_pow(d) * t.pow(d) * f02 * f31 / (pi * f01);

    VerifyReport rep = check_pairing_relations(p, d, t, q);
    if (!rep.all_pass())
        throw std::runtime_error("pairing relation system inconsistent: " +
                                 rep.first_failure());
    return p;
}

VerifyReport check_pairing_relations(const PairingTable& p, int d, const Scalar& t,
                                     const Scalar& q) {
    VerifyReport rep;
    const Scalar qdd = q.pow(static_cast<long>(d) * (d - 1));
    const Scalar pi_plus = locus_product(d, t, q);
    const Scalar pi_minus = locus_product(d, t.inv(), q);

    auto check = [&](const std::string& name, const Scalar& lhs, const Scalar& rhs) {
        const bool ok = lhs.eq(rhs);
        rep.add(name, ok, ok ? "" : lhs.str() + " != " + rhs.str());
    };

    check("pairing quotient (0,1)(2,3)/(2,1)(0,3) = t^d q^(d(d-1))",
          p.at(0, 1) * p.at(2, 3) / (p.at(2, 1) * p.at(0, 3)), t.pow(d) * qdd);
    check("pairing quotient (1,2)(3,0)/(3,2)(1,0) = t^-d q^(d(d-1))",
          p.at(1, 2) * p.at(3, 0) / (p.at(3, 2) * p.at(1, 0)), t.pow(-d) * qdd);

    check("pairing quotient (0,2)(1,3)/(1,2)(0,3) = locus product(t)",
          p.at(0, 2) * p.at(1, 3) / (p.at(1, 2) * p.at(0, 3)), pi_plus);
    check("pairing quotient (1,3)(2,0)/(2,3)(1,0) = locus product(t^-1)",
          p.at(1, 3) * p.at(2, 0) / (p.at(2, 3) * p.at(1, 0)), pi_minus);
    check("pairing quotient (2,0)(3,1)/(3,0)(2,1) = locus product(t)",
          p.at(2, 0) * p.at(3, 1) / (p.at(3, 0) * p.at(2, 1)), pi_plus);
    check("pairing quotient (3,1)(0,2)/(0,1)(3,2) = locus product(t^-1)",
          p.at(3, 1) * p.at(0, 2) / (p.at(0, 1) * p.at(3, 2)), pi_minus);

    const Scalar noT = sign_pow(d) * qdd;
    for (int i = 0; i < 4; ++i) {
        const Scalar lhs = p.at(i, i + 1) * p.at(i + 1, i + 2) * p.at(i + 2, i) /
                           (p.at(i + 1, i) * p.at(i + 2, i + 1) * p.at(i, i + 2));
        check("pairing 3-cycle at vertex " + std::to_string(i) +
                  " = (-1)^d q^(d(d-1))",
              lhs, noT);
    }
    return rep;
}

EvalModule make_eval_module(int d, const Scalar& t, const Free7& free7,
                            const Scalar& q) {
    if (d < 1) throw std::domain_error("diameter must be at least 1");
    if (t.is_zero()) throw degenerate_parameter("t must be nonzero");
    if (t.is_constant() && q.is_constant()) {
        SpecPoint p;
        p.assignments[Var::q] = q.constant_value();
        p.assignments[Var::t] = t.constant_value();
        p.validate(d);
    }
    EvalModule m{d, q, t, derive_pairing(free7, d, t, q)};
    return m;
}

SqMatrix rep_matrix(const EvalModule& m, const BasisLabel& basis,
                    const GeneratorLabel& g) {
    const PatternMatch pm = classify_basis(basis);
    const RepSpec& spec = rep_spec(pm.pattern, generator_slot(g, pm.r));
    int t_power = spec.t_power;
    if (pm.r % 2 == 1) t_power = -t_power;

    MatrixName name{spec.tag, spec.orientation, std::nullopt};
    if (tag_takes_t(spec.tag)) name.t_argument = m.t.pow(t_power);
    SqMatrix mat = build(name, m.d, m.q);
    if (spec.z_conjugate) mat = conj_Z(mat);
    return mat;
}

GeneratorAssignment full_representation(const EvalModule& m, const BasisLabel& basis) {
    GeneratorAssignment g;
    g.orientation = Orientation::plus;
    g.q = m.q;
    for (const auto& lbl : all_generators()) g.mat(lbl) = rep_matrix(m, basis, lbl);
    return g;
}

namespace {

// Transition matrix for a single elementary move out of `from`.
SqMatrix elementary_transition(const EvalModule& m, const BasisLabel& from, Move mv) {
    if (mv == Move::swap23) return mat_Z(m.d);

    const PatternMatch pm = classify_basis(from);
    const int r = pm.r;
    const Scalar t_eff = (r % 2 == 1) ? m.t.inv() : m.t;
    const PairingTable& p = m.pairing;
    const Scalar q = m.q;
    const Scalar qi = q.inv();

    if (mv == Move::swap01) {
        switch (pm.pattern) {
            case Pattern::P1:
                return mat_D(q, t_eff, m.d).scaled(p.at(r, r + 3) / p.at(r + 1, r + 3));
            case Pattern::P2:
                return mat_D(q, t_eff, m.d)
                    .inverse()
                    .scaled(p.at(r + 1, r + 3) / p.at(r, r + 3));
            case Pattern::P3:
                return mat_D(qi, t_eff, m.d)
                    .inverse()
                    .scaled(p.at(r, r + 2) / p.at(r + 1, r + 2));
            case Pattern::P4:
                return mat_D(qi, t_eff, m.d)
                    .scaled(p.at(r + 1, r + 2) / p.at(r, r + 2));
            case Pattern::P5:
                return mat_CalD(q, t_eff, m.d)
                    .scaled(p.at(r, r + 3) / p.at(r + 2, r + 3));
            case Pattern::P6:
                return mat_CalD(q, t_eff, m.d)
                    .inverse()
                    .scaled(p.at(r + 2, r + 3) / p.at(r, r + 3));
        }
    }
    // Move::swap12; these transitions do not involve t.
    switch (pm.pattern) {
        case Pattern::P1:
            return mat_T(q, m.d).scaled(p.at(r + 2, r + 3) / p.at(r + 1, r + 3));
        case Pattern::P2:
            return mat_T(q, m.d).scaled(p.at(r + 2, r + 3) / p.at(r, r + 3));
        case Pattern::P3:
            return mat_T(qi, m.d).scaled(p.at(r + 3, r + 2) / p.at(r + 1, r + 2));
        case Pattern::P4:
            return mat_T(qi, m.d).scaled(p.at(r + 3, r + 2) / p.at(r, r + 2));
        case Pattern::P5:
            return mat_T(qi, m.d).scaled(p.at(r + 1, r + 3) / p.at(r + 2, r + 3));
        case Pattern::P6:
            return mat_T(q, m.d).scaled(p.at(r + 1, r + 3) / p.at(r, r + 3));
    }
    throw std::logic_error("bad pattern");
}

}  // namespace

SqMatrix transition(const EvalModule& m, const BasisLabel& from, const BasisLabel& to) {
    SqMatrix acc = SqMatrix::identity(m.d + 1);
    BasisLabel cur = from;
    for (Move mv : move_path(from, to)) {
        acc = acc * elementary_transition(m, cur, mv);
        cur = apply_move(cur, mv);
    }
    return acc;
}

std::vector<Scalar> eta_coordinates(const EvalModule& m, int j,
                                    const BasisLabel& in_basis) {
    j = ((j % 4) + 4) % 4;
    BasisLabel b_eta = in_basis;
    if (in_basis[1] != j) {
        for (const auto& b : all_bases())
            if (b[1] == j) {
                b_eta = b;
                break;
            }
    }
    const std::vector<Scalar> ones(m.d + 1, Scalar(1));
    if (b_eta == in_basis) return ones;
    return transition(m, in_basis, b_eta).apply(ones);
}

VerifyReport verify_transition_consistency(const EvalModule& m) {
    VerifyReport rep;
    std::map<BasisLabel, GeneratorAssignment> reps;
    for (const auto& b : all_bases()) reps.emplace(b, full_representation(m, b));

    for (const auto& b : all_bases())
        for (Move mv : {Move::swap01, Move::swap12, Move::swap23}) {
            const BasisLabel b2 = apply_move(b, mv);
            const SqMatrix s = elementary_transition(m, b, mv);
            const SqMatrix s_inv = s.inverse();
            for (const auto& g : all_generators())
                rep.add_eq("conjugate " + g.str() + " across " + b.str() + " -> " +
                               b2.str(),
                           s_inv * reps.at(b).mat(g) * s, reps.at(b2).mat(g));
        }

    // Closed loops of transition matrices.
    const int d = m.d;
    const Scalar q = m.q;
    const SqMatrix tq = mat_T(q, d);
    const SqMatrix tqi = mat_T(q.inv(), d);
    const SqMatrix z = mat_Z(d);
    rep.add_eq("loop (T Z)^3 = (-1)^d q^(-d(d-1)) I", tq * z * tq * z * tq * z,
               SqMatrix::identity(d + 1).scaled(
                   sign_pow(d) * q.pow(-static_cast<long>(d) * (d - 1))));
    rep.add_eq("loop T CalD(t) T D(t^-1;q^-1) T(q^-1) D(t)^-1 = I",
               tq * mat_CalD(q, m.t, d) * tq * mat_D(q.inv(), m.t.inv(), d) * tqi *
                   mat_D(q, m.t, d).inverse(),
               SqMatrix::identity(d + 1));
    return rep;
}

VerifyReport verify_corner_components(const EvalModule& m) {
    VerifyReport rep;
    const PairingTable& p = m.pairing;
    for (const auto& b : all_bases()) {
        const int j = b[1], k = b[2], l = b[3];
        std::vector<Scalar> e0(m.d + 1, Scalar(0)), ed(m.d + 1, Scalar(0));
        e0[0] = Scalar(1);
        ed[m.d] = Scalar(1);

        const Scalar ratio0 = p.at(j, l) / p.at(k, l);
        const auto eta_k = eta_coordinates(m, k, b);
        bool ok0 = true;
        for (int n = 0; n <= m.d; ++n)
            ok0 = ok0 && (ratio0 * eta_k[n]).eq(e0[n]);
        rep.add("component 0 of " + b.str() + " is the eta_" + std::to_string(k) +
                    " multiple",
                ok0);

        const Scalar ratiod = p.at(j, k) / p.at(l, k);
        const auto eta_l = eta_coordinates(m, l, b);
        bool okd = true;
        for (int n = 0; n <= m.d; ++n)
            okd = okd && (ratiod * eta_l[n]).eq(ed[n]);
        rep.add("component d of " + b.str() + " is the eta_" + std::to_string(l) +
                    " multiple",
                okd);
    }
    return rep;
}

namespace {

bool exchanger_tabulated(const BasisLabel& b, int d, const Scalar& q, const Scalar& t,
                         SqMatrix* out) {
    const long binom = static_cast<long>(d) * (d - 1) / 2;
    struct Row {
        BasisLabel b;
        bool t_descending;  // exponent d-i instead of i
        bool q_positive;    // exponent i(d-1) - C(d,2) vs its negative
        bool signed_by_d;
    };
    static const std::vector<Row> rows = {
        {basis(0, 2, 1, 3), false, true, false}, {basis(0, 2, 3, 1), true, false, false},
        {basis(2, 0, 3, 1), false, true, false}, {basis(2, 0, 1, 3), true, false, false},
        {basis(1, 3, 2, 0), true, true, true},   {basis(1, 3, 0, 2), false, false, true},
        {basis(3, 1, 0, 2), true, true, true},   {basis(3, 1, 2, 0), false, false, true},
    };
    for (const Row& row : rows) {
        if (!(row.b == b)) continue;
        SqMatrix x(d + 1);
        for (int i = 0; i <= d; ++i) {
            const long qexp = static_cast<long>(i) * (d - 1) - binom;
            Scalar entry = t.pow(row.t_descending ? d - i : i) *
                           q.pow(row.q_positive ? qexp : -qexp);
            if (row.signed_by_d) entry = sign_pow(d) * entry;
            x.at(i, d - i) = entry;
        }
        *out = x;
        return true;
    }
    return false;
}

// Scalar by which the standard exchanger maps the basis with j in slot 1
// onto its +2 shift; depends only on j.
Scalar exchanger_basis_scalar(const EvalModule& m, int j) {
    const long binom = static_cast<long>(m.d) * (m.d - 1) / 2;
    const PairingTable& p = m.pairing;
    switch (((j % 4) + 4) % 4) {
        case 0: return m.q.pow(-binom) * p.at(0, 1) / p.at(2, 1);
        case 1: return sign_pow(m.d) * m.q.pow(binom) * p.at(1, 0) / p.at(3, 0);
        case 2: return m.q.pow(-binom) * p.at(2, 3) / p.at(0, 3);
        default: return sign_pow(m.d) * m.q.pow(binom) * p.at(3, 2) / p.at(1, 2);
    }
}

}  // namespace

SqMatrix exchanger_matrix(const EvalModule& m, const BasisLabel& b) {
    SqMatrix x(m.d + 1);
    if (exchanger_tabulated(b, m.d, m.q, m.t, &x)) return x;
    const BasisLabel anchor = basis(0, 2, 1, 3);
    exchanger_tabulated(anchor, m.d, m.q, m.t, &x);
    const SqMatrix s = transition(m, anchor, b);
    return s.inverse() * x * s;
}

std::vector<SqMatrix> exchanger_solution_space(const EvalModule& m,
                                               const BasisLabel& b) {
    const GeneratorAssignment g = full_representation(m, b);
    std::vector<std::pair<SqMatrix, SqMatrix>> pairs;
    for (const auto& lbl : all_generators())
        pairs.emplace_back(g.mat(lbl), g.mat(gen(lbl.i + 2, lbl.j + 2)));
    return intertwiner_space(pairs, m.d + 1);
}

VerifyReport verify_exchanger(const EvalModule& m) {
    VerifyReport rep;
    const int d = m.d;

    // (a) the eight tabulated matrices represent one and the same map
    const BasisLabel anchor = basis(0, 2, 1, 3);
    SqMatrix x_anchor(d + 1);
    exchanger_tabulated(anchor, d, m.q, m.t, &x_anchor);
    for (const auto& b : all_bases()) {
        SqMatrix closed(d + 1);
        if (!exchanger_tabulated(b, d, m.q, m.t, &closed)) continue;
        const SqMatrix s = transition(m, anchor, b);
        rep.add_eq("tabulated exchanger at " + b.str() + " consistent with anchor",
                   s.inverse() * x_anchor * s, closed);
    }

    // (b) X^2 = t^d I
    rep.add_eq("exchanger squares to t^d",
               x_anchor * x_anchor,
               SqMatrix::identity(d + 1).scaled(m.t.pow(d)));

    // (c) conjugation sends each generator to its +2 shift
    const BasisLabel b0 = basis(0, 1, 2, 3);
    const GeneratorAssignment g0 = full_representation(m, b0);
    const SqMatrix x0 = exchanger_matrix(m, b0);
    const SqMatrix x0_inv = x0.inverse();
    for (const auto& lbl : all_generators())
        rep.add_eq("exchanger conjugates " + lbl.str() + " to " +
                       gen(lbl.i + 2, lbl.j + 2).str(),
                   x0 * g0.mat(lbl) * x0_inv, g0.mat(gen(lbl.i + 2, lbl.j + 2)));

    // (d) images of the distinguished vectors
    for (int j = 0; j < 4; ++j) {
        const auto eta_j = eta_coordinates(m, j, b0);
        const auto eta_j2 = eta_coordinates(m, j + 2, b0);
        const auto img = x0.apply(eta_j);
        const Scalar scale = exchanger_basis_scalar(m, j);
        bool ok = true;
        for (int n = 0; n <= d; ++n) ok = ok && img[n].eq(scale * eta_j2[n]);
        rep.add("exchanger image of eta_" + std::to_string(j), ok);
    }

    // (e) the 24 basis-mapping scalars
    for (const auto& b : all_bases()) {
        const SqMatrix xb = exchanger_matrix(m, b);
        const SqMatrix s = transition(m, b, b.shifted(2));
        rep.add_eq("exchanger maps " + b.str() + " to the scalar multiple of " +
                       b.shifted(2).str(),
                   xb, s.scaled(exchanger_basis_scalar(m, b[1])));
    }
    return rep;
}

namespace {

struct ShapePattern {
    int lo;
    int hi;
    bool has_diag;
    int diag_sign;  // +1: q^{d-2n}; -1: q^{2n-d}
};

// Rows keyed by (k-r, l-r) for the decomposition [k,l]; first table is for
// the cyclic generators x_{r,r+1}, second for the skew ones x_{r,r+2}.
ShapePattern shape_row(int step, int dk, int dl) {
    if (step == 1) {
        if (dk == 0 && dl == 1) return {0, 0, true, +1};
        if (dk == 1 && dl == 0) return {0, 0, true, -1};
        if (dk == 1 && dl == 2) return {0, 1, true, -1};
        if (dk == 2 && dl == 1) return {-1, 0, true, +1};
        if (dk == 2 && dl == 3) return {-1, 1, false, 0};
        if (dk == 3 && dl == 2) return {-1, 1, false, 0};
        if (dk == 3 && dl == 0) return {-1, 0, true, -1};
        if (dk == 0 && dl == 3) return {0, 1, true, +1};
        if (dk == 0 && dl == 2) return {0, 1, true, +1};
        if (dk == 2 && dl == 0) return {-1, 0, true, -1};
        if (dk == 1 && dl == 3) return {0, 1, true, -1};
        if (dk == 3 && dl == 1) return {-1, 0, true, +1};
    } else {
        const int big = 1000;  // effectively unbounded within the matrix
        if (dk == 0 && dl == 1) return {0, big, true, +1};
        if (dk == 1 && dl == 0) return {-big, 0, true, -1};
        if (dk == 1 && dl == 2) return {-big, 0, true, +1};
        if (dk == 2 && dl == 1) return {0, big, true, -1};
        if (dk == 2 && dl == 3) return {0, 1, true, -1};
        if (dk == 3 && dl == 2) return {-1, 0, true, +1};
        if (dk == 3 && dl == 0) return {-1, 0, true, -1};
        if (dk == 0 && dl == 3) return {0, 1, true, +1};
        if (dk == 0 && dl == 2) return {0, 0, true, +1};
        if (dk == 2 && dl == 0) return {0, 0, true, -1};
        if (dk == 1 && dl == 3) return {-big, 1, false, 0};
        if (dk == 3 && dl == 1) return {-1, big, false, 0};
    }
    throw std::logic_error("invalid decomposition offsets");
}

}  // namespace

VerifyReport shape_check(const EvalModule& m, const BasisLabel& b) {
    VerifyReport rep;
    const int d = m.d;
    const int k = b[2], l = b[3];
    for (const auto& g : all_generators()) {
        const int step = ((g.j - g.i) % 4 + 4) % 4;  // 1 or 2
        const int dk = ((k - g.i) % 4 + 4) % 4;
        const int dl = ((l - g.i) % 4 + 4) % 4;
        const ShapePattern pat = shape_row(step, dk, dl);
        const SqMatrix mat = rep_matrix(m, b, g);

        bool ok = within_band(mat, pat.lo, pat.hi);
        std::string witness = ok ? "" : "entry outside the allowed band";
        if (ok && pat.has_diag) {
            for (int n = 0; n <= d && ok; ++n) {
                const Scalar expect = m.q.pow(pat.diag_sign * (d - 2 * n));
                if (!mat.at(n, n).eq(expect)) {
                    ok = false;
                    witness = "diagonal entry " + std::to_string(n) + " is " +
                              mat.at(n, n).str() + ", expected " + expect.str();
                }
            }
        }
        rep.add("eigenflag containment of " + g.str() + " in basis " + b.str(), ok,
                witness);
    }
    return rep;
}

VerifyReport upsilon_suite(const EvalModule& m) {
    VerifyReport rep;
    const GeneratorAssignment g = full_representation(m, basis(0, 1, 2, 3));
    const Scalar q = m.q;
    const Scalar t = m.t;
    const SqMatrix id = SqMatrix::identity(m.d + 1);
    const SqMatrix ups = id.scaled(q.pow(m.d + 1) + q.pow(-m.d - 1));

    for (int i = 0; i < 4; ++i)
        rep.add_eq("casimir image at embedding " + std::to_string(i) +
                       " is (q^(d+1)+q^(-d-1))I",
                   upsilon(g, i), ups);

    const SqMatrix &x01 = g.mat(gen(0, 1)), &x12 = g.mat(gen(1, 2)),
                   &x23 = g.mat(gen(2, 3)), &x30 = g.mat(gen(3, 0));
    const Scalar qi = q.inv();
    rep.add_eq("product expression t(x01 x23 - 1) + q x30 + q^-1 x12",
               (x01 * x23 - id).scaled(t) + x30.scaled(q) + x12.scaled(qi), ups);
    rep.add_eq("product expression t^-1(x12 x30 - 1) + q x01 + q^-1 x23",
               (x12 * x30 - id).scaled(t.inv()) + x01.scaled(q) + x23.scaled(qi), ups);
    rep.add_eq("product expression t(x23 x01 - 1) + q x12 + q^-1 x30",
               (x23 * x01 - id).scaled(t) + x12.scaled(q) + x30.scaled(qi), ups);
    rep.add_eq("product expression t^-1(x30 x12 - 1) + q x23 + q^-1 x01",
               (x30 * x12 - id).scaled(t.inv()) + x23.scaled(q) + x01.scaled(qi), ups);

    auto weyl = [&](const SqMatrix& u, const SqMatrix& v) {
        return ((u * v).scaled(q) - (v * u).scaled(qi)).scaled((q - qi).inv());
    };
    const Scalar qq = q + qi;
    rep.add_eq("pair expression at x30",
               x30.scaled(qq) + (weyl(x01, x23) - id).scaled(t), ups);
    rep.add_eq("pair expression at x01",
               x01.scaled(qq) + (weyl(x12, x30) - id).scaled(t.inv()), ups);
    rep.add_eq("pair expression at x12",
               x12.scaled(qq) + (weyl(x23, x01) - id).scaled(t), ups);
    rep.add_eq("pair expression at x23",
               x23.scaled(qq) + (weyl(x30, x12) - id).scaled(t.inv()), ups);
    return rep;
}

VerifyReport askey_wilson_suite(const EvalModule& m) {
    VerifyReport rep;
    const GeneratorAssignment g = full_representation(m, basis(0, 1, 2, 3));
    const Scalar q = m.q;
    const Scalar qi = q.inv();
    const Scalar t = m.t;
    const Scalar delta = q - qi;
    const SqMatrix id = SqMatrix::identity(m.d + 1);

    auto comm_over_delta = [&](const SqMatrix& u, const SqMatrix& v) {
        return commutator(u, v).scaled(delta.inv());
    };
    // Defining identities for the parameter.
    rep.add_eq("t(x01 - x23) = [x30,x12]/(q-q^-1)",
               (g.mat(gen(0, 1)) - g.mat(gen(2, 3))).scaled(t),
               comm_over_delta(g.mat(gen(3, 0)), g.mat(gen(1, 2))));
    rep.add_eq("t^-1(x12 - x30) = [x01,x23]/(q-q^-1)",
               (g.mat(gen(1, 2)) - g.mat(gen(3, 0))).scaled(t.inv()),
               comm_over_delta(g.mat(gen(0, 1)), g.mat(gen(2, 3))));

    // The eight single-step companions.
    struct Row {
        GeneratorLabel lhs1, lhs2, com1, com2;
        int tpow;
    };
    const std::vector<Row> rows = {
        {gen(0, 1), gen(0, 2), gen(3, 0), gen(0, 2), +1},
        {gen(1, 2), gen(1, 3), gen(0, 1), gen(1, 3), -1},
        {gen(2, 3), gen(2, 0), gen(1, 2), gen(2, 0), +1},
        {gen(3, 0), gen(3, 1), gen(2, 3), gen(3, 1), -1},
        {gen(3, 0), gen(2, 0), gen(2, 0), gen(0, 1), -1},
        {gen(0, 1), gen(3, 1), gen(3, 1), gen(1, 2), +1},
        {gen(1, 2), gen(0, 2), gen(0, 2), gen(2, 3), -1},
        {gen(2, 3), gen(1, 3), gen(1, 3), gen(3, 0), +1},
    };
    for (const Row& r : rows)
        rep.add_eq("t^" + std::to_string(r.tpow) + "(" + r.lhs1.str() + " - " +
                       r.lhs2.str() + ") = [" + r.com1.str() + "," + r.com2.str() +
                       "]/(q-q^-1)",
                   (g.mat(r.lhs1) - g.mat(r.lhs2)).scaled(t.pow(r.tpow)),
                   comm_over_delta(g.mat(r.com1), g.mat(r.com2)));

    // The four Askey-Wilson relations.
    const Scalar ups = q.pow(m.d + 1) + q.pow(-m.d - 1);
    const Scalar q2 = q * q;
    const Scalar mid = q2 + q2.inv();
    auto aw = [&](const GeneratorLabel& u_lbl, const GeneratorLabel& v_lbl,
                  const Scalar& tp) {
        const SqMatrix& u = g.mat(u_lbl);
        const SqMatrix& v = g.mat(v_lbl);
        const SqMatrix u2 = u * u;
        const SqMatrix lhs = u2 * v - (u * v * u).scaled(mid) + v * u2;
        const SqMatrix rhs =
            -u.scaled(delta * delta * (Scalar(1) + tp * ups)) +
            id.scaled(delta * (q2 - q2.inv()) * tp);
        rep.add_eq("askey-wilson relation led by " + u_lbl.str(), lhs, rhs);
    };
    aw(gen(0, 1), gen(2, 3), t.inv());
    aw(gen(2, 3), gen(0, 1), t.inv());
    aw(gen(1, 2), gen(3, 0), t);
    aw(gen(3, 0), gen(1, 2), t);
    return rep;
}

VerifyReport identity_suite_appendix2(const EvalModule& m) {
    VerifyReport rep;
    const int d = m.d;
    const Scalar q = m.q;
    const Scalar qi = q.inv();
    const Scalar t = m.t;
    const Scalar ti = t.inv();
    const Scalar delta = q - qi;
    const SqMatrix id = SqMatrix::identity(d + 1);

    const SqMatrix Eq = mat_E(q, d), Eqi = mat_E(qi, d);
    const SqMatrix Kq = mat_K(q, d);
    const SqMatrix Z = mat_Z(d);
    const SqMatrix Tq = mat_T(q, d), Tqi = mat_T(qi, d);
    const SqMatrix Eq_inv = mat_Einv(q, d), Eqi_inv = mat_Einv(qi, d);
    const SqMatrix ZEqZ = conj_Z(Eq), ZEqiZ = conj_Z(Eqi);

    auto comm_over_delta = [&](const SqMatrix& u, const SqMatrix& v) {
        return commutator(u, v).scaled(delta.inv());
    };
    auto chk = [&](const std::string& name, const SqMatrix& lhs, const SqMatrix& rhs) {
        rep.add_eq(name, lhs, rhs);
    };

    // Commutator identities in matrix form: the defining relation pair.
    chk("t(ZEZ - F(t^-1)) = [E(q^-1), ZF(q^-1;t)Z]/(q-q^-1)",
        (ZEqZ - mat_F(q, ti, d)).scaled(t),
        comm_over_delta(Eqi, conj_Z(mat_F(qi, t, d))));
    chk("t(G(t^-1) - ZE(q^-1)Z) = [S(t), K]/(q-q^-1)",
        (mat_G(q, ti, d) - ZEqiZ).scaled(t), comm_over_delta(mat_S(q, t, d), Kq));
    chk("t(K - S(t^-1)) = [G(t), ZE(q^-1)Z]/(q-q^-1)",
        (Kq - mat_S(q, ti, d)).scaled(t), comm_over_delta(mat_G(q, t, d), ZEqiZ));

    // The twelve single-step identities.
    chk("t(ZEZ - M(t)) = [E(q^-1), M(t)]/(q-q^-1)",
        (ZEqZ - mat_M(q, t, d)).scaled(t), comm_over_delta(Eqi, mat_M(q, t, d)));
    chk("t^-1(F(q^-1;t) - K) = [E, K]/(q-q^-1)",
        (mat_F(qi, t, d) - Kq).scaled(ti), comm_over_delta(Eq, Kq));
    chk("t(E(q^-1) - K) = [F(t), K]/(q-q^-1)", (Eqi - Kq).scaled(t),
        comm_over_delta(mat_F(q, t, d), Kq));
    chk("t^-1(ZG(q^-1;t)Z - L(t)^-1) = [L(t)^-1, ZS(q^-1;t^-1)Z]/(q-q^-1)",
        (conj_Z(mat_G(qi, t, d)) - mat_Linv(q, t, d)).scaled(ti),
        comm_over_delta(mat_Linv(q, t, d), conj_Z(mat_S(qi, ti, d))));
    chk("t(K - E^-1) = [G(t), E^-1]/(q-q^-1)", (Kq - Eq_inv).scaled(t),
        comm_over_delta(mat_G(q, t, d), Eq_inv));
    chk("t^-1(S(t) - E) = [ZE(q^-1)Z, E]/(q-q^-1)",
        (mat_S(q, t, d) - Eq).scaled(ti), comm_over_delta(ZEqiZ, Eq));
    chk("t(S(t^-1) - ZL(q^-1;t)Z) = [ZL(q^-1;t)Z, G(t)]/(q-q^-1)",
        (mat_S(q, ti, d) - conj_Z(mat_L(qi, t, d))).scaled(t),
        comm_over_delta(conj_Z(mat_L(qi, t, d)), mat_G(q, t, d)));
    chk("t(G(t^-1) - E) = [E, K]/(q-q^-1)", (mat_G(q, ti, d) - Eq).scaled(t),
        comm_over_delta(Eq, Kq));
    chk("t(ZE(q^-1)Z - E^-1) = [E^-1, S(t)]/(q-q^-1)", (ZEqiZ - Eq_inv).scaled(t),
        comm_over_delta(Eq_inv, mat_S(q, t, d)));
    chk("t(K - L(t)^-1) = [E, L(t)^-1]/(q-q^-1)",
        (Kq - mat_Linv(q, t, d)).scaled(t), comm_over_delta(Eq, mat_Linv(q, t, d)));
    chk("t^-1(E - L(t)) = [L(t), K]/(q-q^-1)", (Eq - mat_L(q, t, d)).scaled(ti),
        comm_over_delta(mat_L(q, t, d), Kq));
    chk("t^-1(ZF(q^-1;t)Z - M(t)) = [M(t), F(t^-1)]/(q-q^-1)",
        (conj_Z(mat_F(qi, t, d)) - mat_M(q, t, d)).scaled(ti),
        comm_over_delta(mat_M(q, t, d), mat_F(q, ti, d)));

    // Closed transition loops.
    chk("(T Z)^3 = (-1)^d q^(-d(d-1)) I", Tq * Z * Tq * Z * Tq * Z,
        id.scaled(sign_pow(d) * q.pow(-static_cast<long>(d) * (d - 1))));
    chk("T CalD(t) T D(q^-1;t^-1) T(q^-1) D(t)^-1 = I",
        Tq * mat_CalD(q, t, d) * Tq * mat_D(qi, ti, d) * Tqi *
            mat_D(q, t, d).inverse(),
        id);

    // Conjugation identities.
    chk("ZTZ G(t) = F(t) ZTZ", conj_Z(Tq) * mat_G(q, t, d),
        mat_F(q, t, d) * conj_Z(Tq));
    chk("E(q^-1) = T(q^-1) E T", Eqi, Tqi * Eq * Tq);
    chk("L(t) ZT(q^-1)Z L(q^-1;t^-1) ZTZ = I",
        mat_L(q, t, d) * conj_Z(Tqi) * mat_L(qi, ti, d) * conj_Z(Tq), id);
    chk("S(t) = ZT(q^-1) F(q^-1;t) T Z", mat_S(q, t, d),
        Z * Tqi * mat_F(qi, t, d) * Tq * Z);
    chk("D(t^-1) S(t) D(t^-1)^-1 = ZS(q^-1;t)Z",
        mat_D(q, ti, d) * mat_S(q, t, d) * mat_D(q, ti, d).inverse(),
        conj_Z(mat_S(qi, t, d)));
    chk("M(t) = ZT L(q^-1;t^-1) T(q^-1) Z", mat_M(q, t, d),
        Z * Tq * mat_L(qi, ti, d) * Tqi * Z);
    chk("M(q^-1;t^-1) = CalD(t)^-1 M(t) CalD(t)", mat_M(qi, ti, d),
        mat_CalD(q, t, d).inverse() * mat_M(q, t, d) * mat_CalD(q, t, d));
    chk("M(t) Z M(q^-1;t^-1) Z = I", mat_M(q, t, d) * Z * mat_M(qi, ti, d) * Z, id);

    // The ten q-Weyl triples; each cyclic pair satisfies the relation.
    const std::vector<std::array<SqMatrix, 3>> triples = {
        {Eq, Kq, ZEqiZ},
        {mat_L(q, t, d), Kq, conj_Z(mat_G(qi, t, d))},
        {mat_S(qi, t, d), Eqi_inv, mat_G(qi, ti, d)},
        {Eq, mat_Linv(q, ti, d), conj_Z(mat_S(qi, t, d))},
        {conj_Z(mat_G(q, t, d)), mat_K(qi, d), mat_L(qi, t, d)},
        {mat_G(q, ti, d), Eq_inv, mat_S(q, t, d)},
        {conj_Z(mat_S(q, t, d)), mat_Linv(qi, ti, d), Eqi},
        {mat_F(q, ti, d), Eqi, mat_M(q, t, d)},
        {mat_M(qi, t, d), Eq, mat_F(qi, ti, d)},
        {mat_F(q, ti, d), Kq, conj_Z(mat_F(qi, t, d))},
    };
    auto weyl = [&](const SqMatrix& u, const SqMatrix& v) {
        return ((u * v).scaled(q) - (v * u).scaled(qi)).scaled(delta.inv());
    };
    for (std::size_t n = 0; n < triples.size(); ++n) {
        const auto& [u, v, w] = triples[n];
        const std::string tag = "q-weyl triple row " + std::to_string(n + 1);
        chk(tag + " (u,v)", weyl(u, v), id);
        chk(tag + " (v,w)", weyl(v, w), id);
        chk(tag + " (w,u)", weyl(w, u), id);
    }
    return rep;
}

}  // namespace qtet
