#include "qtet/algebra.hpp"

namespace qtet {

const std::array<GeneratorLabel, 8>& all_generators() {
    static const std::array<GeneratorLabel, 8> gens = {
        GeneratorLabel{0, 1}, GeneratorLabel{1, 2}, GeneratorLabel{2, 3},
        GeneratorLabel{3, 0}, GeneratorLabel{0, 2}, GeneratorLabel{1, 3},
        GeneratorLabel{2, 0}, GeneratorLabel{3, 1}};
    return gens;
}

int generator_index(const GeneratorLabel& g) {
    const auto& gens = all_generators();
    for (int k = 0; k < 8; ++k)
        if (gens[k] == g) return k;
    throw std::domain_error("not a standard generator: x" + std::to_string(g.i) +
                            std::to_string(g.j));
}

GeneratorAssignment GeneratorAssignment::trivial(int dim) {
    GeneratorAssignment g;
    for (auto& m : g.matrices) m = SqMatrix::identity(dim);
    return g;
}

namespace {

// (q*u*v - q^-1*v*u)/(q - q^-1) as a matrix.
SqMatrix weyl_lhs(const SqMatrix& u, const SqMatrix& v, const Scalar& q) {
    const Scalar qi = q.inv();
    return ((u * v).scaled(q) - (v * u).scaled(qi)).scaled((q - qi).inv());
}

}  // namespace

VerifyReport verify_equitable(const UqTriple& t, const Scalar& q) {
    VerifyReport rep;
    const int n = t.x.dim();
    const SqMatrix id = SqMatrix::identity(n);
    rep.add_eq("y*y_inv = 1", t.y * t.y_inv, id);
    rep.add_eq("q-weyl(x,y)", weyl_lhs(t.x, t.y, q), id);
    rep.add_eq("q-weyl(y,z)", weyl_lhs(t.y, t.z, q), id);
    rep.add_eq("q-weyl(z,x)", weyl_lhs(t.z, t.x, q), id);
    return rep;
}

VerifyReport verify_boxtimes(const GeneratorAssignment& g) {
    VerifyReport rep;
    const Scalar q = g.effective_q();
    const int n = g.dim();
    const SqMatrix id = SqMatrix::identity(n);

    // (i) inverse pairs for the doubly oriented edges
    for (int i = 0; i < 4; ++i) {
        const GeneratorLabel a = gen(i, i + 2);
        rep.add_eq(a.str() + "*" + gen(i + 2, i).str() + " = 1",
                   g.mat(a) * g.mat(gen(i + 2, i)), id);
    }
    // (ii) q-Weyl for directed 2-paths
    for (int i = 0; i < 4; ++i)
        for (auto [s1, s2] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
            const GeneratorLabel a = gen(i, i + s1);
            const GeneratorLabel b = gen(i + s1, i + s1 + s2);
            rep.add_eq("q-weyl(" + a.str() + "," + b.str() + ")",
                       weyl_lhs(g.mat(a), g.mat(b), q), id);
        }
    // (iii) cubic q-Serre for opposite singly oriented edges
    const Scalar three = q_bracket(3, q);
    for (int i = 0; i < 4; ++i) {
        const SqMatrix& x = g.mat(gen(i, i + 1));
        const SqMatrix& y = g.mat(gen(i + 2, i + 3));
        const SqMatrix x2 = x * x;
        const SqMatrix x3 = x2 * x;
        const SqMatrix lhs =
            x3 * y - (x2 * y * x).scaled(three) + (x * y * x2).scaled(three) - y * x3;
        rep.add_eq("cubic(" + gen(i, i + 1).str() + "," + gen(i + 2, i + 3).str() + ")",
                   lhs, SqMatrix::zero(n));
    }
    return rep;
}

SqMatrix casimir(const UqTriple& t, const Scalar& q) {
    const Scalar qi = q.inv();
    const SqMatrix &x = t.x, &y = t.y, &z = t.z;
    const std::array<SqMatrix, 6> forms = {
        x.scaled(q) + y.scaled(qi) + z.scaled(q) - (x * y * z).scaled(q),
        x.scaled(qi) + y.scaled(q) + z.scaled(qi) - (z * y * x).scaled(qi),
        y.scaled(q) + z.scaled(qi) + x.scaled(q) - (y * z * x).scaled(q),
        y.scaled(qi) + z.scaled(q) + x.scaled(qi) - (x * z * y).scaled(qi),
        z.scaled(q) + x.scaled(qi) + y.scaled(q) - (z * x * y).scaled(q),
        z.scaled(qi) + x.scaled(q) + y.scaled(qi) - (y * x * z).scaled(qi),
    };
    for (int k = 1; k < 6; ++k)
        if (auto w = diff_witness(forms[0], forms[k]))
            throw std::runtime_error(
                "casimir expressions disagree (input is not a module): " + *w);
    return forms[0];
}

VerifyReport weyl_consequences(const SqMatrix& u, const SqMatrix& v,
                               const std::optional<SqMatrix>& w, const Scalar& q) {
    VerifyReport rep;
    const int n = u.dim();
    const SqMatrix id = SqMatrix::identity(n);
    const Scalar qi = q.inv();
    const Scalar delta = q - qi;

    const bool uv_ok = weyl_lhs(u, v, q).eq(id);
    rep.add("hypothesis q-weyl(u,v)", uv_ok, uv_ok ? "" : "hypothesis not satisfied");
    if (uv_ok) {
        const SqMatrix comm_uv = commutator(u, v);
        rep.add_eq("q(1-uv) = [u,v]/(q-q^-1)", (id - u * v).scaled(q),
                   comm_uv.scaled(delta.inv()));
        rep.add_eq("q^-1(1-vu) = [u,v]/(q-q^-1)", (id - v * u).scaled(qi),
                   comm_uv.scaled(delta.inv()));
        try {
            const SqMatrix ui = u.inverse();
            rep.add_eq("[u^-1,[u,v]] = (q-q^-1)^2 (u^-1 - v)",
                       commutator(ui, comm_uv), (ui - v).scaled(delta * delta));
        } catch (const singular_matrix&) {
            rep.add("u^-1 exists", true, "skipped: u not invertible");
        }
        try {
            const SqMatrix vi = v.inverse();
            rep.add_eq("[[u,v],v^-1] = (q-q^-1)^2 (v^-1 - u)",
                       commutator(comm_uv, vi), (vi - u).scaled(delta * delta));
        } catch (const singular_matrix&) {
            rep.add("v^-1 exists", true, "skipped: v not invertible");
        }
    }
    if (w) {
        const bool vw_ok = weyl_lhs(v, *w, q).eq(id);
        rep.add("hypothesis q-weyl(v,w)", vw_ok,
                vw_ok ? "" : "hypothesis not satisfied");
        if (uv_ok && vw_ok) {
            const SqMatrix diff = u - *w;
            rep.add_eq("[v,uw] = q(q-q^-1)(u-w)", commutator(v, u * (*w)),
                       diff.scaled(q * delta));
            rep.add_eq("[v,wu] = q^-1(q-q^-1)(u-w)", commutator(v, (*w) * u),
                       diff.scaled(qi * delta));
            rep.add_eq("[v,[u,w]] = (q-q^-1)^2 (u-w)",
                       commutator(v, commutator(u, *w)), diff.scaled(delta * delta));
        }
    }
    return rep;
}

UqTriple kappa_pullback(const GeneratorAssignment& g, int i) {
    return UqTriple{g.mat(gen(i + 2, i + 3)), g.mat(gen(i + 3, i + 1)),
                    g.mat(gen(i + 1, i + 3)), g.mat(gen(i + 1, i + 2))};
}

SqMatrix upsilon(const GeneratorAssignment& g, int i) {
    const UqTriple t = kappa_pullback(g, i);
    const Scalar q = g.effective_q();
    return t.x.scaled(q) + t.y.scaled(q.inv()) + t.z.scaled(q) -
           (t.x * t.y * t.z).scaled(q);
}

GeneratorAssignment apply_rho(const GeneratorAssignment& g) {
    GeneratorAssignment out = g;
    for (const auto& lbl : all_generators())
        out.mat(lbl) = g.mat(gen(lbl.i - 1, lbl.j - 1));
    return out;
}

GeneratorAssignment apply_sigma(const GeneratorAssignment& g) {
    GeneratorAssignment out = g;
    for (auto& m : out.matrices) m = -m;
    return out;
}

GeneratorAssignment apply_theta(const GeneratorAssignment& g) {
    static const std::array<std::pair<GeneratorLabel, GeneratorLabel>, 8> map = {
        std::pair{gen(0, 1), gen(0, 1)}, {gen(1, 2), gen(3, 0)},
        {gen(2, 3), gen(2, 3)},          {gen(3, 0), gen(1, 2)},
        {gen(0, 2), gen(3, 1)},          {gen(1, 3), gen(2, 0)},
        {gen(2, 0), gen(1, 3)},          {gen(3, 1), gen(0, 2)}};
    GeneratorAssignment out = g;
    out.orientation = flip(g.orientation);
    for (const auto& [from, to] : map) out.mat(from) = g.mat(to);
    return out;
}

GeneratorAssignment dual_assignment(const GeneratorAssignment& g) {
    GeneratorAssignment out = g;
    out.orientation = flip(g.orientation);
    for (int k = 0; k < 8; ++k) out.matrices[k] = g.matrices[k].transpose();
    return out;
}

Scalar extract_t(const GeneratorAssignment& g) {
    const Scalar q = g.effective_q();
    const Scalar delta = q - q.inv();
    const SqMatrix lhs1 = g.mat(gen(0, 1)) - g.mat(gen(2, 3));
    if (lhs1.is_zero())
        throw std::runtime_error("generators not distinct: x01 = x23");
    const SqMatrix rhs1 =
        commutator(g.mat(gen(3, 0)), g.mat(gen(1, 2))).scaled(delta.inv());

    Scalar t;
    bool found = false;
    for (int i = 0; i < lhs1.dim() && !found; ++i)
        for (int j = 0; j < lhs1.dim() && !found; ++j)
            if (!lhs1.at(i, j).is_zero()) {
                t = rhs1.at(i, j) / lhs1.at(i, j);
                found = true;
            }
    if (!found || t.is_zero())
        throw std::runtime_error("not an evaluation module: no consistent t");

    // Global recheck of both defining identities.
    if (auto w = diff_witness(lhs1.scaled(t), rhs1))
        throw std::runtime_error("not an evaluation module: " + *w);
    const SqMatrix lhs2 =
        (g.mat(gen(1, 2)) - g.mat(gen(3, 0))).scaled(t.inv());
    const SqMatrix rhs2 =
        commutator(g.mat(gen(0, 1)), g.mat(gen(2, 3))).scaled(delta.inv());
    if (auto w = diff_witness(lhs2, rhs2))
        throw std::runtime_error("not an evaluation module (companion identity): " +
                                 *w);
    return t;
}

}  // namespace qtet
