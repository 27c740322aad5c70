#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtet/leonard.hpp"

using namespace qtet;

namespace {

const Scalar q = sym_q();

FeasibleSeq sym_seq(int d) {
    return FeasibleSeq{Scalar::variable(Var::a), Scalar::variable(Var::b),
                       Scalar::variable(Var::c), d, sym_q()};
}

// A rational point satisfying both feasibility clauses at q = 3/2.
FeasibleSeq num_seq(int d) {
    return FeasibleSeq{Scalar(rat(5, 3)), Scalar(rat(5, 2)), Scalar(rat(7, 4)), d,
                       Scalar(rat(3, 2))};
}

}  // namespace

TEST_CASE("feasibility guards") {
    CHECK(is_feasible(sym_seq(4)));
    CHECK(is_feasible(num_seq(5)));

    // a^2 = q^-2 at q = 3/2 violates the first clause for d >= 2
    const FeasibleSeq bad{Scalar(rat(2, 3)), Scalar(rat(5, 2)), Scalar(rat(7, 4)), 3,
                          Scalar(rat(3, 2))};
    const auto v = feasibility_violation(bad);
    REQUIRE(v.has_value());
    CHECK(*v == "a^2 = q^-2");
    CHECK_THROWS_AS(parameter_array(bad), infeasible_sequence);

    // abc^-1 = q^0 violates the second clause
    const FeasibleSeq bad2{Scalar(rat(1, 2)), Scalar(rat(7, 2)), Scalar(rat(7, 4)), 3,
                           Scalar(rat(3, 2))};
    const auto v2 = feasibility_violation(bad2);
    REQUIRE(v2.has_value());
    CHECK(*v2 == "abc^-1 = q^0");
}

TEST_CASE("feasibility closure of the eight-sequence orbit") {
    for (const FeasibleSeq& s : sequence_orbit(num_seq(4))) CHECK(is_feasible(s));
    for (const FeasibleSeq& s : sequence_orbit(sym_seq(3))) CHECK(is_feasible(s));
}

TEST_CASE("parameter arrays") {
    const FeasibleSeq s = sym_seq(3);
    const ParameterArray pa = parameter_array(s);
    CHECK(pa.theta[0].eq(s.a * q.pow(-3) + s.a.inv() * q.pow(3)));
    CHECK(pa.theta.size() == 4);
    CHECK(pa.phi.size() == 3);

    const auto rows = relatives(s);  // throws if any row fails recomputation
    REQUIRE(rows.size() == 5);
    // inverse-a row: eigenvalues reversed, split coefficients swapped
    CHECK(rows[1].array.theta.front().eq(pa.theta.back()));
    CHECK(rows[1].array.phi[0].eq(pa.phi_flat[0]));
    // inverse-c row: identical array
    CHECK(rows[3].array.eq(pa));
}

TEST_CASE("askey-wilson triples") {
    const int d = 1;
    const FeasibleSeq s = sym_seq(d);
    const UqTriple tri{mat_E(q, d), mat_K(q, d), mat_K(q.inv(), d),
                       conj_Z(mat_E(q.inv(), d))};
    const SqMatrix lambda =
        SqMatrix::identity(d + 1).scaled(q.pow(d + 1) + q.pow(-d - 1));

    CHECK(check_aw_z3(aw_triple(s, tri), s, lambda, false).all_pass());
    CHECK(check_aw_z3(dual_aw_triple(s, tri), s, lambda, true).all_pass());

    // the dual triple reorders to the plain triple for (b,a,c)
    const FeasibleSeq swapped{s.b, s.a, s.c, d, q};
    const AwTriple dual = dual_aw_triple(s, tri);
    const AwTriple plain = aw_triple(swapped, tri);
    CHECK(dual.A.eq(plain.B));
    CHECK(dual.B.eq(plain.A));
    CHECK(dual.C.eq(plain.C));

    // all ones
    const FeasibleSeq ones{Scalar(1), Scalar(1), Scalar(1), d, q};
    const UqTriple id_tri{SqMatrix::identity(2), SqMatrix::identity(2),
                          SqMatrix::identity(2), SqMatrix::identity(2)};
    CHECK(aw_triple(ones, id_tri).A.eq(SqMatrix::identity(2).scaled(Scalar(2))));
}

TEST_CASE("z3 identities on the module, symbolic in a, b, c") {
    for (int d = 1; d <= 3; ++d) {
        CAPTURE(d);
        const FeasibleSeq s = sym_seq(d);
        const UqTriple tri{mat_E(q, d), mat_K(q, d), mat_K(q.inv(), d),
                           conj_Z(mat_E(q.inv(), d))};
        const SqMatrix lambda =
            SqMatrix::identity(d + 1).scaled(q.pow(d + 1) + q.pow(-d - 1));
        CHECK(check_aw_z3(aw_triple(s, tri), s, lambda, false).all_pass());
        CHECK(check_aw_z3(dual_aw_triple(s, tri), s, lambda, true).all_pass());
    }
}

TEST_CASE("split-form construction") {
    for (int d : {1, 2}) {
        CAPTURE(d);
        const LeonardBuild built = build_leonard_on_Vd(sym_seq(d));
        CHECK(built.report.all_pass());
        const ParameterArray pa = parameter_array(sym_seq(d));
        CHECK(built.real.B.at(0, 1).eq(pa.phi_flat[0]));
        CHECK(built.real.A.at(1, 0).is_one());
        CHECK(built.real.A.at(0, 0).eq(pa.theta[d]));
    }
    // numeric at d = 3
    const LeonardBuild built = build_leonard_on_Vd(num_seq(3));
    CHECK(built.report.all_pass());
}

TEST_CASE("completions") {
    const FeasibleSeq s = sym_seq(1);
    const LeonardBuild built = build_leonard_on_Vd(s);
    const Completions comp = z3_completions(built.real.A, built.real.B, s);
    CHECK(comp.report.all_pass());
    CHECK((comp.C_dual - comp.C)
              .eq(commutator(built.real.A, built.real.B).scaled((q - q.inv()).inv())));
}

TEST_CASE("derived askey-wilson relations for the pair") {
    // Eliminating the completions from the relation system leaves the
    // three-term relations; check them on the split pair.
    for (int d : {1, 2}) {
        CAPTURE(d);
        const FeasibleSeq s = sym_seq(d);
        const LeonardBuild built = build_leonard_on_Vd(s);
        const SqMatrix &A = built.real.A, &B = built.real.B;
        const int n = d + 1;
        const SqMatrix id = SqMatrix::identity(n);
        const Scalar lam = q.pow(d + 1) + q.pow(-d - 1);
        const Scalar qq = q + q.inv();
        auto pi = [](const Scalar& x) { return x + x.inv(); };
        const Scalar rhs_a = (pi(s.a) * lam + pi(s.b) * pi(s.c)) / qq;
        const Scalar rhs_b = (pi(s.b) * lam + pi(s.c) * pi(s.a)) / qq;
        const Scalar rhs_c = (pi(s.c) * lam + pi(s.a) * pi(s.b)) / qq;
        const Scalar q2 = q * q;
        const Scalar wide = q2 - q2.inv();
        const Scalar mid = q2 + q2.inv();

        CHECK((B * B * A - (B * A * B).scaled(mid) + A * B * B)
                  .eq(id.scaled(wide * wide * rhs_a) - A.scaled(wide * wide) -
                      B.scaled(rhs_c * (q - q.inv()) * wide)));
        CHECK((A * A * B - (A * B * A).scaled(mid) + B * A * A)
                  .eq(id.scaled(wide * wide * rhs_b) - B.scaled(wide * wide) -
                      A.scaled(rhs_c * (q - q.inv()) * wide)));
    }
}

TEST_CASE("transpose antiautomorphism") {
    const LeonardBuild b1 = build_leonard_on_Vd(sym_seq(1));
    const VerifyReport rep1 = dagger_check(b1.real);
    CHECK(rep1.all_pass());

    const LeonardBuild b3 = build_leonard_on_Vd(num_seq(3));
    CHECK(dagger_check(b3.real).all_pass());

    // applying the conjugation twice is the identity on A and B
    const auto space = intertwiner_space(
        {{b1.real.A.transpose(), b1.real.A}, {b1.real.B.transpose(), b1.real.B}}, 2);
    REQUIRE(space.size() == 1);
    const SqMatrix& p = space.front();
    const SqMatrix twice = p * (p * b1.real.A.transpose() * p.inverse()).transpose() *
                           p.inverse();
    CHECK(twice.eq(b1.real.A));
}

TEST_CASE("realization by generator combinations") {
    const LeonardBuild built = boxtimes_realization(sym_seq(1));
    CHECK(built.report.all_pass());

    const LeonardBuild built2 = boxtimes_realization(num_seq(2));
    CHECK(built2.report.all_pass());

    // the two-generator combination is tridiagonal in this basis
    const auto shape = band_shape(built2.real.A);
    CHECK(shape.shape == Shape::tridiagonal);
}

TEST_CASE("compact basis at diameter 3, symbolic") {
    const FeasibleSeq s = sym_seq(3);
    const LeonardBuild built = compact_basis(s);
    CHECK(built.report.all_pass());

    const Scalar &a = s.a, &b = s.b, &c = s.c;
    auto pi = [](const Scalar& x) { return x + x.inv(); };
    const SqMatrix& A = built.real.A;
    // first row of the closed display
    CHECK(A.at(0, 0).eq(pi(a) * q.pow(3)));
    CHECK(A.at(0, 1).eq(c * (Scalar(1) - q.pow(6))));
    CHECK(A.at(1, 0).eq(c.inv() * (Scalar(1) - q.pow(-2))));
    CHECK(A.at(1, 1).eq(pi(a) * q));
    CHECK(A.at(2, 2).eq(pi(a) * q.inv()));
    CHECK(A.at(2, 3).eq(c * (Scalar(1) - q.pow(2))));
    CHECK(A.at(3, 3).eq(pi(a) * q.pow(-3)));

    const SqMatrix& B = built.real.B;
    CHECK(B.at(0, 0).eq(pi(b) * q.pow(-3)));
    CHECK(B.at(0, 1).eq(q.pow(4) * (Scalar(1) - q.pow(-6))));
    CHECK(B.at(1, 0).eq(q.pow(-4) * (Scalar(1) - q.pow(2))));
    CHECK(B.at(3, 3).eq(pi(b) * q.pow(3)));

    // second superdiagonal of the completion
    for (int n = 2; n <= 3; ++n)
        CHECK(built.real.C.at(n - 2, n)
                  .eq(c * q.pow(4) * (q.pow(4 - n) - q.pow(n - 4)) *
                      (q.pow(5 - n) - q.pow(n - 5))));

    // uniqueness up to a global scalar
    for (int d = 1; d <= 2; ++d) {
        const LeonardBuild small = compact_basis(sym_seq(d));
        const auto space = intertwiner_space(
            {{small.real.A, small.real.A}, {small.real.B, small.real.B}}, d + 1);
        CHECK(space.size() == 1);
    }
}

TEST_CASE("leonard shape verification") {
    // split pair at a rational point: A is triangular, eigenvalues readable
    const FeasibleSeq s2 = num_seq(2);
    const LeonardBuild built = build_leonard_on_Vd(s2);
    CHECK(verify_leonard_shape(built.real.A, built.real.B).all_pass());

    // a commuting diagonal pair fails the tridiagonal condition
    const SqMatrix k = mat_K(Scalar(rat(3, 2)), 2);
    std::vector<Scalar> eig;
    for (int i = 0; i < 3; ++i) eig.push_back(k.at(i, i));
    const VerifyReport rep = verify_leonard_shape(k, k, eig, eig);
    CHECK_FALSE(rep.all_pass());

    // compact pair at d = 3, eigenvalues supplied from the parameter array
    const FeasibleSeq s3 = num_seq(3);
    const LeonardBuild compact = compact_basis(s3);
    const ParameterArray pa = parameter_array(s3);
    CHECK(verify_leonard_shape(compact.real.A, compact.real.B, pa.theta,
                               pa.theta_star)
              .all_pass());
}
