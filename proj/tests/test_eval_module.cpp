#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtet/eval_module.hpp"

using namespace qtet;

namespace {
const Scalar q = sym_q();
const Scalar t = sym_t();
}

TEST_CASE("representation table lookups") {
    const EvalModule m2 = make_eval_module(2);
    CHECK(rep_matrix(m2, basis(0, 1, 2, 3), gen(1, 2)).eq(mat_E(q, 2)));
    CHECK(rep_matrix(m2, basis(1, 0, 2, 3), gen(0, 2)).eq(mat_E(q, 2)));
    CHECK(rep_matrix(m2, basis(1, 0, 2, 3), gen(2, 0)).eq(mat_Einv(q, 2)));
    // odd base vertex inverts the parameter
    CHECK(rep_matrix(m2, basis(1, 2, 3, 0), gen(1, 2))
              .eq(conj_Z(mat_S(q.inv(), t, 2))));
    CHECK(rep_matrix(m2, basis(0, 2, 1, 3), gen(2, 0)).eq(mat_M(q, t, 2)));
}

TEST_CASE("full representations across bases") {
    const EvalModule m2 = make_eval_module(2);
    CHECK(verify_boxtimes(full_representation(m2, basis(0, 1, 2, 3))).all_pass());
    CHECK(extract_t(full_representation(m2, basis(2, 3, 0, 1))).eq(t));

    const EvalModule m3 =
        make_eval_module(3, Scalar(rat(5, 7)), unit_free7(), Scalar(rat(3, 2)));
    CHECK(verify_boxtimes(full_representation(m3, basis(1, 0, 2, 3))).all_pass());
}

TEST_CASE("shift symmetry of the representation tables") {
    const EvalModule m = make_eval_module(2);
    const EvalModule m_inv = make_eval_module(2, t.inv());
    for (const auto& b : all_bases())
        for (const auto& g : all_generators()) {
            // +2 shift of basis and generators leaves the matrices fixed
            CHECK(rep_matrix(m, b, g).eq(
                rep_matrix(m, b.shifted(2), gen(g.i + 2, g.j + 2))));
            // +1 shift matches the module with inverted parameter
            CHECK(rep_matrix(m, b, g).eq(
                rep_matrix(m_inv, b.shifted(1), gen(g.i + 1, g.j + 1))));
        }
}

TEST_CASE("reversal conjugation between sibling bases") {
    const EvalModule m = make_eval_module(3);
    for (const auto& g : all_generators())
        CHECK(rep_matrix(m, basis(0, 1, 3, 2), g)
                  .eq(conj_Z(rep_matrix(m, basis(0, 1, 2, 3), g))));
}

TEST_CASE("pairing table") {
    // with unit free values at d = 1 the first quotient relation gives t
    const PairingTable p1 = derive_pairing(unit_free7(), 1, t);
    CHECK((p1.at(0, 1) * p1.at(2, 3) / (p1.at(2, 1) * p1.at(0, 3))).eq(t));

    // oracle: the solved table satisfies all ten relations, symbolically
    for (int d = 1; d <= 4; ++d) {
        CAPTURE(d);
        const PairingTable p = derive_pairing(unit_free7(), d, t);
        CHECK(check_pairing_relations(p, d, t).all_pass());
    }

    // and with generic free values
    Free7 f;
    for (int i = 0; i < 7; ++i) f[i] = Scalar(rat(2 + i, 3)) * q.pow(i % 3);
    const PairingTable pf = derive_pairing(f, 3, t);
    CHECK(check_pairing_relations(pf, 3, t).all_pass());

    // numeric recheck
    const Scalar qv(rat(3, 2)), tv(rat(5, 7));
    const PairingTable pn = derive_pairing(unit_free7(), 2, tv, qv);
    CHECK(check_pairing_relations(pn, 2, tv, qv).all_pass());

    Free7 bad = unit_free7();
    bad[3] = Scalar(0);
    CHECK_THROWS_AS(derive_pairing(bad, 2, t), std::domain_error);
}

TEST_CASE("elementary transitions") {
    const EvalModule m = make_eval_module(3);
    const PairingTable& p = m.pairing;

    CHECK(transition(m, basis(0, 1, 2, 3), basis(0, 1, 3, 2)).eq(mat_Z(3)));
    CHECK(transition(m, basis(0, 1, 2, 3), basis(1, 0, 2, 3))
              .eq(mat_D(q, t, 3).scaled(p.at(0, 3) / p.at(1, 3))));
    CHECK(transition(m, basis(0, 1, 2, 3), basis(0, 2, 1, 3))
              .eq(mat_T(q, 3).scaled(p.at(2, 3) / p.at(1, 3))));

    const SqMatrix round = transition(m, basis(0, 1, 2, 3), basis(1, 0, 2, 3)) *
                           transition(m, basis(1, 0, 2, 3), basis(0, 1, 2, 3));
    CHECK(round.is_identity());
    CHECK(transition(m, basis(2, 0, 1, 3), basis(2, 0, 1, 3)).is_identity());
}

TEST_CASE("path independence of composed transitions") {
    const EvalModule m = make_eval_module(1);
    const auto& bases = all_bases();
    for (const auto& b1 : bases)
        for (const auto& b2 : bases) {
            const SqMatrix direct = transition(m, b1, b2);
            CHECK((direct * transition(m, b2, b1)).is_identity());
            const BasisLabel mid = b1.swapped(1);
            CHECK(direct.eq(transition(m, b1, mid) * transition(m, mid, b2)));
        }
}

TEST_CASE("transition consistency") {
    CHECK(verify_transition_consistency(make_eval_module(1)).all_pass());
    CHECK(verify_transition_consistency(
              make_eval_module(3, Scalar(rat(5, 7)), unit_free7(), Scalar(rat(3, 2))))
              .all_pass());
    // loop value at d = 2
    const SqMatrix tq = mat_T(q, 2);
    const SqMatrix z = mat_Z(2);
    CHECK((tq * z * tq * z * tq * z)
              .eq(SqMatrix::identity(3).scaled(q.pow(-2))));
}

TEST_CASE("basis-change coherence for every pair of bases") {
    for (int d = 1; d <= 2; ++d) {
        CAPTURE(d);
        const EvalModule m = make_eval_module(d);
        std::map<BasisLabel, GeneratorAssignment> reps;
        for (const auto& b : all_bases()) reps.emplace(b, full_representation(m, b));
        for (const auto& b1 : all_bases())
            for (const auto& b2 : all_bases()) {
                if (b1 == b2) continue;
                const SqMatrix s = transition(m, b1, b2);
                const SqMatrix s_inv = s.inverse();
                for (const auto& g : all_generators())
                    CHECK((s_inv * reps.at(b1).mat(g) * s).eq(reps.at(b2).mat(g)));
            }
    }
}

TEST_CASE("corner components") {
    for (int d = 1; d <= 2; ++d) {
        CAPTURE(d);
        CHECK(verify_corner_components(make_eval_module(d)).all_pass());
    }
}

TEST_CASE("exchanger closed forms") {
    const int d = 3;
    const EvalModule m = make_eval_module(d);
    const long binom = 3;  // d(d-1)/2
    const SqMatrix x = exchanger_matrix(m, basis(0, 2, 1, 3));
    for (int i = 0; i <= d; ++i) {
        CHECK(x.at(i, d - i).eq(t.pow(i) * q.pow(i * (d - 1) - binom)));
        for (int j = 0; j <= d; ++j)
            if (i + j != d) CHECK(x.at(i, j).is_zero());
    }
    const SqMatrix x2 = exchanger_matrix(m, basis(1, 3, 2, 0));
    for (int i = 0; i <= d; ++i)
        CHECK(x2.at(i, d - i).eq(Scalar(-1) * t.pow(d - i) *
                                 q.pow(i * (d - 1) - binom)));
    // squares to t^d in any basis
    CHECK((x * x).eq(SqMatrix::identity(d + 1).scaled(t.pow(d))));

    const EvalModule m1 = make_eval_module(1);
    const SqMatrix x_conj = exchanger_matrix(m1, basis(0, 1, 2, 3));
    CHECK((x_conj * x_conj).eq(SqMatrix::identity(2).scaled(t)));
}

TEST_CASE("exchanger verification and uniqueness") {
    CHECK(verify_exchanger(make_eval_module(1)).all_pass());
    for (int d = 1; d <= 2; ++d) {
        CAPTURE(d);
        const auto space = exchanger_solution_space(make_eval_module(d),
                                                    basis(0, 1, 2, 3));
        CHECK(space.size() == 1);
    }
    // the mapping scalar attached to slot-1 vertex 1
    const EvalModule m = make_eval_module(2);
    const SqMatrix xb = exchanger_matrix(m, basis(0, 1, 2, 3));
    const SqMatrix s = transition(m, basis(0, 1, 2, 3), basis(2, 3, 0, 1));
    const Scalar scale =
        q.pow(1) * m.pairing.at(1, 0) / m.pairing.at(3, 0);  // (-1)^d q^C at d=2
    CHECK(xb.eq(s.scaled(scale)));
}

TEST_CASE("eigenflag containments") {
    const EvalModule m = make_eval_module(3);
    CHECK(shape_check(m, basis(0, 1, 2, 3)).all_pass());
    CHECK(shape_check(m, basis(0, 2, 1, 3)).all_pass());

    // spot checks of the expected patterns
    const SqMatrix x23 = rep_matrix(m, basis(0, 1, 2, 3), gen(2, 3));
    CHECK(band_shape(x23).shape == Shape::diagonal);
    for (int n = 0; n <= 3; ++n) CHECK(x23.at(n, n).eq(q.pow(3 - 2 * n)));

    const SqMatrix x02 = rep_matrix(m, basis(0, 1, 2, 3), gen(0, 2));
    CHECK(band_shape(x02).shape == Shape::upper_bidiagonal);
    for (int n = 0; n <= 3; ++n) CHECK(x02.at(n, n).eq(q.pow(2 * n - 3)));

    const SqMatrix hess = rep_matrix(m, basis(0, 2, 1, 3), gen(0, 2));
    CHECK(within_band(hess, -3, 1));
    CHECK_FALSE(within_band(hess, -3, 0));
}

TEST_CASE("casimir image suite") {
    CHECK(upsilon_suite(make_eval_module(1)).all_pass());
    CHECK(upsilon_suite(make_eval_module(2)).all_pass());
}

TEST_CASE("parameter and askey-wilson identity suite") {
    CHECK(askey_wilson_suite(make_eval_module(1)).all_pass());
    CHECK(askey_wilson_suite(make_eval_module(2)).all_pass());
}

TEST_CASE("appendix identity catalogue") {
    CHECK(identity_suite_appendix2(make_eval_module(1)).all_pass());
    const EvalModule m3 =
        make_eval_module(3, Scalar(rat(5, 7)), unit_free7(), Scalar(rat(3, 2)));
    CHECK(identity_suite_appendix2(m3).all_pass());
}

TEST_CASE("module construction guards") {
    CHECK_THROWS_AS(make_eval_module(2, Scalar(0)), degenerate_parameter);
    // t = q^(d-1) at a numeric point is excluded
    CHECK_THROWS_AS(
        make_eval_module(2, Scalar(rat(3, 2)), unit_free7(), Scalar(rat(3, 2))),
        degenerate_parameter);
}
