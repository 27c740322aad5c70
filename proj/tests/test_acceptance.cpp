/**
 * @file test_acceptance.cpp
 * @brief End-to-end acceptance suite. Every criterion prints one
 *        pass/fail line; all comparisons are exact.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <fstream>
#include <iostream>

#include "qtet/json_io.hpp"
#include "qtet/leonard.hpp"

using namespace qtet;

namespace {

const Scalar q = sym_q();
const Scalar t = sym_t();

bool criterion(int number, const std::string& label,
               const std::function<bool()>& run) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = run();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
              << label << " (" << ms << " ms)";
    if (!error.empty()) std::cout << "  error: " << error;
    std::cout << std::endl;
    return ok;
}

bool report_ok(const VerifyReport& rep, const char* context) {
    if (rep.all_pass()) return true;
    std::cout << "    first failing check [" << context
              << "]: " << rep.first_failure() << "\n";
    return false;
}

// ---- the thirteen diameter-3 display matrices, transcribed entrywise ----

Scalar f1m(const Scalar& x) { return Scalar(1) - x; }

SqMatrix display_Z() {
    SqMatrix m(4);
    m.at(0, 3) = m.at(1, 2) = m.at(2, 1) = m.at(3, 0) = Scalar(1);
    return m;
}

SqMatrix display_K() {
    SqMatrix m(4);
    m.at(0, 0) = q.pow(3);
    m.at(1, 1) = q;
    m.at(2, 2) = q.inv();
    m.at(3, 3) = q.pow(-3);
    return m;
}

SqMatrix display_D() {
    SqMatrix m(4);
    m.at(0, 0) = Scalar(1);
    m.at(1, 1) = f1m(t * q.pow(2));
    m.at(2, 2) = f1m(t * q.pow(2)) * f1m(t);
    m.at(3, 3) = f1m(t * q.pow(2)) * f1m(t) * f1m(t * q.pow(-2));
    return m;
}

SqMatrix display_CalD() {
    SqMatrix m(4);
    m.at(0, 0) = Scalar(1);
    m.at(1, 1) = t * q.pow(2);
    m.at(2, 2) = t.pow(2) * q.pow(4);
    m.at(3, 3) = t.pow(3) * q.pow(6);
    return m;
}

SqMatrix display_T() {
    SqMatrix m(4);
    m.at(0, 0) = Scalar(1);
    m.at(1, 0) = Scalar(1);
    m.at(1, 1) = Scalar(-1);
    m.at(2, 0) = Scalar(1);
    m.at(2, 1) = -q.inv() * q_bracket(2);
    m.at(2, 2) = q.pow(-2);
    m.at(3, 0) = Scalar(1);
    m.at(3, 1) = -q.pow(-2) * q_bracket(3);
    m.at(3, 2) = q.pow(-4) * q_bracket(3);
    m.at(3, 3) = -q.pow(-6);
    return m;
}

SqMatrix display_E() {
    SqMatrix m(4);
    m.at(0, 0) = q.pow(-3);
    m.at(0, 1) = q.pow(3) - q.pow(-3);
    m.at(1, 1) = q.inv();
    m.at(1, 2) = q.pow(3) - q.inv();
    m.at(2, 2) = q;
    m.at(2, 3) = q.pow(3) - q;
    m.at(3, 3) = q.pow(3);
    return m;
}

SqMatrix display_Einv() {
    SqMatrix m(4);
    m.at(0, 0) = q.pow(3);
    m.at(0, 1) = f1m(q.pow(6)) * q;
    m.at(0, 2) = f1m(q.pow(4)) * f1m(q.pow(6)) * q.inv();
    m.at(0, 3) = f1m(q.pow(2)) * f1m(q.pow(4)) * f1m(q.pow(6)) * q.pow(-3);
    m.at(1, 1) = q;
    m.at(1, 2) = f1m(q.pow(4)) * q.inv();
    m.at(1, 3) = f1m(q.pow(2)) * f1m(q.pow(4)) * q.pow(-3);
    m.at(2, 2) = q.inv();
    m.at(2, 3) = f1m(q.pow(2)) * q.pow(-3);
    m.at(3, 3) = q.pow(-3);
    return m;
}

SqMatrix display_F() {
    SqMatrix m = display_E();
    m.at(0, 1) = (q.pow(3) - q.pow(-3)) * q.pow(-2) * t;
    m.at(1, 2) = (q.pow(3) - q.inv()) * q.pow(-2) * t;
    m.at(2, 3) = (q.pow(3) - q) * q.pow(-2) * t;
    return m;
}

SqMatrix display_G() {
    SqMatrix m = display_E();
    m.at(0, 1) = (q.pow(3) - q.pow(-3)) * f1m(t * q.pow(2));
    m.at(1, 2) = (q.pow(3) - q.inv()) * f1m(t);
    m.at(2, 3) = (q.pow(3) - q) * f1m(t * q.pow(-2));
    return m;
}

SqMatrix display_L() {
    SqMatrix m = display_E();
    m.at(0, 1) = (q.pow(3) - q.pow(-3)) / f1m(t * q.pow(2));
    m.at(1, 2) = (q.pow(3) - q.inv()) / f1m(t);
    m.at(2, 3) = (q.pow(3) - q) / f1m(t * q.pow(-2));
    return m;
}

SqMatrix display_Linv() {
    SqMatrix m(4);
    m.at(0, 0) = q.pow(3);
    m.at(0, 1) = f1m(q.pow(6)) * q / f1m(t * q.pow(2));
    m.at(0, 2) = f1m(q.pow(4)) * f1m(q.pow(6)) * q.inv() / (f1m(t) * f1m(t * q.pow(2)));
    m.at(0, 3) = f1m(q.pow(2)) * f1m(q.pow(4)) * f1m(q.pow(6)) * q.pow(-3) /
                 (f1m(t * q.pow(-2)) * f1m(t) * f1m(t * q.pow(2)));
    m.at(1, 1) = q;
    m.at(1, 2) = f1m(q.pow(4)) * q.inv() / f1m(t);
    m.at(1, 3) = f1m(q.pow(2)) * f1m(q.pow(4)) * q.pow(-3) /
                 (f1m(t * q.pow(-2)) * f1m(t));
    m.at(2, 2) = q.inv();
    m.at(2, 3) = f1m(q.pow(2)) * q.pow(-3) / f1m(t * q.pow(-2));
    m.at(3, 3) = q.pow(-3);
    return m;
}

SqMatrix display_S() {
    SqMatrix extra(4);
    extra.at(0, 0) = q - q.pow(-5);
    extra.at(0, 1) = q.pow(-5) - q;
    extra.at(1, 0) = q.pow(-3) - q.pow(-5);
    extra.at(1, 1) = (q - q.inv()) * (q.pow(2) + Scalar(1) - q.pow(-4));
    extra.at(1, 2) = q.inv() - q.pow(3);
    extra.at(2, 1) = q - q.pow(-3);
    extra.at(2, 2) = (q - q.inv()) * (q.pow(4) - Scalar(1) - q.pow(-2));
    extra.at(2, 3) = q.pow(3) - q.pow(5);
    extra.at(3, 2) = q.pow(5) - q.inv();
    extra.at(3, 3) = q.inv() - q.pow(5);
    return display_E() + extra.scaled(t);
}

SqMatrix display_M() {
    SqMatrix m(4);
    const Scalar d2 = f1m(t * q.pow(-2));
    const Scalar d0 = f1m(t);
    const Scalar dp2 = f1m(t * q.pow(2));
    const Scalar up4 = f1m(t * q.pow(4));
    const Scalar um4 = f1m(t * q.pow(-4));
    m.at(0, 0) = up4 / (q.pow(3) * d2);
    m.at(0, 1) = up4 * f1m(q.pow(-6)) / (q * d2 * d0);
    m.at(0, 2) = q * up4 * f1m(q.pow(-4)) * f1m(q.pow(-6)) / (d2 * d0 * dp2);
    m.at(0, 3) =
        q.pow(3) * f1m(q.pow(-2)) * f1m(q.pow(-4)) * f1m(q.pow(-6)) / (d2 * d0 * dp2);
    m.at(1, 0) = (q.inv() - q) / (t.inv() - q.pow(-2));
    m.at(1, 1) = up4 * um4 / (q * d2 * d0);
    m.at(1, 2) = q * up4 * um4 * f1m(q.pow(-4)) / (d2 * d0 * dp2);
    m.at(1, 3) = q.pow(3) * um4 * f1m(q.pow(-2)) * f1m(q.pow(-4)) / (d2 * d0 * dp2);
    m.at(2, 1) = (q.inv() - q.pow(3)) / (t.inv() - Scalar(1));
    m.at(2, 2) = q * up4 * um4 / (d0 * dp2);
    m.at(2, 3) = q.pow(3) * um4 * f1m(q.pow(-2)) / (d0 * dp2);
    m.at(3, 2) = (q.inv() - q.pow(5)) / (t.inv() - q.pow(2));
    m.at(3, 3) = q.pow(3) * um4 / dp2;
    return m;
}

struct GoldenCase {
    MatrixTag tag;
    SqMatrix expected;
};

std::vector<GoldenCase> golden_cases() {
    return {{MatrixTag::Z, display_Z()},       {MatrixTag::K, display_K()},
            {MatrixTag::D, display_D()},       {MatrixTag::CalD, display_CalD()},
            {MatrixTag::T, display_T()},       {MatrixTag::E, display_E()},
            {MatrixTag::Einv, display_Einv()}, {MatrixTag::F, display_F()},
            {MatrixTag::G, display_G()},       {MatrixTag::L, display_L()},
            {MatrixTag::Linv, display_Linv()}, {MatrixTag::S, display_S()},
            {MatrixTag::M, display_M()}};
}

}  // namespace

TEST_CASE("acceptance") {
    bool all = true;

    all &= criterion(1, "golden match of the thirteen diameter-3 matrices", [] {
        for (const GoldenCase& g : golden_cases()) {
            MatrixName name{g.tag, Orientation::plus, std::nullopt};
            if (tag_takes_t(g.tag)) name.t_argument = t;
            const SqMatrix built = build(name, 3);
            if (auto w = diff_witness(built, g.expected)) {
                std::cout << "    " << tag_name(g.tag) << " mismatch at " << *w
                          << "\n";
                return false;
            }
            // canonical JSON against the checked-in golden corpus
            if (const char* dir = std::getenv("QTET_GOLDEN_DIR")) {
                const std::string path = std::string(dir) + "/d3/" +
                                         tag_name(g.tag) + "_d3.json";
                std::ifstream in(path);
                if (!in) {
                    std::cout << "    missing golden file " << path << "\n";
                    return false;
                }
                std::string content((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
                if (content != matrix_to_json(built).dump(2) + "\n") {
                    std::cout << "    golden file drift: " << path << "\n";
                    return false;
                }
            }
        }
        return true;
    });

    all &= criterion(2, "defining relations, symbolic to d=5 and numeric to d=16",
                     [] {
                         for (int d = 1; d <= 5; ++d) {
                             const auto rep = verify_boxtimes(full_representation(
                                 make_eval_module(d), basis(0, 1, 2, 3)));
                             if (!report_ok(rep, "symbolic")) return false;
                         }
                         const Scalar qv(rat(3, 2)), tv(rat(5, 7));
                         for (int d = 1; d <= 16; ++d) {
                             const auto rep = verify_boxtimes(full_representation(
                                 make_eval_module(d, tv, unit_free7(), qv),
                                 basis(0, 1, 2, 3)));
                             if (!report_ok(rep, "numeric")) return false;
                         }
                         return true;
                     });

    all &= criterion(3, "all 24 bases and transition consistency, d=1..3 symbolic",
                     [] {
                         for (int d = 1; d <= 3; ++d) {
                             const EvalModule m = make_eval_module(d);
                             for (const auto& b : all_bases())
                                 if (!report_ok(
                                         verify_boxtimes(full_representation(m, b)),
                                         b.str().c_str()))
                                     return false;
                             if (!report_ok(verify_transition_consistency(m),
                                            "transitions"))
                                 return false;
                         }
                         return true;
                     });

    all &= criterion(4, "casimir image identities, d=1..4 symbolic", [] {
        for (int d = 1; d <= 4; ++d)
            if (!report_ok(upsilon_suite(make_eval_module(d)), "upsilon")) return false;
        return true;
    });

    all &= criterion(5, "parameter and appendix identity families, d=1..4 symbolic",
                     [] {
                         for (int d = 1; d <= 4; ++d) {
                             const EvalModule m = make_eval_module(d);
                             if (!report_ok(askey_wilson_suite(m), "askey-wilson"))
                                 return false;
                             if (!report_ok(identity_suite_appendix2(m), "appendix"))
                                 return false;
                         }
                         return true;
                     });

    all &= criterion(6, "exchanger table, square, conjugation and scalars, d=1..4",
                     [] {
                         for (int d = 1; d <= 4; ++d)
                             if (!report_ok(verify_exchanger(make_eval_module(d)),
                                            "exchanger"))
                                 return false;
                         return true;
                     });

    all &= criterion(7, "pairing relations, symbolic d=1..4 and numeric d=1..12", [] {
        for (int d = 1; d <= 4; ++d) {
            const PairingTable p = derive_pairing(unit_free7(), d, t);
            if (!report_ok(check_pairing_relations(p, d, t), "symbolic")) return false;
        }
        const Scalar qv(rat(3, 2)), tv(rat(5, 7));
        for (int d = 1; d <= 12; ++d) {
            const PairingTable p = derive_pairing(unit_free7(), d, tv, qv);
            if (!report_ok(check_pairing_relations(p, d, tv, qv), "numeric"))
                return false;
        }
        return true;
    });

    all &= criterion(8, "leonard pair constructions at d=3, symbolic in a, b, c", [] {
        const FeasibleSeq s{Scalar::variable(Var::a), Scalar::variable(Var::b),
                            Scalar::variable(Var::c), 3, sym_q()};
        const LeonardBuild compact = compact_basis(s);
        if (!report_ok(compact.report, "compact")) return false;

        // the closed diameter-3 display of the compact pair
        const Scalar a = s.a, b = s.b, c = s.c;
        SqMatrix expect_a(4), expect_b(4);
        const Scalar pia = a + a.inv(), pib = b + b.inv();
        expect_a.at(0, 0) = pia * q.pow(3);
        expect_a.at(0, 1) = c * (Scalar(1) - q.pow(6));
        expect_a.at(1, 0) = c.inv() * (Scalar(1) - q.pow(-2));
        expect_a.at(1, 1) = pia * q;
        expect_a.at(1, 2) = c * (Scalar(1) - q.pow(4));
        expect_a.at(2, 1) = c.inv() * (Scalar(1) - q.pow(-4));
        expect_a.at(2, 2) = pia * q.inv();
        expect_a.at(2, 3) = c * (Scalar(1) - q.pow(2));
        expect_a.at(3, 2) = c.inv() * (Scalar(1) - q.pow(-6));
        expect_a.at(3, 3) = pia * q.pow(-3);
        expect_b.at(0, 0) = pib * q.pow(-3);
        expect_b.at(0, 1) = q.pow(4) * (Scalar(1) - q.pow(-6));
        expect_b.at(1, 0) = q.pow(-4) * (Scalar(1) - q.pow(2));
        expect_b.at(1, 1) = pib * q.inv();
        expect_b.at(1, 2) = q.pow(4) * (Scalar(1) - q.pow(-4));
        expect_b.at(2, 1) = q.pow(-4) * (Scalar(1) - q.pow(4));
        expect_b.at(2, 2) = pib * q;
        expect_b.at(2, 3) = q.pow(4) * (Scalar(1) - q.pow(-2));
        expect_b.at(3, 2) = q.pow(-4) * (Scalar(1) - q.pow(6));
        expect_b.at(3, 3) = pib * q.pow(3);
        if (auto w = diff_witness(compact.real.A, expect_a)) {
            std::cout << "    compact A display mismatch at " << *w << "\n";
            return false;
        }
        if (auto w = diff_witness(compact.real.B, expect_b)) {
            std::cout << "    compact B display mismatch at " << *w << "\n";
            return false;
        }

        const LeonardBuild split = build_leonard_on_Vd(s);
        if (!report_ok(split.report, "split")) return false;
        const LeonardBuild box = boxtimes_realization(s);
        if (!report_ok(box.report, "boxtimes")) return false;
        return true;
    });

    all &= criterion(9, "twist and duality laws, d=1..4 symbolic", [] {
        for (int d = 1; d <= 4; ++d) {
            const GeneratorAssignment g =
                full_representation(make_eval_module(d), basis(0, 1, 2, 3));
            if (!extract_t(apply_rho(g)).eq(t.inv())) return false;
            if (!extract_t(apply_rho(apply_rho(g))).eq(t)) return false;
            const GeneratorAssignment dual = dual_assignment(g);
            if (!report_ok(verify_boxtimes(dual), "dual")) return false;
            if (!extract_t(dual).eq(t)) return false;
        }
        return true;
    });

    all &= criterion(10, "eigenflag containment for all 24 bases at d=3", [] {
        const EvalModule m = make_eval_module(3);
        for (const auto& b : all_bases())
            if (!report_ok(shape_check(m, b), b.str().c_str())) return false;
        return true;
    });

    CHECK(all);
}
