/**
 * @file qtet.cpp
 * @brief Command line surface: matrix emission, representation queries,
 *        verification suites, Leonard-pair construction and golden export.
 *
 * Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
 * 3 degenerate parameters.
 */
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <thread>

#include "qtet/json_io.hpp"
#include "qtet/leonard.hpp"

using namespace qtet;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

int symbolic_cap() {
    if (const char* env = std::getenv("QTET_MAX_SYMBOLIC_D")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (...) {
        }
    }
    return 5;
}

struct ParamConfig {
    std::string t_spec = "sym";
    std::string q_spec = "sym";
    std::vector<std::string> free7_spec;
    unsigned seed = 12345;
    int points = 1;
};

// A fully resolved parameter cell for one diameter.
struct Cell {
    std::string label;
    Scalar q;
    Scalar t;
};

Scalar parse_param(const std::string& spec, Var v) {
    if (spec == "sym") return Scalar::variable(v);
    return Scalar(rat_parse(spec));
}

Free7 parse_free7(const std::vector<std::string>& spec) {
    if (spec.empty()) return unit_free7();
    if (spec.size() != 7)
        throw CLI::ValidationError("--free7 needs exactly seven values");
    Free7 out;
    for (int i = 0; i < 7; ++i) out[i] = Scalar(rat_parse(spec[i]));
    return out;
}

// Guard-checked random rational of small height.
Rat random_point(std::mt19937& rng, const Rat& q_val, int d) {
    std::uniform_int_distribution<int> num(2, 19);
    std::uniform_int_distribution<int> den(2, 19);
    for (;;) {
        Rat cand(num(rng), den(rng));
        cand.canonicalize();
        if (cand == 1 || cand == 0) continue;
        bool excluded = false;
        for (int n = 1; n <= d && !excluded; ++n)
            if (cand == rat_pow(q_val, d - 2 * n + 1)) excluded = true;
        if (!excluded) return cand;
    }
}

// The (d, parameter) cells a suite runs over; symbolic t falls back to
// checked numeric points above the symbolic cap.
std::vector<Cell> make_cells(int d, const ParamConfig& pc) {
    std::vector<Cell> cells;
    const Scalar q = parse_param(pc.q_spec, Var::q);
    if (pc.t_spec == "sym" && d <= symbolic_cap()) {
        cells.push_back({"d=" + std::to_string(d) + " symbolic", q, sym_t()});
        return cells;
    }
    const Rat q_val =
        pc.q_spec == "sym" ? rat(3, 2) : rat_parse(pc.q_spec);
    const Scalar q_num(q_val);
    Rat t0 = pc.t_spec == "sym" ? rat(5, 7) : rat_parse(pc.t_spec);
    SpecPoint guard;
    guard.assignments[Var::q] = q_val;
    guard.assignments[Var::t] = t0;
    guard.validate(d);
    cells.push_back({"d=" + std::to_string(d) + " at q=" + rat_str(q_val) +
                         ", t=" + rat_str(t0),
                     q_num, Scalar(t0)});
    std::mt19937 rng(pc.seed + static_cast<unsigned>(d));
    for (int extra = 1; extra < pc.points; ++extra) {
        const Rat tv = random_point(rng, q_val, d);
        cells.push_back({"d=" + std::to_string(d) + " at q=" + rat_str(q_val) +
                             ", t=" + rat_str(tv),
                         q_num, Scalar(tv)});
    }
    return cells;
}

VerifyReport run_suite_cell(const std::string& suite, int d, const Cell& cell,
                            const Free7& free7) {
    VerifyReport rep;
    auto module = [&] { return make_eval_module(d, cell.t, free7, cell.q); };
    if (suite == "equitable") {
        const UqTriple tri{mat_E(cell.q, d), mat_K(cell.q, d),
                           mat_K(cell.q.inv(), d), conj_Z(mat_E(cell.q.inv(), d))};
        rep = verify_equitable(tri, cell.q);
    } else if (suite == "boxtimes") {
        rep = verify_boxtimes(full_representation(module(), basis(0, 1, 2, 3)));
    } else if (suite == "upsilon") {
        rep = upsilon_suite(module());
    } else if (suite == "aw") {
        rep = askey_wilson_suite(module());
    } else if (suite == "transitions") {
        const EvalModule m = module();
        rep = verify_transition_consistency(m);
        rep.merge(verify_corner_components(m));
    } else if (suite == "exchanger") {
        rep = verify_exchanger(module());
    } else if (suite == "shapes") {
        const EvalModule m = module();
        for (const auto& b : all_bases()) rep.merge(shape_check(m, b));
    } else if (suite == "appendix2") {
        rep = identity_suite_appendix2(module());
    } else if (suite == "pairing") {
        const EvalModule m = module();
        rep = check_pairing_relations(m.pairing, d, cell.t, cell.q);
    } else if (suite == "bases24") {
        const EvalModule m = module();
        for (const auto& b : all_bases()) {
            VerifyReport r = verify_boxtimes(full_representation(m, b));
            rep.add("all relations in basis " + b.str(), r.all_pass(),
                    r.first_failure());
        }
    } else {
        throw CLI::ValidationError("unknown suite: " + suite);
    }
    return rep;
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    os << j.dump(2) << "\n";
}

int wrap_errors(const std::function<int()>& body) {
    try {
        return body();
    } catch (const degenerate_parameter& e) {
        std::cerr << "degenerate parameters: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const zero_divide& e) {
        std::cerr << "degenerate parameters: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFail;
    }
}

std::vector<std::pair<MatrixTag, MatrixName>> golden_set(const Scalar& t) {
    std::vector<std::pair<MatrixTag, MatrixName>> set;
    for (MatrixTag tag :
         {MatrixTag::Z, MatrixTag::K, MatrixTag::D, MatrixTag::CalD, MatrixTag::T,
          MatrixTag::E, MatrixTag::Einv, MatrixTag::F, MatrixTag::G, MatrixTag::L,
          MatrixTag::Linv, MatrixTag::S, MatrixTag::M}) {
        MatrixName name{tag, Orientation::plus, std::nullopt};
        if (tag_takes_t(tag)) name.t_argument = t;
        set.emplace_back(tag, name);
    }
    return set;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact evaluation-module and Leonard-pair toolkit"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write JSON output to this file");

    // ---- matrix ----
    auto* cmd_matrix = app.add_subcommand("matrix", "emit one standard matrix");
    std::string mx_name, mx_qdir = "q", mx_t = "sym";
    int mx_d = 3;
    cmd_matrix->add_option("--name", mx_name, "Z|K|E|Einv|F|G|L|Linv|S|M|D|CalD|T")
        ->required();
    cmd_matrix->add_option("--qdir", mx_qdir, "q or qinv");
    cmd_matrix->add_option("--d", mx_d, "diameter")->check(CLI::Range(1, 64));
    cmd_matrix->add_option("--t", mx_t, "sym or a rational like 5/7");

    // ---- rep ----
    auto* cmd_rep = app.add_subcommand("rep", "matrix of a generator in a basis");
    std::string rp_basis = "0,1,2,3", rp_gen = "0,1", rp_t = "sym";
    int rp_d = 3;
    cmd_rep->add_option("--d", rp_d)->check(CLI::Range(1, 64));
    cmd_rep->add_option("--t", rp_t);
    cmd_rep->add_option("--basis", rp_basis, "comma list, e.g. 0,1,2,3");
    cmd_rep->add_option("--gen", rp_gen, "generator i,j");

    // ---- transition ----
    auto* cmd_trans = app.add_subcommand("transition", "transition matrix");
    std::string tr_from = "0,1,2,3", tr_to = "1,0,2,3", tr_t = "sym";
    int tr_d = 3;
    std::vector<std::string> tr_free7;
    cmd_trans->add_option("--d", tr_d)->check(CLI::Range(1, 64));
    cmd_trans->add_option("--t", tr_t);
    cmd_trans->add_option("--from", tr_from)->required();
    cmd_trans->add_option("--to", tr_to)->required();
    cmd_trans->add_option("--free7", tr_free7)->delimiter(',');

    // ---- exchanger ----
    auto* cmd_exch = app.add_subcommand("exchanger", "standard exchanger matrix");
    std::string ex_basis = "0,2,1,3", ex_t = "sym";
    int ex_d = 3;
    std::vector<std::string> ex_free7;
    cmd_exch->add_option("--d", ex_d)->check(CLI::Range(1, 64));
    cmd_exch->add_option("--t", ex_t);
    cmd_exch->add_option("--basis", ex_basis);
    cmd_exch->add_option("--free7", ex_free7)->delimiter(',');

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string vf_suite, vf_drange;
    ParamConfig vf_params;
    int vf_d = 0;
    cmd_verify
        ->add_option("--suite", vf_suite,
                     "equitable|boxtimes|upsilon|aw|transitions|exchanger|shapes|"
                     "appendix2|pairing|bases24|all")
        ->required();
    cmd_verify->add_option("--d", vf_d)->check(CLI::Range(1, 64));
    cmd_verify->add_option("--d-range", vf_drange, "e.g. 1..4");
    cmd_verify->add_option("--t", vf_params.t_spec);
    cmd_verify->add_option("--q", vf_params.q_spec);
    cmd_verify->add_option("--free7", vf_params.free7_spec)->delimiter(',');
    cmd_verify->add_option("--seed", vf_params.seed);
    cmd_verify->add_option("--points", vf_params.points,
                           "numeric points per diameter")
        ->check(CLI::Range(1, 64));

    // ---- leonard ----
    auto* cmd_leo = app.add_subcommand("leonard", "Leonard pair construction");
    std::string leo_a = "sym", leo_b = "sym", leo_c = "sym", leo_form = "compact",
                leo_q = "sym";
    int leo_d = 3;
    cmd_leo->add_option("--a", leo_a);
    cmd_leo->add_option("--b", leo_b);
    cmd_leo->add_option("--c", leo_c);
    cmd_leo->add_option("--q", leo_q);
    cmd_leo->add_option("--d", leo_d)->check(CLI::Range(1, 64));
    cmd_leo->add_option("--form", leo_form, "compact|aas|aas2|boxtimes");
    std::string leo_emit = "json";
    cmd_leo->add_option("--emit", leo_emit, "json");

    auto* cmd_leo_verify = cmd_leo->add_subcommand("verify", "Leonard-pair suites");
    std::string lv_drange = "1..3";
    bool lv_symbolic = false;
    cmd_leo_verify->add_option("--d-range", lv_drange);
    cmd_leo_verify->add_flag("--symbolic", lv_symbolic);

    // ---- export ----
    auto* cmd_export = app.add_subcommand("export", "golden matrix corpus");
    int xp_d = 3;
    std::string xp_dir = "golden";
    cmd_export->add_option("--d", xp_d)->check(CLI::Range(1, 8));
    cmd_export->add_option("--dir", xp_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    return wrap_errors([&]() -> int {
        if (*cmd_matrix) {
            const auto tag = tag_from_name(mx_name);
            if (!tag) throw CLI::ValidationError("unknown matrix name: " + mx_name);
            if (mx_qdir != "q" && mx_qdir != "qinv")
                throw CLI::ValidationError("--qdir must be q or qinv");
            MatrixName name{*tag,
                            mx_qdir == "q" ? Orientation::plus : Orientation::minus,
                            std::nullopt};
            if (tag_takes_t(*tag)) name.t_argument = parse_param(mx_t, Var::t);
            emit(matrix_to_json(build(name, mx_d)), out_path);
            return kExitPass;
        }
        if (*cmd_rep) {
            const EvalModule m =
                make_eval_module(rp_d, parse_param(rp_t, Var::t));
            int gi = 0, gj = 0;
            if (std::sscanf(rp_gen.c_str(), "%d,%d", &gi, &gj) != 2)
                throw CLI::ValidationError("--gen must be i,j");
            emit(matrix_to_json(rep_matrix(m, parse_basis(rp_basis), gen(gi, gj))),
                 out_path);
            return kExitPass;
        }
        if (*cmd_trans) {
            const EvalModule m = make_eval_module(
                tr_d, parse_param(tr_t, Var::t), parse_free7(tr_free7));
            Json j = matrix_to_json(
                transition(m, parse_basis(tr_from), parse_basis(tr_to)));
            j["pairing"] = pairing_to_json(m.pairing);
            emit(j, out_path);
            return kExitPass;
        }
        if (*cmd_exch) {
            const EvalModule m = make_eval_module(
                ex_d, parse_param(ex_t, Var::t), parse_free7(ex_free7));
            emit(matrix_to_json(exchanger_matrix(m, parse_basis(ex_basis))), out_path);
            return kExitPass;
        }
        if (*cmd_verify) {
            int lo = vf_d > 0 ? vf_d : 1;
            int hi = vf_d > 0 ? vf_d : 1;
            if (!vf_drange.empty()) {
                if (std::sscanf(vf_drange.c_str(), "%d..%d", &lo, &hi) != 2 ||
                    lo < 1 || hi < lo || hi > 64)
                    throw CLI::ValidationError("--d-range must be lo..hi");
            }
            const Free7 free7 = parse_free7(vf_params.free7_spec);
            std::vector<std::string> suites;
            if (vf_suite == "all")
                suites = {"equitable", "boxtimes", "upsilon",  "aw",      "transitions",
                          "exchanger", "shapes",   "appendix2", "pairing"};
            else
                suites = {vf_suite};

            struct Task {
                std::string suite;
                int d;
                Cell cell;
            };
            std::vector<Task> tasks;
            for (const std::string& suite : suites)
                for (int d = lo; d <= hi; ++d)
                    for (const Cell& cell : make_cells(d, vf_params))
                        tasks.push_back({suite, d, cell});

            // Bounded fan-out over independent cells; ordered assembly.
            const unsigned pool =
                std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
            std::vector<VerifyReport> results(tasks.size());
            for (std::size_t base = 0; base < tasks.size(); base += pool) {
                std::vector<std::future<VerifyReport>> futs;
                for (std::size_t k = base; k < std::min(tasks.size(), base + pool); ++k)
                    futs.push_back(std::async(std::launch::async, [&, k] {
                        return run_suite_cell(tasks[k].suite, tasks[k].d,
                                              tasks[k].cell, free7);
                    }));
                for (std::size_t k = 0; k < futs.size(); ++k)
                    results[base + k] = futs[k].get();
            }

            Json cells_json = Json::array();
            bool all_ok = true;
            for (std::size_t k = 0; k < tasks.size(); ++k) {
                const bool ok = results[k].all_pass();
                all_ok = all_ok && ok;
                std::cout << (ok ? "[pass] " : "[FAIL] ") << tasks[k].suite << " "
                          << tasks[k].cell.label << " (" << results[k].checks.size()
                          << " checks)";
                if (!ok) std::cout << "  first failure: " << results[k].first_failure();
                std::cout << "\n";
                Json j = report_to_json(tasks[k].suite, results[k]);
                j["cell"] = tasks[k].cell.label;
                cells_json.push_back(std::move(j));
            }
            Json summary;
            summary["schema"] = "qtet/1";
            summary["suite"] = vf_suite;
            summary["seed"] = vf_params.seed;
            summary["pass"] = all_ok;
            summary["cells"] = std::move(cells_json);
            if (!out_path.empty()) emit(summary, out_path);
            return all_ok ? kExitPass : kExitCheckFail;
        }
        if (*cmd_leo) {
            const Scalar qv = parse_param(leo_q, Var::q);
            if (*cmd_leo_verify) {
                int lo = 1, hi = 3;
                if (std::sscanf(lv_drange.c_str(), "%d..%d", &lo, &hi) != 2 ||
                    lo < 1 || hi < lo)
                    throw CLI::ValidationError("--d-range must be lo..hi");
                bool all_ok = true;
                for (int d = lo; d <= hi; ++d) {
                    FeasibleSeq s{Scalar::variable(Var::a), Scalar::variable(Var::b),
                                  Scalar::variable(Var::c), d, qv};
                    if (!lv_symbolic) {
                        s.a = Scalar(rat(5, 3));
                        s.b = Scalar(rat(5, 2));
                        s.c = Scalar(rat(7, 4));
                    }
                    VerifyReport rep = build_leonard_on_Vd(s).report;
                    rep.merge(boxtimes_realization(s).report);
                    rep.merge(compact_basis(s).report);
                    const bool ok = rep.all_pass();
                    all_ok = all_ok && ok;
                    std::cout << (ok ? "[pass] " : "[FAIL] ") << "leonard d=" << d
                              << " (" << rep.checks.size() << " checks)\n";
                }
                return all_ok ? kExitPass : kExitCheckFail;
            }
            FeasibleSeq s{parse_param(leo_a, Var::a), parse_param(leo_b, Var::b),
                          parse_param(leo_c, Var::c), leo_d, qv};
            if (auto v = feasibility_violation(s))
                throw degenerate_parameter("infeasible sequence: " + *v);
            LeonardBuild built;
            if (leo_form == "compact") built = compact_basis(s);
            else if (leo_form == "boxtimes") built = boxtimes_realization(s);
            else if (leo_form == "aas" || leo_form == "aas2") {
                built = build_leonard_on_Vd(s);
                if (leo_form == "aas") {
                    const auto pair = split_pair(parameter_array(s), true);
                    built.real.A = pair.first;
                    built.real.B = pair.second;
                    const Completions comp = z3_completions(pair.first, pair.second, s);
                    built.real.C = comp.C;
                    built.real.C_dual = comp.C_dual;
                    built.real.basis_tag = "split-aas";
                }
            } else {
                throw CLI::ValidationError("unknown form: " + leo_form);
            }
            Json j;
            j["schema"] = "qtet/1";
            j["form"] = built.real.basis_tag;
            j["A"] = matrix_to_json(built.real.A);
            j["B"] = matrix_to_json(built.real.B);
            j["C"] = matrix_to_json(built.real.C);
            j["C_dual"] = matrix_to_json(built.real.C_dual);
            j["construction_checks_pass"] = built.report.all_pass();
            emit(j, out_path);
            return built.report.all_pass() ? kExitPass : kExitCheckFail;
        }
        if (*cmd_export) {
            namespace fs = std::filesystem;
            fs::create_directories(xp_dir);
            for (const auto& [tag, name] : golden_set(sym_t())) {
                const Json j = matrix_to_json(build(name, xp_d));
                std::ofstream os(fs::path(xp_dir) /
                                 (std::string(tag_name(tag)) + "_d" +
                                  std::to_string(xp_d) + ".json"));
                os << j.dump(2) << "\n";
            }
            std::cout << "wrote 13 matrices at diameter " << xp_d << " to " << xp_dir
                      << "\n";
            return kExitPass;
        }
        return kExitUsage;
    });
}
