// command-line front end: JSON descriptors in, JSON/DOT reports out
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <functional>
#include <sstream>

#include "nichols/dynkin.hpp"
#include "nichols/json_io.hpp"
#include "nichols/oracle.hpp"

namespace {

using nichols::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nichols::DescriptorError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw nichols::DescriptorError("malformed JSON in " + path + ": " + e.what());
    }
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw nichols::DescriptorError("cannot write " + out_path);
    out << j.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw nichols::DescriptorError("cannot write " + out_path);
    out << text;
}

struct CocyclesArgs {
    std::string group_path;
    bool enumerate = false;
    bool verify = false;
    bool abelian = false;
    bool table = false;
    std::string out;
};

int run_cocycles(const CocyclesArgs& args) {
    const auto g = nichols::group_from_json(load_json(args.group_path));
    Json rows = Json::array();
    std::ostringstream text;
    for (const auto& phi : nichols::enumerate_cocycles(g)) {
        Json row = nichols::cocycle_to_json(phi);
        if (args.verify) row["cocycle_identity"] = nichols::verify_3cocycle(phi);
        if (args.abelian) row["abelian"] = nichols::is_abelian(phi);
        if (args.table) {
            text << row["c"].dump() << " " << row["c2"].dump() << " " << row["c3"].dump();
            if (args.verify) text << " identity=" << (row["cocycle_identity"].get<bool>() ? "ok" : "FAIL");
            if (args.abelian) text << " abelian=" << (row["abelian"].get<bool>() ? "yes" : "no");
            text << "\n";
        }
        rows.push_back(std::move(row));
    }
    if (args.table) {
        emit_text(text.str(), args.out);
    } else {
        Json out{{"group", nichols::group_to_json(g)}, {"count", rows.size()}, {"rows", std::move(rows)}};
        emit(out, args.out);
    }
    return kExitOk;
}

nichols::SimpleYDSpec simple_spec_from_json(const nichols::FinAbGroup& g, const Json& j) {
    nichols::SimpleYDSpec spec;
    spec.degree = nichols::element_from_json(g, j.at("degree"));
    if (!j.contains("context") || !j["context"].is_array())
        throw nichols::DescriptorError("simple module spec needs a context generator list");
    for (const auto& c : j["context"]) spec.context.push_back(nichols::element_from_json(g, c));
    if (j.contains("alpha")) spec.alpha = nichols::phase_from_json(j["alpha"]);
    if (j.contains("beta")) spec.beta = nichols::phase_from_json(j["beta"]);
    if (j.contains("gamma")) spec.gamma = nichols::phase_from_json(j["gamma"]);
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with twisted Yetter-Drinfeld modules and Nichols algebras"};
    app.require_subcommand(1);

    // group
    std::string group_in, group_out;
    bool group_hat = false;
    auto* cmd_group = app.add_subcommand("group", "inspect a group descriptor");
    cmd_group->add_option("--in", group_in, "group descriptor JSON")->required();
    cmd_group->add_flag("--hat", group_hat, "include the squared-order auxiliary group");
    cmd_group->add_option("--out", group_out, "output path (default stdout)");

    // cocycles
    CocyclesArgs cocycles_args;
    auto* cmd_cocycles = app.add_subcommand("cocycles", "enumerate representative 3-cocycles");
    cmd_cocycles->add_option("--group", cocycles_args.group_path, "group descriptor JSON")->required();
    cmd_cocycles->add_flag("--enumerate", cocycles_args.enumerate, "list all representatives");
    cmd_cocycles->add_flag("--verify", cocycles_args.verify, "check the cocycle identities");
    cmd_cocycles->add_flag("--abelian", cocycles_args.abelian, "classify abelianness");
    cmd_cocycles->add_flag("--table", cocycles_args.table, "human-readable table instead of JSON");
    cmd_cocycles->add_option("--out", cocycles_args.out, "output path");

    // module simple
    std::string msimple_in, msimple_out;
    auto* cmd_module = app.add_subcommand("module", "build module descriptors");
    auto* cmd_msimple = cmd_module->add_subcommand("simple", "simple module from structure constants");
    cmd_msimple->add_option("--in", msimple_in, "spec JSON {cocycle, degree, context, alpha?, beta?, gamma?}")
        ->required();
    cmd_msimple->add_option("--out", msimple_out, "output path");

    // module sum
    std::vector<std::string> msum_in;
    std::string msum_out;
    auto* cmd_msum = cmd_module->add_subcommand("sum", "direct sum of module descriptors");
    cmd_msum->add_option("--in", msum_in, "module descriptor JSON files")->required()->expected(-2);
    cmd_msum->add_option("--out", msum_out, "output path");

    // twist solve-j
    std::string solvej_cocycle, solvej_out;
    bool solvej_direct = false;
    auto* cmd_twist = app.add_subcommand("twist", "2-cochain twisting");
    auto* cmd_solvej = cmd_twist->add_subcommand("solve-j", "solve dJ = pullback of the cocycle on the doubled group");
    cmd_solvej->add_option("--cocycle", solvej_cocycle, "cocycle descriptor JSON")->required();
    cmd_solvej->add_flag("--direct", solvej_direct, "solve dJ = cocycle on its own group instead");
    cmd_solvej->add_option("--out", solvej_out, "output path");

    // twist apply
    std::string tapply_module, tapply_cochain, tapply_out;
    bool tapply_inverse = false;
    auto* cmd_tapply = cmd_twist->add_subcommand("apply", "twist a module by a 2-cochain");
    cmd_tapply->add_option("--module", tapply_module, "module descriptor JSON")->required();
    cmd_tapply->add_option("--cochain", tapply_cochain, "cochain descriptor JSON")->required();
    cmd_tapply->add_flag("--inverse", tapply_inverse, "twist by the inverse cochain");
    cmd_tapply->add_option("--out", tapply_out, "output path");

    // change-base
    std::string cbase_module, cbase_out;
    auto* cmd_cbase = app.add_subcommand("change-base", "re-house a module over the doubled group");
    cmd_cbase->add_option("--module", cbase_module, "module descriptor JSON")->required();
    cmd_cbase->add_option("--out", cbase_out, "output path");

    // classify
    std::string classify_module, classify_out, classify_dot;
    nichols::RootSystemCaps caps;
    auto* cmd_classify = app.add_subcommand("classify", "finite-type decision for a module");
    cmd_classify->add_option("--module", classify_module, "module descriptor JSON")->required();
    cmd_classify->add_option("--max-objects", caps.max_objects, "exploration cap on reflected matrices");
    cmd_classify->add_option("--max-roots", caps.max_roots, "cap on accumulated positive roots");
    cmd_classify->add_option("--dot", classify_dot, "also write the Dynkin diagram in DOT form");
    cmd_classify->add_option("--out", classify_out, "output path");

    // oracle
    std::string oracle_module, oracle_out, oracle_relations;
    int oracle_maxdeg = 3;
    std::int64_t oracle_budget = 10000;
    bool oracle_dump = false;
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force graded dimensions and relation checks");
    cmd_oracle->add_option("--module", oracle_module, "module descriptor JSON")->required();
    cmd_oracle->add_option("--max-degree", oracle_maxdeg, "largest tensor degree");
    cmd_oracle->add_option("--relations", oracle_relations, "relation file JSON");
    cmd_oracle->add_option("--budget", oracle_budget, "largest admissible number of basis tensors");
    cmd_oracle->add_flag("--dump-matrices", oracle_dump, "include sparse symmetrizer triplets");
    cmd_oracle->add_option("--out", oracle_out, "output path");

    // diagram
    std::string diagram_module, diagram_out;
    auto* cmd_diagram = app.add_subcommand("diagram", "generalized Dynkin diagram in DOT form");
    cmd_diagram->add_option("--module", diagram_module, "module descriptor JSON")->required();
    cmd_diagram->add_option("--out", diagram_out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (cmd_group->parsed()) {
            const auto g = nichols::group_from_json(load_json(group_in));
            Json out{{"group", nichols::group_to_json(g)},
                     {"order", g.order()},
                     {"exponent", g.exponent()},
                     {"rank", g.rank()}};
            if (group_hat) {
                const auto hat = nichols::hat_group(g);
                out["hat"] = nichols::group_to_json(hat.hat);
            }
            emit(out, group_out);
            return kExitOk;
        }
        if (cmd_cocycles->parsed()) return run_cocycles(cocycles_args);
        if (cmd_msimple->parsed()) {
            const auto j = load_json(msimple_in);
            auto phi = nichols::cocycle_from_json(j.at("cocycle"));
            const auto spec = simple_spec_from_json(phi->group(), j);
            try {
                const auto mod = nichols::make_simple(phi, spec);
                emit(nichols::module_to_json(mod), msimple_out);
            } catch (const std::invalid_argument& e) {
                throw nichols::DescriptorError(e.what());
            }
            return kExitOk;
        }
        if (cmd_msum->parsed()) {
            std::optional<nichols::YDModule> acc;
            for (const auto& path : msum_in) {
                auto m = nichols::module_from_json(load_json(path));
                if (!acc)
                    acc = std::move(m);
                else {
                    try {
                        acc = nichols::YDModule::direct_sum(*acc, m);
                    } catch (const std::invalid_argument& e) {
                        throw nichols::DescriptorError(e.what());
                    }
                }
            }
            emit(nichols::module_to_json(*acc), msum_out);
            return kExitOk;
        }
        if (cmd_solvej->parsed()) {
            auto phi = nichols::cocycle_from_json(load_json(solvej_cocycle));
            std::optional<nichols::Cochain2> j;
            if (solvej_direct) {
                j = nichols::solve_coboundary(*phi);
            } else {
                const auto hat = nichols::hat_group(phi->group());
                nichols::PullbackCocycle lifted(hat.pi, phi);
                j = nichols::solve_coboundary(lifted);
            }
            if (!j) throw nichols::DescriptorError("not a coboundary");
            emit(nichols::cochain_to_json(*j), solvej_out);
            return kExitOk;
        }
        if (cmd_tapply->parsed()) {
            auto mod = nichols::module_from_json(load_json(tapply_module));
            auto j = nichols::cochain_from_json(load_json(tapply_cochain));
            if (tapply_inverse) j = j.inverse();
            try {
                emit(nichols::module_to_json(mod.twisted(j)), tapply_out);
            } catch (const std::invalid_argument& e) {
                throw nichols::DescriptorError(e.what());
            }
            return kExitOk;
        }
        if (cmd_cbase->parsed()) {
            auto mod = nichols::module_from_json(load_json(cbase_module));
            const auto hat = nichols::hat_group(mod.group());
            emit(nichols::module_to_json(mod.change_base(hat)), cbase_out);
            return kExitOk;
        }
        if (cmd_classify->parsed()) {
            auto mod = nichols::module_from_json(load_json(classify_module));
            const auto report = nichols::is_finite_type(mod, caps);
            Json out = nichols::report_to_json(report, mod.group());
            out["status"] = report.verdict == nichols::Verdict::Inconclusive ? 1 : 0;
            if (!classify_dot.empty()) {
                if (!report.basis) throw nichols::DescriptorError("no standard basis, no diagram");
                emit_text(nichols::dynkin_diagram(*report.basis).dot(), classify_dot);
            }
            emit(out, classify_out);
            return kExitOk;
        }
        if (cmd_oracle->parsed()) {
            auto mod = nichols::module_from_json(load_json(oracle_module));
            nichols::OracleBudget budget{oracle_budget};
            Json out;
            out["hilbert"] = nichols::hilbert_series_oracle(mod, oracle_maxdeg, budget);
            Json reports = Json::array();
            for (int n = 0; n <= oracle_maxdeg; ++n) {
                const auto r = nichols::graded_dim(mod, n, budget);
                reports.push_back(Json{{"degree", r.degree}, {"rank", r.rank}, {"kernel_dim", r.kernel_dim}});
            }
            out["degrees"] = std::move(reports);
            if (!oracle_relations.empty()) {
                const auto rel = load_json(oracle_relations);
                Json results = Json::array();
                for (const auto& entry : rel.at("relations")) {
                    // relation expression: nested ad / lincomb over basis vectors
                    std::function<nichols::TensorElement(const Json&)> parse_expr =
                        [&](const Json& e) -> nichols::TensorElement {
                        if (e.is_number_integer())
                            return nichols::tensor_basis_element(mod, e.get<int>());
                        const std::string kind = e.at("kind").get<std::string>();
                        if (kind == "ad") {
                            auto x = parse_expr(e.at("x"));
                            auto y = parse_expr(e.at("y"));
                            return nichols::braided_adjoint(mod, x, y);
                        }
                        if (kind == "lincomb") {
                            std::optional<nichols::TensorElement> acc;
                            for (const auto& term : e.at("terms")) {
                                auto t = parse_expr(term.at("expr"));
                                const auto c = nichols::phase_from_json(term.at("phase"));
                                auto scaled = nichols::tensor_scale(
                                    t.coeff.empty() ? nichols::make_cyc_field(1) : t.coeff.begin()->second.field(),
                                    c, t);
                                acc = acc ? nichols::tensor_add(*acc, scaled) : scaled;
                            }
                            if (!acc) throw nichols::DescriptorError("empty lincomb");
                            return *acc;
                        }
                        throw nichols::DescriptorError("unknown relation expression kind \"" + kind + "\"");
                    };
                    auto el = parse_expr(entry.at("expr"));
                    Json r{{"in_ideal", nichols::in_nichols_ideal(mod, el, budget)}};
                    if (entry.contains("name")) r["name"] = entry["name"];
                    results.push_back(std::move(r));
                }
                out["relations"] = std::move(results);
            }
            if (oracle_dump) {
                Json mats = Json::array();
                for (int n = 2; n <= oracle_maxdeg; ++n) {
                    const auto s = nichols::symmetrizer(mod, n, budget);
                    Json triplets = Json::array();
                    for (std::int64_t c = 0; c < s.size; ++c)
                        for (const auto& [r, val] : s.cols[static_cast<std::size_t>(c)])
                            if (!val.is_zero())
                                triplets.push_back(Json::array({r, c, val.str()}));
                    mats.push_back(Json{{"degree", n}, {"entries", std::move(triplets)}});
                }
                out["symmetrizers"] = std::move(mats);
            }
            emit(out, oracle_out);
            return kExitOk;
        }
        if (cmd_diagram->parsed()) {
            auto mod = nichols::module_from_json(load_json(diagram_module));
            const auto sb = nichols::has_standard_basis(mod);
            if (!sb) throw nichols::DescriptorError("module has no standard basis");
            emit_text(nichols::dynkin_diagram(*sb).dot(), diagram_out);
            return kExitOk;
        }
    } catch (const nichols::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const nichols::DescriptorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
