// Command-line front end: construct, verify, extract, link, check-huang, suite.
#include "hq/io.hpp"
#include "hq/suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hq;

namespace {

enum Exit { kOk = 0, kParse = 1, kValidation = 2, kNoLink = 3, kInfeasible = 4 };

struct Failure {
    int code;
    std::string message;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{kParse, "cannot open " + path};
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Failure{kParse, path + ": " + e.what()};
    }
}

template <class F>
auto parsing(F f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw Failure{kParse, e.what()};
    }
}

// Each component replaced by its inverse when that matches the reference;
// c follows the reference at d = 0.
HuangData align(const HuangData& h, const HuangData& ref) {
    auto pick = [](const FieldElement& x, const FieldElement& r) { return x == r ? x : (x.inv() == r ? r : x); };
    HuangData out{pick(h.a, ref.a), pick(h.b, ref.b), h.d == 0 ? ref.c : pick(h.c, ref.c), h.d};
    return out;
}

// Descriptor, or descriptor plus explicit generator matrices under "t".
HqModule load_module(const json& j, Report* relations) {
    ModuleDescriptor d = parsing([&] { return descriptor_from_json(j); });
    if (!j.contains("t")) {
        Validation v = validate_params(d.xtype, d.n, d.k, d.q);
        if (!v.ok()) throw Failure{kValidation, v.first()};
        try {
            return build_module(d.xtype, d.n, d.k, d.q);
        } catch (const DahaError& e) {
            throw Failure{kValidation, e.what()};
        }
    }
    const json& t = j.at("t");
    if (!t.is_array() || t.size() != 4) throw Failure{kParse, "t must list four matrices"};
    std::array<ExactMatrix, 4> g;
    for (int i = 0; i < 4; ++i) g[i] = parsing([&] { return matrix_from_json(t[i]); });
    HqModule given;
    try {
        given = module_from_matrices(HqParams{d.q, d.n, d.k}, d.xtype, g);
    } catch (const DahaError& e) {
        throw Failure{kValidation, e.what()};
    }
    if (given.dim() != static_cast<std::size_t>(d.n) + 1) throw Failure{kValidation, "matrix size is not n+1"};
    Report rel = verify_hq_relations(given);
    if (relations) relations->merge(rel);
    if (!rel.ok()) throw Failure{kValidation, "relation fails: " + rel.failed_names().front()};
    Validation v = validate_params(d.xtype, d.n, d.k, d.q);
    if (!v.ok()) throw Failure{kValidation, v.first()};
    HqModule built;
    try {
        built = build_module(d.xtype, d.n, d.k, d.q);
    } catch (const DahaError& e) {
        throw Failure{kValidation, e.what()};
    }
    for (int i = 0; i < 4; ++i)
        if (built.t[i] != given.t[i]) throw Failure{kValidation, "matrices differ from the module of the descriptor"};
    return built;
}

FieldElement resolve_q(const std::string& flag, const std::vector<json>& files) {
    std::optional<FieldElement> q;
    if (!flag.empty()) q = parsing([&] { return field_from_json(json(flag)); });
    for (const auto& f : files)
        if (f.contains("q")) {
            FieldElement fq = parsing([&] { return field_from_json(f.at("q")); });
            if (q && *q != fq) throw Failure{kParse, "conflicting values of q"};
            q = fq;
        }
    if (!q) throw Failure{kParse, "q is required (--q or a \"q\" field)"};
    if (!is_valid_q(*q)) throw Failure{kValidation, "q must be a rational outside {0, 1, -1}"};
    return *q;
}

json link_case_json(const LinkCase& c) {
    return json{{"case", case_name(c.case_id)},
                {"variant", c.variant},
                {"variant2", c.variant2},
                {"h", to_json(c.h)},
                {"h2", to_json(c.h2)}};
}

json extraction_json(const Extraction& ex) {
    json j;
    j["huang_plus"] = to_json(align(ex.plus.generic, ex.plus.closed));
    j["huang_minus"] = to_json(align(ex.minus.generic, ex.minus.closed));
    j["generic_plus"] = to_json(ex.plus.generic);
    j["generic_minus"] = to_json(ex.minus.generic);
    j["closed_plus"] = to_json(ex.plus.closed);
    j["closed_minus"] = to_json(ex.minus.closed);
    j["report"] = to_json(ex.checks);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-dimensional modules of the universal DAHA of type (C1v, C1) and their Leonard pairs"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("--out", out_path, "write the JSON result here instead of stdout");

    std::string file, file2, qflag, sign_flag;
    bool do_construct = false;
    std::uint64_t seed = 1;
    int max_n = 9;
    std::size_t count = 200;

    auto* construct = app.add_subcommand("construct", "build a module from a descriptor and verify it");
    construct->add_option("descriptor", file, "descriptor JSON")->required();
    auto* verify = app.add_subcommand("verify", "verify relations and identities of a module");
    verify->add_option("module", file, "descriptor or module JSON")->required();
    auto* extract = app.add_subcommand("extract", "Huang data of the Leonard pairs on the t0-eigenspaces");
    extract->add_option("module", file, "descriptor or module JSON")->required();
    auto* link = app.add_subcommand("link", "decide whether two Leonard pairs are linked");
    link->add_option("huang", file, "Huang data JSON")->required();
    link->add_option("huang2", file2, "Huang data JSON")->required();
    link->add_option("--q", qflag, "q, unless given in the files");
    link->add_flag("--construct", do_construct, "also build the linking module");
    link->add_option("--sign", sign_flag, "square root choice for k0 in the DS case")
        ->check(CLI::IsMember({"plus", "minus"}));
    auto* check = app.add_subcommand("check-huang", "admissibility and round trip of Huang data");
    check->add_option("huang", file, "Huang data JSON")->required();
    check->add_option("--q", qflag, "q, unless given in the file");
    auto* suite = app.add_subcommand("suite", "randomized property battery over all X-types");
    suite->add_option("--seed", seed, "random seed");
    suite->add_option("--max-n", max_n, "largest n")->check(CLI::Range(0, 20));
    suite->add_option("--count", count, "number of instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    auto start = std::chrono::steady_clock::now();
    json result;
    std::vector<std::string> args(argv + 1, argv + argc);
    json echo = json::array();
    for (const auto& a : args) echo.push_back(a);
    result["command"] = echo;
    int code = kOk;

    try {
        if (*construct) {
            HqModule m = load_module(read_json(file), nullptr);
            Report rep = construction_checks(m);
            result["module"] = module_to_json(m);
            result["report"] = to_json(rep);
            if (!rep.ok()) code = kValidation;
        } else if (*verify) {
            Report rep;
            HqModule m = load_module(read_json(file), &rep);
            rep.merge(construction_checks(m));
            result["report"] = to_json(rep);
            if (!rep.ok()) code = kValidation;
        } else if (*extract) {
            HqModule m = load_module(read_json(file), nullptr);
            Feasibility f = is_feasible(m);
            result["feasible"] = f.feasible;
            if (!f.feasible) throw Failure{kInfeasible, f.failed_clause};
            Extraction ex = restricted_leonard_pairs(m);
            UBasis ub = u_basis(m);
            json e = extraction_json(ex);
            e["u_basis_report"] = to_json(ub.checks);
            result["extraction"] = e;
            if (!ex.checks.ok() || !ub.checks.ok()) code = kValidation;
        } else if (*link) {
            json j1 = read_json(file), j2 = read_json(file2);
            FieldElement q = resolve_q(qflag, {j1, j2});
            HuangData h = parsing([&] { return huang_from_json(j1); });
            HuangData h2 = parsing([&] { return huang_from_json(j2); });
            if (!check_huang_admissible(h, q) || !check_huang_admissible(h2, q))
                throw Failure{kValidation, "inadmissible Huang data"};
            auto cases = link_check(h, h2, q);
            json cj = json::array();
            for (const auto& c : cases) cj.push_back(link_case_json(c));
            result["cases"] = cj;
            if (cases.empty()) throw Failure{kNoLink, "not linked"};
            int best = 8;
            for (const auto& c : cases) best = std::min(best, c.case_id);
            result["case"] = case_name(best);
            if (do_construct) {
                RootSign s = sign_flag == "plus" ? RootSign::Plus : sign_flag == "minus" ? RootSign::Minus : RootSign::Default;
                try {
                    LinkResult lr = link_construct(h, h2, q, s);
                    result["xtype"] = to_string(lr.xtype);
                    result["exchanged"] = lr.exchanged;
                    result["used"] = link_case_json(lr.used);
                    result["module"] = module_to_json(lr.module);
                    result["extraction"] = extraction_json(lr.extraction);
                    if (!lr.extraction.checks.ok()) code = kValidation;
                } catch (const DahaError& e) {
                    throw Failure{kNoLink, e.what()};
                }
            }
        } else if (*check) {
            json j = read_json(file);
            FieldElement q = resolve_q(qflag, {j});
            HuangData h = parsing([&] { return huang_from_json(j); });
            bool adm = check_huang_admissible(h, q);
            result["admissible"] = adm;
            if (!adm) throw Failure{kValidation, "inadmissible Huang data"};
            Report rep;
            LeonardPair p = build_pair_from_huang(h, q);
            auto arrays = parameter_arrays(p);
            // the array in the ordering the Huang data induces
            Seq th = qracah_ladder(h.a, h.d, q), ts = qracah_ladder(h.b, h.d, q);
            std::size_t which = 0;
            for (std::size_t i = 0; i < arrays.size(); ++i)
                if (arrays[i].theta == th && arrays[i].theta_star == ts) which = i;
            rep.add("Huang ordering is standard", arrays[which].theta == th && arrays[which].theta_star == ts);
            rep.add("split sequences match the closed forms",
                    arrays[which].phi == huang_phi(h, q) && arrays[which].phi2 == huang_phi2(h, q));
            auto back = huang_data_from_array(arrays[0], q);
            rep.add("round trip", back && huang_equivalent(*back, h));
            ExactMatrix ae = askey_wilson_third(p, h, q);
            auto aw = aw_relations_hold(p.A, p.Astar, ae, h, q);
            rep.add("Askey-Wilson relation 1", aw[0]);
            rep.add("Askey-Wilson relation 2", aw[1]);
            rep.add("Askey-Wilson relation 3", aw[2]);
            result["theta"] = to_json(arrays[which].theta);
            result["theta_star"] = to_json(arrays[which].theta_star);
            result["phi"] = to_json(arrays[which].phi);
            result["phi2"] = to_json(arrays[which].phi2);
            result["A"] = to_json(p.A);
            result["Astar"] = to_json(p.Astar);
            result["report"] = to_json(rep);
            if (!rep.ok()) code = kValidation;
        } else if (*suite) {
            SuiteResult r = run_suite(seed, max_n, count);
            json inst = json::array();
            for (const auto& i : r.instances) {
                json e{{"instance", i.label}, {"feasible", i.feasible}, {"checks", i.report.checks.size()},
                       {"failures", i.report.failures()}};
                if (!i.infeasible_clause.empty()) e["infeasible_clause"] = i.infeasible_clause;
                if (!i.report.ok()) e["report"] = to_json(i.report);
                inst.push_back(e);
            }
            result["instances"] = inst;
            result["summary"] = json{{"instances", r.instances.size()},
                                     {"feasible", r.feasible},
                                     {"checks", r.checks},
                                     {"failures", r.failures}};
            if (r.failures) code = kValidation;
        }
    } catch (const Failure& f) {
        code = f.code;
        result["error"] = f.message;
    } catch (const std::exception& e) {
        code = kValidation;
        result["error"] = e.what();
    }
    result["exit_code"] = code;
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    result["wall_time_ms"] = ms;

    std::string text = result.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream o(out_path);
        if (!o) {
            std::cerr << "cannot write " << out_path << "\n";
            return kParse;
        }
        o << text;
    }
    if (code != kOk && result.contains("error")) std::cerr << "error: " << result["error"].get<std::string>() << "\n";
    return code;
}
