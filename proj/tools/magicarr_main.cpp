#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "magicarr/analyze.hpp"
#include "magicarr/arkhipov.hpp"
#include "magicarr/homology.hpp"
#include "magicarr/pi1.hpp"
#include "magicarr/primes.hpp"
#include "magicarr/solngroup.hpp"

using namespace magicarr;
using nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonOpts {
    std::string arrangement, realization, operators;
    uint64_t oracle_cap = 4096;
    uint64_t kb_rules = 50'000;
    uint64_t coset_rows = 1'000'000;
    bool strict = false;
    bool human = false;

    ResourceLimits limits() const {
        ResourceLimits l;
        l.kb_max_rules = kb_rules;
        l.coset_rows = coset_rows;
        return l;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_realization = false, bool need_ops = false) {
    cmd->add_option("--arrangement", o.arrangement, "arrangement JSON file")->required();
    auto* r = cmd->add_option("--realization", o.realization, "realization JSON file");
    auto* p = cmd->add_option("--operators", o.operators, "operator assignment JSON file");
    if (need_realization) r->required();
    if (need_ops) p->required();
    cmd->add_option("--oracle-cap", o.oracle_cap, "max assignments for the brute-force oracle");
    cmd->add_option("--kb-rules", o.kb_rules, "Knuth-Bendix rule cap");
    cmd->add_option("--coset-rows", o.coset_rows, "coset table row cap");
    cmd->add_flag("--strict", o.strict, "exit 2 when limits force an undetermined verdict");
    cmd->add_flag("--human", o.human, "text summary instead of JSON");
}

void emit(const ordered_json& j, bool human_flag, const std::string& human_text = "") {
    if (human_flag && !human_text.empty())
        std::cout << human_text;
    else
        std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"magic arrangement analyzer"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* cmd_analyze = app.add_subcommand("analyze", "full pipeline with report");
    add_common(cmd_analyze, o);
    auto* cmd_classical = app.add_subcommand("check-classical", "solve dc = tau over Z_d");
    add_common(cmd_classical, o);
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force classical search");
    add_common(cmd_oracle, o);
    auto* cmd_homology = app.add_subcommand("homology", "H^2 invariant factors");
    add_common(cmd_homology, o);
    int64_t hom_mod = 0;
    cmd_homology->add_option("--mod", hom_mod, "coefficient modulus (default: arrangement d)");
    auto* cmd_realize = app.add_subcommand("realize", "validate a realization");
    add_common(cmd_realize, o, true);
    std::string mode = "topological";
    cmd_realize->add_option("--mode", mode, "topological | commutative");
    auto* cmd_surface = app.add_subcommand("surface", "surface report of a realization");
    add_common(cmd_surface, o, true);
    auto* cmd_pi1 = app.add_subcommand("pi1", "fundamental group presentation");
    add_common(cmd_pi1, o, true);
    std::string basepoint;
    cmd_pi1->add_option("--basepoint", basepoint, "basepoint vertex (default: smallest id)");
    auto* cmd_verify = app.add_subcommand("verify-ops", "verify an operator/quantum realization");
    add_common(cmd_verify, o, false, true);
    auto* cmd_face = app.add_subcommand("face-check", "path-operator identity on every face");
    add_common(cmd_face, o, true, true);
    auto* cmd_sg = app.add_subcommand("solution-group", "export the solution group presentation");
    add_common(cmd_sg, o);
    bool operator_case = false;
    cmd_sg->add_flag("--operator-case", operator_case, "drop the context commutators");
    auto* cmd_lift = app.add_subcommand("lift-check", "theta lift test in the solution group");
    add_common(cmd_lift, o);
    auto* cmd_planar = app.add_subcommand("planarity", "intersection graph planarity + Theorem A");
    add_common(cmd_planar, o);
    auto* cmd_decomp = app.add_subcommand("decompose", "prime decomposition of the constraint system");
    add_common(cmd_decomp, o);

    CLI11_PARSE(app, argc, argv);

    try {
        Arrangement arr = parse_arrangement(slurp(o.arrangement));
        AnalyzeOptions opt;
        opt.oracle_cap = o.oracle_cap;
        opt.limits = o.limits();
        opt.strict = o.strict;

        if (app.got_subcommand(cmd_analyze)) {
            AnalyzeInputs in;
            in.arr = arr;
            if (!o.realization.empty()) in.realization = parse_realization(slurp(o.realization));
            if (!o.operators.empty()) in.operators = parse_operators(slurp(o.operators));
            ordered_json rep = analyze(in, opt);
            emit(rep, o.human, human_report(rep));
            if (o.strict && rep["classification"]["verdict"] == "undetermined" &&
                rep["classification"]["limit_hit"].get<bool>())
                return 2;
            return 0;
        }
        if (app.got_subcommand(cmd_classical)) {
            ClassicalResult r = solve_classical(arr);
            ordered_json j;
            if (std::holds_alternative<ClassicalSolution>(r)) {
                j["feasible"] = true;
                ordered_json sol = ordered_json::object();
                const auto& c = std::get<ClassicalSolution>(r);
                for (size_t i = 0; i < arr.labels.size(); ++i) sol[arr.labels[i]] = c.values[i];
                j["solution"] = sol;
            } else {
                j["feasible"] = false;
                ordered_json wit = ordered_json::object();
                const auto& w = std::get<InfeasibilityWitness>(r);
                for (size_t i = 0; i < arr.contexts.size(); ++i) wit[arr.contexts[i].id] = w.y[i];
                j["witness"] = wit;
            }
            emit(j, false);
            return 0;
        }
        if (app.got_subcommand(cmd_oracle)) {
            OracleResult r = brute_force_classical(arr, o.oracle_cap);
            ordered_json j;
            j["status"] = r.status == OracleStatus::Feasible    ? "feasible"
                          : r.status == OracleStatus::Infeasible ? "infeasible"
                                                                 : "too-large";
            j["tested"] = r.tested;
            if (r.solution) {
                ordered_json sol = ordered_json::object();
                for (size_t i = 0; i < arr.labels.size(); ++i) sol[arr.labels[i]] = r.solution->values[i];
                j["solution"] = sol;
            }
            emit(j, false);
            return 0;
        }
        if (app.got_subcommand(cmd_homology)) {
            ChainData cd = build_chain(arr);
            int64_t m = hom_mod > 0 ? hom_mod : arr.d;
            ordered_json j;
            j["mod"] = m;
            j["h2_factors"] = cohomology_rank(cd, m);
            emit(j, false);
            return 0;
        }
        if (app.got_subcommand(cmd_realize)) {
            CellComplex2 X = parse_realization(slurp(o.realization));
            RealizationMode rm = mode == "commutative" ? RealizationMode::Commutative : RealizationMode::Topological;
            auto v = validate_realization(arr, X, rm);
            ordered_json j;
            j["mode"] = mode;
            j["ok"] = v.empty();
            j["violations"] = ordered_json::array();
            for (const auto& x : v) j["violations"].push_back({{"where", x.where}, {"detail", x.detail}});
            emit(j, false);
            return 0;
        }
        if (app.got_subcommand(cmd_surface)) {
            CellComplex2 X = parse_realization(slurp(o.realization));
            SurfaceReport sr = surface_report(X);
            ordered_json j;
            j["euler"] = sr.euler;
            j["closed_surface"] = sr.is_closed_surface;
            j["orientable"] = sr.orientable == SurfaceReport::Orientable::Yes   ? "yes"
                              : sr.orientable == SurfaceReport::Orientable::No ? "no"
                                                                               : "unknown";
            j["genus"] = sr.genus ? ordered_json(*sr.genus) : ordered_json(nullptr);
            emit(j, false);
            return 0;
        }
        if (app.got_subcommand(cmd_pi1)) {
            CellComplex2 X = parse_realization(slurp(o.realization));
            std::string bp = basepoint.empty()
                                 ? *std::min_element(X.vertices.begin(), X.vertices.end())
                                 : basepoint;
            GroupPresentation P = presentation(X, bp);
            TrivialityVerdict tv = triviality(P, opt.limits);
            std::cout << export_presentation(P);
            std::cout << "# abelianization:";
            for (int64_t f : abelianization(P)) std::cout << " " << f;
            std::cout << "\n# triviality: "
                      << (tv.status == TrivialityVerdict::Status::Trivial      ? "trivial"
                          : tv.status == TrivialityVerdict::Status::Nontrivial ? "nontrivial"
                                                                               : "unknown")
                      << " (" << tv.evidence << ")\n";
            return 0;
        }
        if (app.got_subcommand(cmd_verify)) {
            OperatorAssignment T = parse_operators(slurp(o.operators));
            auto vo = verify_operator_realization(arr, T);
            auto vq = verify_quantum_realization(arr, T);
            ordered_json j;
            j["operator_ok"] = vo.empty();
            j["quantum_ok"] = vq.empty();
            j["violations"] = ordered_json::array();
            for (const auto& x : vq) j["violations"].push_back({{"where", x.where}, {"detail", x.detail}});
            emit(j, false);
            return 0;
        }
        if (app.got_subcommand(cmd_face)) {
            CellComplex2 X = parse_realization(slurp(o.realization));
            OperatorAssignment T = parse_operators(slurp(o.operators));
            auto v = check_face_identity(T, X, arr);
            ordered_json j;
            j["ok"] = v.empty();
            j["violations"] = ordered_json::array();
            for (const auto& x : v) j["violations"].push_back({{"where", x.where}, {"detail", x.detail}});
            emit(j, false);
            return 0;
        }
        if (app.got_subcommand(cmd_sg)) {
            SolutionGroupPresentation G = build_solution_group(arr, !operator_case);
            std::cout << export_solution_group(G);
            RestrictedProductResult rp = restricted_product_check(arr);
            if (rp.applicable)
                std::cout << "# restricted product J-exponent: " << rp.exponent << "\n";
            return 0;
        }
        if (app.got_subcommand(cmd_lift)) {
            CellComplex2 X = o.realization.empty() ? build_single_vertex(arr)
                                                   : parse_realization(slurp(o.realization));
            std::string bp = *std::min_element(X.vertices.begin(), X.vertices.end());
            GroupPresentation P = presentation(X, bp);
            LiftResult lr = theta_lift_check(arr, X, P, opt.limits);
            ordered_json j;
            j["status"] = lr.status == LiftResult::Status::Exists  ? "lift-exists"
                          : lr.status == LiftResult::Status::Fails ? "lift-fails"
                                                                   : "unknown";
            j["witness"] = lr.witness;
            j["relator_j_exponents"] = lr.relator_j_exponents;
            emit(j, false);
            if (o.strict && lr.status == LiftResult::Status::Unknown) return 2;
            return 0;
        }
        if (app.got_subcommand(cmd_planar)) {
            IntersectionGraph G = intersection_graph(arr);
            PlanarityResult pr = planarity(G);
            ordered_json j;
            j["graph"] = export_graph(G);
            j["planar"] = pr.planar;
            if (pr.planar) {
                j["faces"] = pr.face_count;
                j["embedding_verified"] = pr.embedding_verified;
            } else {
                ordered_json wit = ordered_json::array();
                for (size_t ei : pr.kuratowski_edges) wit.push_back(G.edges[ei].label);
                j["kuratowski"] = {{"kind", pr.witness_kind}, {"edges", wit}, {"verified", pr.witness_verified}};
            }
            TheoremAVerdict v = theorem_a_verdict(arr);
            j["theorem_a"] = v == TheoremAVerdict::Magic      ? "magic"
                             : v == TheoremAVerdict::NonMagic ? "non-magic"
                                                              : "not-applicable";
            emit(j, false);
            return 0;
        }
        if (app.got_subcommand(cmd_decomp)) {
            PrimePlan plan = make_prime_plan(arr.d);
            std::vector<Arrangement> reduced = decompose(arr);
            ordered_json j;
            j["d"] = arr.d;
            j["components"] = ordered_json::array();
            for (size_t i = 0; i < reduced.size(); ++i) {
                ordered_json c;
                c["prime_power"] = plan.components[i].modulus;
                c["cofactor"] = plan.components[i].cofactor;
                c["weight"] = plan.components[i].weight;
                c["arrangement"] = ordered_json::parse(serialize_arrangement(reduced[i]));
                j["components"].push_back(std::move(c));
            }
            emit(j, false);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
