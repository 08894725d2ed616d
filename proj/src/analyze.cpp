#include "magicarr/analyze.hpp"

#include <algorithm>
#include <sstream>

#include "magicarr/arkhipov.hpp"
#include "magicarr/homology.hpp"
#include "magicarr/pi1.hpp"
#include "magicarr/primes.hpp"
#include "magicarr/solngroup.hpp"

namespace magicarr {

using nlohmann::ordered_json;

namespace {

ordered_json violations_json(const std::vector<RealizationViolation>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : v) arr.push_back({{"where", x.where}, {"detail", x.detail}});
    return arr;
}

ordered_json op_violations_json(const std::vector<OperatorViolation>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : v) arr.push_back({{"where", x.where}, {"detail", x.detail}});
    return arr;
}

const char* orientable_str(SurfaceReport::Orientable o) {
    switch (o) {
        case SurfaceReport::Orientable::Yes: return "yes";
        case SurfaceReport::Orientable::No: return "no";
        default: return "unknown";
    }
}

struct RealizationOutcome {
    bool topological_ok = false;
    bool trivial_pi1 = false;
    bool coprime_certified = false;
    bool lift_unknown = false;
};

ordered_json realization_entry(const std::string& name, const Arrangement& arr, const CellComplex2& X,
                               const std::optional<OperatorAssignment>& ops, const AnalyzeOptions& opt,
                               RealizationOutcome& outcome) {
    ordered_json entry;
    entry["name"] = name;

    auto vt = validate_realization(arr, X, RealizationMode::Topological);
    auto vc = validate_realization(arr, X, RealizationMode::Commutative);
    outcome.topological_ok = vt.empty();
    entry["validation"] = {{"topological", {{"ok", vt.empty()}, {"violations", violations_json(vt)}}},
                           {"commutative", {{"ok", vc.empty()}, {"violations", violations_json(vc)}}}};

    SurfaceReport sr = surface_report(X);
    entry["surface"] = {{"euler", sr.euler},
                        {"closed_surface", sr.is_closed_surface},
                        {"orientable", orientable_str(sr.orientable)},
                        {"genus", sr.genus ? ordered_json(*sr.genus) : ordered_json(nullptr)}};

    std::string basepoint = opt.basepoint.value_or(*std::min_element(X.vertices.begin(), X.vertices.end()));
    if (!X.vertex_index.count(basepoint)) basepoint = *std::min_element(X.vertices.begin(), X.vertices.end());
    GroupPresentation P = presentation(X, basepoint);
    std::vector<int64_t> ab = abelianization(P);
    TrivialityVerdict tv = triviality(P, opt.limits);
    FiniteOrderResult fo = finite_order(P, opt.limits);
    CoprimeVerdict cv = coprime_criterion(arr, P, opt.limits);
    outcome.trivial_pi1 = tv.status == TrivialityVerdict::Status::Trivial;
    outcome.coprime_certified = cv == CoprimeVerdict::NonMagicCertified;

    const char* tv_str = tv.status == TrivialityVerdict::Status::Trivial      ? "trivial"
                         : tv.status == TrivialityVerdict::Status::Nontrivial ? "nontrivial"
                                                                              : "unknown";
    entry["pi1"] = {{"basepoint", basepoint},
                    {"generators", P.generators.size()},
                    {"relators", P.relators.size()},
                    {"abelianization", ab},
                    {"triviality", {{"status", tv_str}, {"evidence", tv.evidence}}},
                    {"finite_order", {{"order", fo.order ? ordered_json(*fo.order) : ordered_json(nullptr)},
                                      {"note", fo.note}}},
                    {"coprime_criterion",
                     cv == CoprimeVerdict::NonMagicCertified ? "non-magic-certified" : "inconclusive"}};

    LiftResult lr = theta_lift_check(arr, X, P, opt.limits);
    const char* lr_str = lr.status == LiftResult::Status::Exists ? "lift-exists"
                         : lr.status == LiftResult::Status::Fails ? "lift-fails"
                                                                  : "unknown";
    outcome.lift_unknown = lr.status == LiftResult::Status::Unknown;
    entry["lift"] = {{"status", lr_str},
                     {"witness", lr.witness},
                     {"relator_j_exponents", lr.relator_j_exponents}};

    if (ops && outcome.topological_ok) {
        auto fc = check_face_identity(*ops, X, arr);
        entry["face_check"] = {{"ok", fc.empty()}, {"violations", op_violations_json(fc)}};
    } else {
        entry["face_check"] = nullptr;
    }
    return entry;
}

}  // namespace

ordered_json analyze(const AnalyzeInputs& in, const AnalyzeOptions& opt) {
    const Arrangement& arr = in.arr;
    ordered_json rep;
    rep["schema_version"] = 1;
    bool limit_hit = false;

    rep["arrangement"] = {{"d", arr.d},
                          {"labels", arr.labels.size()},
                          {"contexts", arr.contexts.size()},
                          {"restricted", arr.restricted}};

    // classical solve + independent oracle
    ClassicalResult cr = solve_classical(arr);
    bool classical_feasible = std::holds_alternative<ClassicalSolution>(cr);
    {
        ordered_json jc;
        jc["feasible"] = classical_feasible;
        if (classical_feasible) {
            ordered_json sol = ordered_json::object();
            const auto& c = std::get<ClassicalSolution>(cr);
            for (size_t i = 0; i < arr.labels.size(); ++i) sol[arr.labels[i]] = c.values[i];
            jc["solution"] = sol;
            jc["witness"] = nullptr;
        } else {
            ordered_json wit = ordered_json::object();
            const auto& w = std::get<InfeasibilityWitness>(cr);
            for (size_t i = 0; i < arr.contexts.size(); ++i) wit[arr.contexts[i].id] = w.y[i];
            jc["solution"] = nullptr;
            jc["witness"] = wit;
        }
        rep["classical"] = jc;
    }
    {
        OracleResult orc = brute_force_classical(arr, opt.oracle_cap);
        ordered_json jo;
        switch (orc.status) {
            case OracleStatus::Feasible: jo["status"] = "feasible"; break;
            case OracleStatus::Infeasible: jo["status"] = "infeasible"; break;
            case OracleStatus::TooLarge: jo["status"] = "too-large"; break;
        }
        jo["tested"] = orc.tested;
        if (orc.status != OracleStatus::TooLarge)
            jo["agrees_with_solver"] = (orc.status == OracleStatus::Feasible) == classical_feasible;
        rep["oracle"] = jo;
    }

    ChainData chain = build_chain(arr);
    rep["homology"] = {{"h2_factors", cohomology_rank(chain, arr.d)}};

    // operator checks
    bool quantum_ok = false;
    if (in.operators) {
        auto vo = verify_operator_realization(arr, *in.operators);
        auto vq = verify_quantum_realization(arr, *in.operators);
        quantum_ok = vq.empty();
        rep["operators"] = {{"operator_ok", vo.empty()},
                            {"operator_violations", op_violations_json(vo)},
                            {"quantum_ok", vq.empty()},
                            {"quantum_violations", op_violations_json(vq)}};
    } else {
        rep["operators"] = nullptr;
    }

    // realizations: the single-vertex model always, plus the supplied one
    bool any_trivial_pi1 = false, any_coprime = false, any_lift_unknown = false;
    {
        ordered_json list = ordered_json::array();
        RealizationOutcome oc;
        list.push_back(realization_entry("single-vertex", arr, build_single_vertex(arr), in.operators, opt, oc));
        any_trivial_pi1 |= oc.trivial_pi1;
        any_coprime |= oc.coprime_certified;
        any_lift_unknown |= oc.lift_unknown;
        if (in.realization) {
            RealizationOutcome oc2;
            list.push_back(realization_entry("supplied", arr, *in.realization, in.operators, opt, oc2));
            any_trivial_pi1 |= oc2.trivial_pi1;
            any_coprime |= oc2.coprime_certified;
            any_lift_unknown |= oc2.lift_unknown;
        }
        rep["realizations"] = list;
    }

    // Theorem A
    if (arr.restricted && arr.d == 2) {
        IntersectionGraph G = intersection_graph(arr);
        PlanarityResult pr = planarity(G);
        ordered_json ja;
        ja["applicable"] = true;
        ja["graph"] = {{"vertices", G.vertices.size()}, {"edges", G.edges.size()}};
        ja["planar"] = pr.planar;
        if (pr.planar) {
            ja["faces"] = pr.face_count;
            ja["embedding_verified"] = pr.embedding_verified;
        } else {
            ordered_json wit = ordered_json::array();
            for (size_t ei : pr.kuratowski_edges) wit.push_back(G.edges[ei].label);
            ja["kuratowski"] = {{"kind", pr.witness_kind}, {"edges", wit}, {"verified", pr.witness_verified}};
        }
        ja["verdict"] = pr.planar ? "non-magic" : "magic";
        rep["theorem_a"] = ja;
    } else {
        rep["theorem_a"] = {{"applicable", false}};
    }

    // prime decomposition
    PrimePlan plan = make_prime_plan(arr.d);
    if (plan.components.size() > 1) {
        ordered_json jp;
        ordered_json comps = ordered_json::array();
        std::vector<Arrangement> reduced = decompose(arr);
        std::vector<ClassicalSolution> sols;
        bool all_feasible = true;
        for (size_t i = 0; i < reduced.size(); ++i) {
            ClassicalResult rc = solve_classical(reduced[i]);
            bool ok = std::holds_alternative<ClassicalSolution>(rc);
            all_feasible &= ok;
            if (ok) sols.push_back(std::get<ClassicalSolution>(rc));
            comps.push_back({{"prime_power", plan.components[i].modulus},
                             {"cofactor", plan.components[i].cofactor},
                             {"weight", plan.components[i].weight},
                             {"feasible", ok}});
        }
        jp["components"] = comps;
        jp["all_feasible"] = all_feasible;
        jp["agrees_with_full_system"] = (all_feasible == classical_feasible);
        if (all_feasible) {
            ClassicalSolution glued = glue(sols, plan);
            jp["glued_reverifies"] = check_classical(arr, glued.values);
        }
        rep["primes"] = jp;
    } else {
        rep["primes"] = nullptr;
    }

    // classification: every certifying rule is listed; the verdict follows
    // the first one
    {
        std::vector<std::string> rules;
        if (classical_feasible) rules.push_back("classical-solution");
        if (!classical_feasible && quantum_ok) rules.push_back("quantum-realization+classical-infeasible");
        if (any_coprime) rules.push_back("coprime-criterion");
        if (any_trivial_pi1) rules.push_back("simply-connected-realization");
        std::string verdict = "undetermined";
        std::string rule = "none";
        if (!rules.empty()) {
            rule = rules.front();
            verdict = rule == "quantum-realization+classical-infeasible" ? "magic(certified)"
                                                                         : "non-magic(certified)";
        }
        limit_hit = any_lift_unknown;
        rep["classification"] = {{"verdict", verdict},
                                 {"rule", rule},
                                 {"certifying_rules", rules},
                                 {"limit_hit", limit_hit}};
    }
    return rep;
}

std::string human_report(const ordered_json& rep) {
    std::ostringstream os;
    const auto& a = rep["arrangement"];
    os << "arrangement: " << a["labels"] << " labels, " << a["contexts"] << " contexts, d=" << a["d"]
       << (a["restricted"].get<bool>() ? ", restricted" : "") << "\n";
    os << "classical:   " << (rep["classical"]["feasible"].get<bool>() ? "feasible" : "infeasible") << "\n";
    os << "oracle:      " << rep["oracle"]["status"].get<std::string>() << "\n";
    os << "H^2 factors: " << rep["homology"]["h2_factors"].dump() << "\n";
    for (const auto& r : rep["realizations"]) {
        os << "realization " << r["name"].get<std::string>() << ": euler=" << r["surface"]["euler"]
           << " closed=" << r["surface"]["closed_surface"] << " orientable="
           << r["surface"]["orientable"].get<std::string>() << "\n";
        os << "  pi1: " << r["pi1"]["generators"] << " generators, abelianization "
           << r["pi1"]["abelianization"].dump() << ", " << r["pi1"]["triviality"]["status"].get<std::string>()
           << "\n";
        os << "  lift: " << r["lift"]["status"].get<std::string>() << "\n";
    }
    if (!rep["theorem_a"].is_null() && rep["theorem_a"]["applicable"].get<bool>())
        os << "theorem A:   " << rep["theorem_a"]["verdict"].get<std::string>() << "\n";
    if (!rep["operators"].is_null())
        os << "operators:   quantum_ok=" << rep["operators"]["quantum_ok"] << "\n";
    os << "verdict:     " << rep["classification"]["verdict"].get<std::string>() << " (rule: "
       << rep["classification"]["rule"].get<std::string>() << ")\n";
    return os.str();
}

}  // namespace magicarr
