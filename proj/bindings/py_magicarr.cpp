#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "magicarr/analyze.hpp"
#include "magicarr/arkhipov.hpp"
#include "magicarr/homology.hpp"
#include "magicarr/pi1.hpp"
#include "magicarr/primes.hpp"
#include "magicarr/solngroup.hpp"

namespace py = pybind11;
using namespace magicarr;

namespace {

ResourceLimits limits_from(uint64_t coset_rows, uint64_t kb_rules, uint64_t kb_steps) {
    ResourceLimits l;
    l.coset_rows = coset_rows;
    l.kb_max_rules = kb_rules;
    l.kb_max_steps = kb_steps;
    return l;
}

std::string default_basepoint(const CellComplex2& X, const std::string& given) {
    if (!given.empty()) return given;
    return *std::min_element(X.vertices.begin(), X.vertices.end());
}

py::dict classical_dict(const Arrangement& arr, const ClassicalResult& r) {
    py::dict out;
    if (std::holds_alternative<ClassicalSolution>(r)) {
        out["feasible"] = true;
        py::dict sol;
        const auto& c = std::get<ClassicalSolution>(r);
        for (size_t i = 0; i < arr.labels.size(); ++i) sol[py::str(arr.labels[i])] = c.values[i];
        out["solution"] = sol;
    } else {
        out["feasible"] = false;
        py::dict wit;
        const auto& w = std::get<InfeasibilityWitness>(r);
        for (size_t i = 0; i < arr.contexts.size(); ++i) wit[py::str(arr.contexts[i].id)] = w.y[i];
        out["witness"] = wit;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(magicarr, m) {
    m.doc() = "magic arrangement analysis: classical realizability, topological realizations, "
              "fundamental groups, symbolic Pauli verification, solution-group lift test, planarity";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<ValidationError>(m, "ValidationError");

    py::class_<Arrangement>(m, "Arrangement")
        .def_readonly("d", &Arrangement::d)
        .def_readonly("labels", &Arrangement::labels)
        .def_readonly("restricted", &Arrangement::restricted)
        .def_property_readonly("contexts",
                               [](const Arrangement& a) {
                                   std::vector<std::string> ids;
                                   for (const auto& c : a.contexts) ids.push_back(c.id);
                                   return ids;
                               })
        .def("__repr__", [](const Arrangement& a) {
            return "<Arrangement d=" + std::to_string(a.d) + " labels=" + std::to_string(a.labels.size()) +
                   " contexts=" + std::to_string(a.contexts.size()) + ">";
        });

    py::class_<CellComplex2>(m, "CellComplex2")
        .def_readonly("vertices", &CellComplex2::vertices)
        .def("__repr__", [](const CellComplex2& x) {
            return "<CellComplex2 V=" + std::to_string(x.vertices.size()) +
                   " E=" + std::to_string(x.edges.size()) + " F=" + std::to_string(x.faces.size()) + ">";
        });

    py::class_<OperatorAssignment>(m, "OperatorAssignment")
        .def_readonly("d", &OperatorAssignment::d)
        .def_readonly("n", &OperatorAssignment::n);

    m.def("parse_arrangement", &parse_arrangement, py::arg("text"));
    m.def("serialize_arrangement", &serialize_arrangement);
    m.def("is_restricted", &is_restricted);

    m.def("solve_classical",
          [](const Arrangement& arr) { return classical_dict(arr, solve_classical(arr)); });
    m.def(
        "brute_force_classical",
        [](const Arrangement& arr, uint64_t cap) {
            OracleResult r = brute_force_classical(arr, cap);
            py::dict out;
            out["status"] = r.status == OracleStatus::Feasible    ? "feasible"
                            : r.status == OracleStatus::Infeasible ? "infeasible"
                                                                   : "too-large";
            out["tested"] = r.tested;
            return out;
        },
        py::arg("arrangement"), py::arg("cap") = 4096);
    m.def(
        "cohomology",
        [](const Arrangement& arr, int64_t mod) {
            return cohomology_rank(build_chain(arr), mod > 0 ? mod : arr.d);
        },
        py::arg("arrangement"), py::arg("mod") = 0);

    m.def("parse_realization", &parse_realization, py::arg("text"));
    m.def("serialize_realization", &serialize_realization);
    m.def("build_single_vertex", &build_single_vertex);
    m.def("reverse_orientation", &reverse_orientation);
    m.def(
        "validate_realization",
        [](const Arrangement& arr, const CellComplex2& X, const std::string& mode) {
            auto v = validate_realization(
                arr, X, mode == "commutative" ? RealizationMode::Commutative : RealizationMode::Topological);
            py::list out;
            for (const auto& x : v) {
                py::dict d;
                d["where"] = x.where;
                d["detail"] = x.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("arrangement"), py::arg("realization"), py::arg("mode") = "topological");
    m.def("surface_report", [](const CellComplex2& X) {
        SurfaceReport r = surface_report(X);
        py::dict out;
        out["euler"] = r.euler;
        out["closed_surface"] = r.is_closed_surface;
        out["orientable"] = r.orientable == SurfaceReport::Orientable::Yes   ? "yes"
                            : r.orientable == SurfaceReport::Orientable::No ? "no"
                                                                            : "unknown";
        if (r.genus)
            out["genus"] = *r.genus;
        else
            out["genus"] = py::none();
        return out;
    });

    m.def(
        "presentation_text",
        [](const CellComplex2& X, const std::string& basepoint) {
            return export_presentation(presentation(X, default_basepoint(X, basepoint)));
        },
        py::arg("realization"), py::arg("basepoint") = "");
    m.def(
        "abelianization",
        [](const CellComplex2& X, const std::string& basepoint) {
            return abelianization(presentation(X, default_basepoint(X, basepoint)));
        },
        py::arg("realization"), py::arg("basepoint") = "");
    m.def(
        "pi1_verdicts",
        [](const CellComplex2& X, const std::string& basepoint, uint64_t coset_rows) {
            GroupPresentation P = presentation(X, default_basepoint(X, basepoint));
            ResourceLimits lim = limits_from(coset_rows, 50'000, 1'000'000);
            TrivialityVerdict tv = triviality(P, lim);
            FiniteOrderResult fo = finite_order(P, lim);
            py::dict out;
            out["generators"] = P.generators.size();
            out["relators"] = P.relators.size();
            out["abelianization"] = abelianization(P);
            out["triviality"] = tv.status == TrivialityVerdict::Status::Trivial      ? "trivial"
                                : tv.status == TrivialityVerdict::Status::Nontrivial ? "nontrivial"
                                                                                     : "unknown";
            out["evidence"] = tv.evidence;
            if (fo.order)
                out["order"] = *fo.order;
            else
                out["order"] = py::none();
            return out;
        },
        py::arg("realization"), py::arg("basepoint") = "", py::arg("coset_rows") = 1'000'000);

    m.def("parse_operators", &parse_operators, py::arg("text"));
    m.def("serialize_operators", &serialize_operators);
    m.def("verify_operators", [](const Arrangement& arr, const OperatorAssignment& T) {
        py::dict out;
        out["operator_ok"] = verify_operator_realization(arr, T).empty();
        auto vq = verify_quantum_realization(arr, T);
        out["quantum_ok"] = vq.empty();
        py::list viols;
        for (const auto& v : vq) {
            py::dict d;
            d["where"] = v.where;
            d["detail"] = v.detail;
            viols.append(d);
        }
        out["violations"] = viols;
        return out;
    });
    m.def("check_face_identity",
          [](const OperatorAssignment& T, const CellComplex2& X, const Arrangement& arr) {
              return check_face_identity(T, X, arr).empty();
          });

    m.def(
        "solution_group_text",
        [](const Arrangement& arr, bool quantum) { return export_solution_group(build_solution_group(arr, quantum)); },
        py::arg("arrangement"), py::arg("quantum") = true);
    m.def("restricted_product_check", [](const Arrangement& arr) {
        RestrictedProductResult r = restricted_product_check(arr);
        py::dict out;
        out["applicable"] = r.applicable;
        if (r.applicable)
            out["exponent"] = r.exponent;
        else
            out["reason"] = r.reason;
        return out;
    });
    m.def(
        "lift_check",
        [](const Arrangement& arr, const CellComplex2* X, uint64_t kb_rules, uint64_t kb_steps) {
            CellComplex2 Xc = X ? *X : build_single_vertex(arr);
            GroupPresentation P = presentation(Xc, default_basepoint(Xc, ""));
            LiftResult lr = theta_lift_check(arr, Xc, P, limits_from(1'000'000, kb_rules, kb_steps));
            py::dict out;
            out["status"] = lr.status == LiftResult::Status::Exists  ? "lift-exists"
                            : lr.status == LiftResult::Status::Fails ? "lift-fails"
                                                                     : "unknown";
            out["witness"] = lr.witness;
            out["relator_j_exponents"] = lr.relator_j_exponents;
            return out;
        },
        py::arg("arrangement"), py::arg("realization") = nullptr, py::arg("kb_rules") = 50'000,
        py::arg("kb_steps") = 1'000'000);

    m.def("theorem_a", [](const Arrangement& arr) {
        TheoremAVerdict v = theorem_a_verdict(arr);
        return std::string(v == TheoremAVerdict::Magic      ? "magic"
                           : v == TheoremAVerdict::NonMagic ? "non-magic"
                                                            : "not-applicable");
    });
    m.def("planarity", [](const Arrangement& arr) {
        IntersectionGraph G = intersection_graph(arr);
        PlanarityResult pr = planarity(G);
        py::dict out;
        out["planar"] = pr.planar;
        if (pr.planar) {
            out["faces"] = pr.face_count;
            out["embedding_verified"] = pr.embedding_verified;
        } else {
            py::list wit;
            for (size_t ei : pr.kuratowski_edges) wit.append(G.edges[ei].label);
            out["kuratowski_kind"] = pr.witness_kind;
            out["kuratowski_edges"] = wit;
            out["witness_verified"] = pr.witness_verified;
        }
        return out;
    });

    m.def("decompose", &decompose);
    m.def(
        "analyze",
        [](const std::string& arrangement, const std::string& realization, const std::string& operators,
           uint64_t oracle_cap) {
            AnalyzeInputs in;
            in.arr = parse_arrangement(arrangement);
            if (!realization.empty()) in.realization = parse_realization(realization);
            if (!operators.empty()) in.operators = parse_operators(operators);
            AnalyzeOptions opt;
            opt.oracle_cap = oracle_cap;
            return analyze(in, opt).dump(2);
        },
        py::arg("arrangement"), py::arg("realization") = "", py::arg("operators") = "",
        py::arg("oracle_cap") = 4096,
        "Run the full pipeline on JSON documents; returns the report as a JSON string.");
}
