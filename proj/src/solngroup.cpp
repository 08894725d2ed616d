#include "magicarr/solngroup.hpp"

#include <sstream>

#include "magicarr/homology.hpp"
#include "magicarr/intmat.hpp"

namespace magicarr {

SolutionGroupPresentation build_solution_group(const Arrangement& arr, bool quantum) {
    SolutionGroupPresentation G;
    G.d = arr.d;
    G.quantum = quantum;
    G.generators.push_back("J");
    for (const auto& l : arr.labels) {
        if (l == "J") throw ValidationError("labels", "'J' is a reserved generator name");
        G.generators.push_back(l);
    }
    auto gen = [&](const std::string& label) { return static_cast<int>(arr.label_at(label)) + 1; };

    auto power_word = [](int g, int64_t k) {
        GroupWord w;
        for (int64_t i = 0; i < k; ++i) w.push_back({g, 1});
        return w;
    };
    auto commutator = [](int a, int b) {
        return GroupWord{{a, 1}, {b, 1}, {a, -1}, {b, -1}};
    };

    // J^d and g_a^d
    G.relators.push_back(power_word(0, arr.d));
    for (size_t i = 0; i < arr.labels.size(); ++i)
        G.relators.push_back(power_word(static_cast<int>(i) + 1, arr.d));
    // centrality of J
    for (size_t i = 0; i < arr.labels.size(); ++i)
        G.relators.push_back(commutator(0, static_cast<int>(i) + 1));
    // context commutators (quantum only)
    if (quantum)
        for (const auto& c : arr.contexts)
            for (size_t i = 0; i < c.elements.size(); ++i)
                for (size_t j = i + 1; j < c.elements.size(); ++j)
                    G.relators.push_back(commutator(gen(c.elements[i].label), gen(c.elements[j].label)));
    // context products: prod g_a^{eps} J^{-tau} = 1
    for (const auto& c : arr.contexts) {
        GroupWord w;
        for (const auto& e : c.elements) w.push_back({gen(e.label), e.sign});
        for (int64_t i = 0; i < c.tau; ++i) w.push_back({0, -1});
        G.relators.push_back(std::move(w));
    }
    return G;
}

RestrictedProductResult restricted_product_check(const Arrangement& arr) {
    RestrictedProductResult res;
    if (!arr.restricted) {
        res.reason = "arrangement is not restricted";
        return res;
    }
    if (arr.d != 2) {
        res.reason = "criterion requires d = 2";
        return res;
    }
    res.applicable = true;
    int64_t sum = 0;
    for (const auto& c : arr.contexts) sum += c.tau;
    res.exponent = sum % 2;
    return res;
}

namespace {

/// Split the solution group into the central-extension form: words over the
/// label generators, J tracked as an exact Z_d valuation.
std::vector<std::pair<GroupWord, int64_t>> valued_relators(const SolutionGroupPresentation& G) {
    std::vector<std::pair<GroupWord, int64_t>> out;
    for (const GroupWord& r : G.relators) {
        GroupWord w;
        int64_t jexp = 0;
        for (const Letter& l : r) {
            if (l.gen == 0)
                jexp += l.exp;
            else
                w.push_back({l.gen - 1, l.exp});
        }
        // r = J^{jexp} w = 1, so w = J^{-jexp}
        w = free_reduce(std::move(w));
        int64_t val = mod_norm(Int(-jexp), G.d);
        if (w.empty() && val == 0) continue;
        out.push_back({std::move(w), val});
    }
    return out;
}

}  // namespace

RewriteVerdict knuth_bendix(const SolutionGroupPresentation& G, const GroupWord& word,
                            const ResourceLimits& limits) {
    RewriteSystem rs(G.generators.size() - 1, G.d, valued_relators(G), limits);
    RewriteVerdict v;
    v.system_completed = rs.completed();
    v.rules = rs.rule_count();

    GroupWord w;
    int64_t jexp = 0;
    for (const Letter& l : word) {
        if (l.gen == 0)
            jexp += l.exp;
        else
            w.push_back({l.gen - 1, l.exp});
    }
    RewriteSystem::Reduced red = rs.reduce(RewriteSystem::encode(free_reduce(w)));
    v.steps = rs.steps_used();
    if (rs.budget_exhausted()) {
        v.status = RewriteVerdict::Status::Unknown;
        return v;
    }
    if (red.word.empty()) {
        int64_t k = mod_norm(Int(jexp) + red.val, G.d);
        v.j_exponent = k;
        v.status = k == 0 ? RewriteVerdict::Status::Identity : RewriteVerdict::Status::JPower;
    } else if (v.system_completed) {
        v.status = RewriteVerdict::Status::Distinct;
    } else {
        v.status = RewriteVerdict::Status::Unknown;
    }
    return v;
}

LiftResult theta_lift_check(const Arrangement& arr, const CellComplex2& X, const GroupPresentation& P,
                            const ResourceLimits& limits) {
    LiftResult res;
    SolutionGroupPresentation G = build_solution_group(arr, true);
    RewriteSystem rs(arr.labels.size(), arr.d, valued_relators(G), limits);

    auto gword_of_loop = [&](const std::vector<FaceStep>& loop) {
        GroupWord w;
        for (const FaceStep& s : loop) w.push_back({static_cast<int>(arr.label_at(s.edge)), s.exp});
        return w;
    };

    std::vector<int64_t> kvec;
    for (size_t ri = 0; ri < P.relators.size(); ++ri) {
        GroupWord image;
        for (const Letter& l : P.relators[ri]) {
            GroupWord loop = gword_of_loop(P.generator_loop[l.gen]);
            if (l.exp == -1) loop = inverse_word(loop);
            image.insert(image.end(), loop.begin(), loop.end());
        }
        RewriteSystem::Reduced red = rs.reduce(RewriteSystem::encode(free_reduce(image)));
        if (rs.budget_exhausted()) {
            res.status = LiftResult::Status::Unknown;
            res.witness = "rewriting budget exhausted at relator for face " + P.relator_face[ri];
            return res;
        }
        if (!red.word.empty()) {
            if (rs.completed()) {
                res.status = LiftResult::Status::Fails;
                res.witness = "relator for face " + P.relator_face[ri] +
                              " maps outside the scalar subgroup of the solution group";
            } else {
                res.status = LiftResult::Status::Unknown;
                res.witness = "relator for face " + P.relator_face[ri] +
                              " did not reduce to a J-power (system incomplete)";
            }
            return res;
        }
        kvec.push_back(red.val);
    }
    res.relator_j_exponents = kvec;

    // alpha re-phasing over Z_d: sum_j n_ij alpha_j = -k_i with n the
    // relator exponent matrix over the pi1 generators
    IntMat N(P.relators.size(), P.generators.size());
    for (size_t i = 0; i < P.relators.size(); ++i)
        for (const Letter& l : P.relators[i]) N.at(i, l.gen) += l.exp;

    auto solve_with = [&](const std::vector<int64_t>& ks) {
        std::vector<int64_t> rhs(ks.size());
        for (size_t i = 0; i < ks.size(); ++i) rhs[i] = mod_norm(Int(-ks[i]), arr.d);
        return solve_mod(N, rhs, arr.d);
    };
    auto realization_from = [&](const std::vector<int64_t>& alpha) {
        // c = -alpha on the generator edges, 0 on the tree
        std::vector<int64_t> c(arr.labels.size(), 0);
        for (size_t j = 0; j < P.generators.size(); ++j)
            c[arr.label_at(P.generator_edge[j])] = mod_norm(Int(-alpha[j]), arr.d);
        return c;
    };

    ModSolveResult sol = solve_with(kvec);
    if (!sol.feasible) {
        // sound even if J collapsed: a classical realization would force the
        // full-order J and the canonical exponents, making this solvable
        res.status = LiftResult::Status::Fails;
        std::ostringstream os;
        os << "no J-power re-phasing: obstruction row";
        for (int64_t y : sol.witness) os << " " << y;
        res.witness = os.str();
        return res;
    }
    if (check_classical(arr, realization_from(sol.x))) {
        res.status = LiftResult::Status::Exists;
        return res;
    }
    // The reduced exponents were shifted by a J-collapse (J^delta = 1 in G).
    // Retry with the canonical valuations k_i = tau(face_i), the value of
    // the gamma-conjugated context-relation derivation. Those valuations
    // presuppose that the face words spell the contexts exactly.
    if (!validate_realization(arr, X, RealizationMode::Topological).empty()) {
        res.status = LiftResult::Status::Unknown;
        res.witness = "J-collapse shifted the exponents and the realization is not topological";
        return res;
    }
    std::vector<int64_t> canonical;
    for (size_t ri = 0; ri < P.relators.size(); ++ri)
        canonical.push_back(arr.contexts[arr.context_at(P.relator_face[ri])].tau);
    ModSolveResult sol2 = solve_with(canonical);
    if (sol2.feasible && check_classical(arr, realization_from(sol2.x))) {
        res.status = LiftResult::Status::Exists;
        res.witness = "J-collapse detected; decided with the canonical context valuations";
        return res;
    }
    if (!sol2.feasible) {
        res.status = LiftResult::Status::Fails;
        std::ostringstream os;
        os << "no J-power re-phasing (canonical valuations): obstruction row";
        for (int64_t y : sol2.witness) os << " " << y;
        res.witness = os.str();
        return res;
    }
    res.status = LiftResult::Status::Unknown;
    res.witness = "re-phasing solution failed re-verification";
    return res;
}

std::string export_solution_group(const SolutionGroupPresentation& G) {
    std::ostringstream os;
    os << "gens:";
    for (const auto& g : G.generators) os << " " << g;
    os << "\n";
    for (const GroupWord& r : G.relators) {
        bool first = true;
        for (const Letter& l : r) {
            if (!first) os << " ";
            first = false;
            os << G.generators[l.gen];
            if (l.exp == -1) os << "^-1";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace magicarr
