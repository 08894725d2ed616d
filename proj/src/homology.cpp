#include "magicarr/homology.hpp"

namespace magicarr {

ChainData build_chain(const Arrangement& arr) {
    ChainData cd;
    cd.d = arr.d;
    cd.boundary = IntMat(arr.labels.size(), arr.contexts.size());
    for (size_t ci = 0; ci < arr.contexts.size(); ++ci)
        for (const auto& e : arr.contexts[ci].elements)
            cd.boundary.at(arr.label_at(e.label), ci) += e.sign;
    cd.smith = smith_normal_form(cd.boundary);
    return cd;
}

std::vector<int64_t> tau_vector(const Arrangement& arr) {
    std::vector<int64_t> tau(arr.contexts.size());
    for (size_t i = 0; i < arr.contexts.size(); ++i) tau[i] = arr.contexts[i].tau;
    return tau;
}

bool check_classical(const Arrangement& arr, const std::vector<int64_t>& c) {
    if (c.size() != arr.labels.size()) return false;
    for (const auto& ctx : arr.contexts) {
        int64_t acc = 0;
        for (const auto& e : ctx.elements) acc += e.sign * c[arr.label_at(e.label)];
        acc %= arr.d;
        if (acc < 0) acc += arr.d;
        if (acc != ctx.tau) return false;
    }
    return true;
}

ClassicalResult solve_classical(const Arrangement& arr) {
    // the system is delta c = tau with delta = boundary^T
    IntMat delta(arr.contexts.size(), arr.labels.size());
    for (size_t ci = 0; ci < arr.contexts.size(); ++ci)
        for (const auto& e : arr.contexts[ci].elements)
            delta.at(ci, arr.label_at(e.label)) += e.sign;

    std::vector<int64_t> tau = tau_vector(arr);
    ModSolveResult probe = solve_mod(delta, tau, arr.d);
    if (!probe.feasible) return InfeasibilityWitness{probe.witness};
    auto best = lexmin_solve_mod(delta, tau, arr.d);
    return ClassicalSolution{*best};
}

OracleResult brute_force_classical(const Arrangement& arr, uint64_t cap) {
    OracleResult res;
    const size_t n = arr.labels.size();
    // d^n <= cap, computed without overflow
    uint64_t total = 1;
    for (size_t i = 0; i < n; ++i) {
        if (total > cap / static_cast<uint64_t>(arr.d)) {
            res.status = OracleStatus::TooLarge;
            return res;
        }
        total *= static_cast<uint64_t>(arr.d);
    }
    std::vector<int64_t> c(n, 0);
    for (uint64_t k = 0; k < total; ++k) {
        ++res.tested;
        if (check_classical(arr, c)) {
            res.status = OracleStatus::Feasible;
            res.solution = ClassicalSolution{c};
            return res;
        }
        // odometer increment, last label fastest => lexicographic order
        for (size_t i = n; i-- > 0;) {
            if (++c[i] < arr.d) break;
            c[i] = 0;
        }
    }
    res.status = OracleStatus::Infeasible;
    return res;
}

std::vector<int64_t> cohomology_rank(const ChainData& chain, int64_t d) {
    // coker(delta) over Z_d: Z_d / s_i picks up gcd(s_i, d), plus one Z_d
    // per context coordinate beyond the rank. Invariant factors of the
    // boundary and its transpose coincide.
    std::vector<int64_t> factors;
    for (const Int& s : chain.smith.diag) {
        int64_t g = gcd64(mod_norm(s, d), d);
        if (g != 1) factors.push_back(g);
    }
    size_t contexts = chain.boundary.cols();
    for (size_t i = chain.smith.rank; i < contexts; ++i) factors.push_back(d);
    return factors;
}

}  // namespace magicarr
