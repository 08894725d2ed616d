#include "magicarr/primes.hpp"

#include "magicarr/intmat.hpp"

namespace magicarr {

PrimePlan make_prime_plan(int64_t d) {
    if (d < 2) throw ValidationError("d", "modulus must be at least 2");
    PrimePlan plan;
    plan.d = d;
    int64_t rest = d;
    for (int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        PrimeComponent c;
        c.p = p;
        c.alpha = 0;
        c.modulus = 1;
        while (rest % p == 0) {
            rest /= p;
            ++c.alpha;
            c.modulus *= p;
        }
        plan.components.push_back(c);
    }
    if (rest > 1) plan.components.push_back({rest, 1, rest, 1, 1});
    for (auto& c : plan.components) {
        c.cofactor = d / c.modulus;
        c.weight = mod_inverse(c.cofactor % c.modulus, c.modulus);
    }
    return plan;
}

std::vector<Arrangement> decompose(const Arrangement& arr) {
    PrimePlan plan = make_prime_plan(arr.d);
    std::vector<Arrangement> out;
    for (const auto& comp : plan.components) {
        std::vector<Context> contexts = arr.contexts;
        for (auto& c : contexts) c.tau = mod_norm(Int(comp.cofactor) * c.tau, comp.modulus);
        out.push_back(make_arrangement(comp.modulus, arr.labels, std::move(contexts)));
    }
    return out;
}

ClassicalSolution glue(const std::vector<ClassicalSolution>& solutions, const PrimePlan& plan) {
    if (solutions.size() != plan.components.size())
        throw ValidationError("glue", "one solution per prime component required");
    size_t n = solutions.empty() ? 0 : solutions.front().values.size();
    for (const auto& s : solutions)
        if (s.values.size() != n) throw ValidationError("glue", "mismatched label sets");

    ClassicalSolution out;
    out.values.assign(n, 0);
    for (size_t j = 0; j < plan.components.size(); ++j) {
        const PrimeComponent& comp = plan.components[j];
        // CRT basis element d_j w_j is 1 mod p_j^{alpha_j} and 0 at the
        // other components; the j-th coordinate of c is w_j c_j.
        Int basis = Int(comp.cofactor) * comp.weight % plan.d;
        for (size_t i = 0; i < n; ++i) {
            Int coord = Int(comp.weight) * solutions[j].values[i] % comp.modulus;
            out.values[i] = mod_norm(out.values[i] + coord * basis, plan.d);
        }
    }
    return out;
}

}  // namespace magicarr
