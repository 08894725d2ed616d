#pragma once

#include <cstdint>
#include <vector>

#include "magicarr/arrangement.hpp"
#include "magicarr/homology.hpp"

namespace magicarr {

struct PrimeComponent {
    int64_t p = 2;
    int alpha = 1;
    int64_t modulus = 2;   // p^alpha
    int64_t cofactor = 1;  // d_j = d / p^alpha
    int64_t weight = 1;    // w_j with d_j w_j = 1 mod p^alpha
};

/// d = prod p_i^{alpha_i} with CRT weights; sum_j d_j w_j = 1 mod d.
struct PrimePlan {
    int64_t d = 2;
    std::vector<PrimeComponent> components;
};

PrimePlan make_prime_plan(int64_t d);

/// One reduced arrangement per prime power: d -> p^alpha and
/// tau_j = d_j * tau mod p^alpha. Labels and contexts are unchanged.
std::vector<Arrangement> decompose(const Arrangement& arr);

/// CRT gluing of per-prime solutions: the glued c satisfies c = w_j c_j
/// mod p_j^{alpha_j} for every component, hence solves the original system.
ClassicalSolution glue(const std::vector<ClassicalSolution>& solutions, const PrimePlan& plan);

}  // namespace magicarr
