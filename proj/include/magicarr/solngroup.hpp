#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magicarr/arrangement.hpp"
#include "magicarr/complex2.hpp"
#include "magicarr/pi1.hpp"
#include "magicarr/presentation.hpp"
#include "magicarr/rewrite.hpp"

namespace magicarr {

/// The solution group G of an arrangement: generators J and g_a, relators
///   J^d, g_a^d, [J, g_a], per-context commutators [g_a, g_b] (quantum case
///   only), and the context products prod g_a = J^{tau(C)}.
/// Generator 0 is always J; generator 1+i is the label arr.labels[i].
struct SolutionGroupPresentation {
    int64_t d = 2;
    bool quantum = true;
    std::vector<std::string> generators;
    std::vector<GroupWord> relators;
};

SolutionGroupPresentation build_solution_group(const Arrangement& arr, bool quantum);

struct RestrictedProductResult {
    bool applicable = false;
    int64_t exponent = 0;   // sum of tau over all contexts, mod 2
    std::string reason;
};

/// Arkhipov's restricted criterion: for restricted arrangements with d = 2
/// the product of all context constraints is J^(sum tau); exponent 0 is
/// equivalent to classical realizability.
RestrictedProductResult restricted_product_check(const Arrangement& arr);

struct RewriteVerdict {
    enum class Status { Identity, JPower, Distinct, Unknown } status = Status::Unknown;
    int64_t j_exponent = 0;  // meaningful for Identity (0) and JPower
    bool system_completed = false;
    size_t rules = 0;
    uint64_t steps = 0;
};

/// Bounded Knuth-Bendix reduction of a word in the solution group. Identity
/// and JPower results are derivations, hence sound even without confluence;
/// Distinct is only claimed from a completed (confluent) system.
RewriteVerdict knuth_bendix(const SolutionGroupPresentation& G, const GroupWord& word,
                            const ResourceLimits& limits);

struct LiftResult {
    enum class Status { Exists, Fails, Unknown } status = Status::Unknown;
    std::string witness;  // failing relator or obstruction note
    std::vector<int64_t> relator_j_exponents;  // reduced J-power per pi1 relator
};

/// Lift test of the projective representation theta: pi1(X) -> G/<J>.
/// Each pi1 relator is pushed to a g-word via the generator loops, reduced
/// in G, and the J-exponent re-phasing system is solved over Z_d.
/// lift-exists is equivalent to classical realizability.
LiftResult theta_lift_check(const Arrangement& arr, const CellComplex2& X, const GroupPresentation& P,
                            const ResourceLimits& limits);

/// Shares the pi1 plain-text export; J is a reserved generator name.
std::string export_solution_group(const SolutionGroupPresentation& G);

}  // namespace magicarr
