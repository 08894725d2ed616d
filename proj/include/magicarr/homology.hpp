#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "magicarr/arrangement.hpp"
#include "magicarr/intmat.hpp"

namespace magicarr {

/// Boundary matrix of D_*(M) over Z (|L| rows, |M| columns) plus its
/// Smith decomposition. The Smith form is computed once over Z and then
/// reduced mod whichever modulus a caller needs.
struct ChainData {
    IntMat boundary;
    int64_t d = 2;
    SmithForm smith;
};

ChainData build_chain(const Arrangement& arr);

/// Value assignment c: L -> Z_d, indexed like arr.labels.
struct ClassicalSolution {
    std::vector<int64_t> values;
};

/// Cocycle obstruction: y over the contexts with y * boundary^T = 0 (mod d)
/// and y * tau != 0 (mod d).
struct InfeasibilityWitness {
    std::vector<int64_t> y;
};

using ClassicalResult = std::variant<ClassicalSolution, InfeasibilityWitness>;

/// Solves dc = tau over Z_d. The returned solution is the lexicographically
/// minimal one in the label order, so outputs are deterministic.
ClassicalResult solve_classical(const Arrangement& arr);

/// Direct evaluation of every context constraint; the re-check used by
/// tests and by glue().
bool check_classical(const Arrangement& arr, const std::vector<int64_t>& c);

enum class OracleStatus { Feasible, Infeasible, TooLarge };

struct OracleResult {
    OracleStatus status = OracleStatus::TooLarge;
    std::optional<ClassicalSolution> solution;
    uint64_t tested = 0;
};

/// Exhaustive search over all d^|L| assignments in lexicographic order.
/// Independent of solve_classical; serves as its oracle.
OracleResult brute_force_classical(const Arrangement& arr, uint64_t cap);

/// Invariant factors of H^2(D(M); Z_d) = coker(delta: D^1 -> D^2), as a list
/// of cyclic orders (d itself for each free Z_d summand). Empty list = 0.
std::vector<int64_t> cohomology_rank(const ChainData& chain, int64_t d);

std::vector<int64_t> tau_vector(const Arrangement& arr);

}  // namespace magicarr
