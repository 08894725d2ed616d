#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "magicarr/arrangement.hpp"
#include "magicarr/complex2.hpp"

namespace magicarr {

/// Exact n-qudit Weyl-Heisenberg operator
///     tau^phase * tensor_k X^{a_k} Z^{b_k}
/// with tau = e^{i pi / d} and omega = tau^2. The phase lives mod 2d because
/// products such as XZ have order 2d when d is even; constraint scalars
/// omega^k embed as the even residues 2k.
///
/// Multiplication convention, per site: Z X = omega X Z, so
///     X^a Z^b * X^{a'} Z^{b'} = omega^{a' b} X^{a+a'} Z^{b+b'} .
struct PauliOp {
    int64_t d = 2;
    int64_t phase = 0;                               // mod 2d
    std::vector<std::pair<int64_t, int64_t>> sites;  // (a_k, b_k) mod d

    size_t qudits() const { return sites.size(); }
    bool operator==(const PauliOp& o) const = default;
};

PauliOp pauli_identity(int64_t d, size_t n);
PauliOp multiply(const PauliOp& p, const PauliOp& q);  // throws on dimension mismatch
PauliOp inverse(const PauliOp& p);
PauliOp power(const PauliOp& p, int64_t m);

bool is_identity(const PauliOp& p);
/// True when p = omega^k * I, i.e. all site exponents vanish and the phase
/// is the even residue 2k.
bool is_scalar_omega(const PauliOp& p, int64_t k);
/// The omega exponent when p is a scalar (all site exponents zero, even
/// phase); throws otherwise.
int64_t scalar_omega_exponent(const PauliOp& p);

bool order_divides_d(const PauliOp& p);
/// Symplectic test: 0 = sum_k (a_k b'_k - b_k a'_k) mod d.
bool commutes(const PauliOp& p, const PauliOp& q);

struct OperatorAssignment {
    int64_t d = 2;
    size_t n = 1;
    std::map<std::string, PauliOp> ops;
};

OperatorAssignment parse_operators(const std::string& text);
std::string serialize_operators(const OperatorAssignment& T);

struct OperatorViolation {
    std::string where;  // label or context id
    std::string detail;
};

/// (T_a)^d = I for every label and each context's ordered signed product
/// equals omega^{tau(C)}.
std::vector<OperatorViolation> verify_operator_realization(const Arrangement& arr,
                                                           const OperatorAssignment& T);
/// verify_operator_realization plus pairwise commutation within contexts.
std::vector<OperatorViolation> verify_quantum_realization(const Arrangement& arr,
                                                          const OperatorAssignment& T);

/// Ordered product over a combinatorial path; the empty path gives the
/// identity. Steps must chain head-to-tail in X.
PauliOp path_operator(const OperatorAssignment& T, const CellComplex2& X,
                      const std::vector<FaceStep>& path);

/// For every face of X the path operator of its boundary word must equal
/// omega^{tau(C)}.
std::vector<OperatorViolation> check_face_identity(const OperatorAssignment& T, const CellComplex2& X,
                                                   const Arrangement& arr);

/// Raise a quantum realization to the m-th power; the matching constraint
/// cochain is m*tau. Rejects assignments that fail quantum verification.
struct PoweredRealization {
    OperatorAssignment ops;
    Arrangement arr;  // same arrangement with tau scaled by m
};
PoweredRealization power_realization(const Arrangement& arr, const OperatorAssignment& T, int64_t m);

}  // namespace magicarr
