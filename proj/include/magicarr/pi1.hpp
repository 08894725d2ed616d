#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magicarr/arrangement.hpp"
#include "magicarr/complex2.hpp"
#include "magicarr/presentation.hpp"

namespace magicarr {

/// Presentation of pi_1(X, basepoint) read off a maximal tree: one free
/// generator per non-tree edge, one relator per face. Origin data keeps the
/// geometry: each generator's loop through the tree, each relator's face and
/// conjugating tree path.
struct GroupPresentation {
    std::vector<std::string> generators;             // named by their non-tree edge
    std::vector<GroupWord> relators;
    std::vector<std::string> generator_edge;         // generator -> edge id
    std::vector<std::vector<FaceStep>> generator_loop;  // tree path . edge . tree path
    std::vector<std::string> relator_face;           // relator -> face id
    std::vector<std::vector<FaceStep>> relator_path;  // gamma: basepoint -> face start
};

/// Deterministic: the spanning tree is grown breadth-first from the
/// basepoint with lexicographic edge-id tie-breaking, generators are listed
/// in lexicographic edge order, relators in face order.
GroupPresentation presentation(const CellComplex2& X, const std::string& basepoint);

/// Invariant factors of H_1 = F/[im d] abelianized; nontrivial torsion
/// factors first (divisibility order), one 0 per free summand.
std::vector<int64_t> abelianization(const GroupPresentation& P);

struct TrivialityVerdict {
    enum class Status { Trivial, Nontrivial, Unknown } status = Status::Unknown;
    std::string evidence;
};

TrivialityVerdict triviality(const GroupPresentation& P, const ResourceLimits& limits);

struct FiniteOrderResult {
    std::optional<uint64_t> order;  // nullopt = infinite-or-unknown
    std::string note;
};

FiniteOrderResult finite_order(const GroupPresentation& P, const ResourceLimits& limits);

enum class CoprimeVerdict { NonMagicCertified, Inconclusive };

/// Non-magic when pi_1 is finite of order coprime to d.
CoprimeVerdict coprime_criterion(const Arrangement& arr, const GroupPresentation& P,
                                 const ResourceLimits& limits);

/// Plain-text export: "gens: a b c" then one relator per line.
std::string export_presentation(const GroupPresentation& P);

}  // namespace magicarr
