#pragma once

#include <string>
#include <vector>

#include "magicarr/arrangement.hpp"
#include "magicarr/complex2.hpp"

namespace magicarr {

/// Multigraph with contexts as vertices and labels as edges; defined only
/// for restricted arrangements (every label in exactly two contexts).
struct IntersectionGraph {
    struct Edge {
        size_t u = 0, v = 0;  // context indices
        std::string label;
    };
    std::vector<std::string> vertices;  // context ids, arrangement order
    std::vector<Edge> edges;            // label order
};

IntersectionGraph intersection_graph(const Arrangement& arr);  // throws when not restricted

/// A dart is 2*edge + side: side 0 runs u -> v, side 1 runs v -> u.
/// A rotation system lists the outgoing darts around each vertex.
using RotationSystem = std::vector<std::vector<int>>;

struct PlanarityResult {
    bool planar = false;
    // planar case: a combinatorial embedding, re-verified via face tracing
    RotationSystem embedding;
    size_t face_count = 0;
    bool embedding_verified = false;  // V - E + F == 2 on the rotation system
    // nonplanar case: a Kuratowski subdivision, re-verified by suppression
    std::vector<size_t> kuratowski_edges;  // indices into IntersectionGraph::edges
    std::string witness_kind;              // "K5" or "K3,3"
    bool witness_verified = false;
};

PlanarityResult planarity(const IntersectionGraph& G);

/// Independent witness check: suppress degree-2 vertices and compare the
/// result with K5 / K3,3.
bool verify_kuratowski(const IntersectionGraph& G, const std::vector<size_t>& witness_edges,
                       std::string& kind_out);

/// Face count of a rotation system (for the Euler check V - E + F).
size_t trace_face_count(const IntersectionGraph& G, const RotationSystem& rot);

/// Dual 2-complex of a planar embedding: vertices are the traced faces,
/// edges are the labels, faces are the contexts (rotation order around each
/// context vertex). For a verified sphere embedding the dual is a sphere.
CellComplex2 dual_complex(const IntersectionGraph& G, const PlanarityResult& emb);

enum class TheoremAVerdict { Magic, NonMagic, NotApplicable };

/// Arkhipov's criterion: restricted arrangement with d = 2 is magic iff the
/// intersection graph is non-planar. Everything else routes to the
/// homology / pi1 / solution-group pipeline.
TheoremAVerdict theorem_a_verdict(const Arrangement& arr);

/// Edge-list export, one "u v label" line per edge.
std::string export_graph(const IntersectionGraph& G);

}  // namespace magicarr
