#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magicarr/arrangement.hpp"
#include "magicarr/intmat.hpp"

namespace magicarr {

struct EdgeData {
    std::string id;  // in realizations the edge id is the label
    std::string src;
    std::string tgt;
};

struct FaceStep {
    std::string edge;
    int exp = 1;  // +1 or -1
};

struct Face {
    std::string context;  // face id; in realizations this is the context id
    std::vector<FaceStep> word;
};

/// A combinatorial 2-complex. Every boundary word is a closed edge path and
/// the complex is connected; both are enforced at construction.
struct CellComplex2 {
    std::vector<std::string> vertices;
    std::vector<EdgeData> edges;
    std::vector<Face> faces;

    std::unordered_map<std::string, size_t> vertex_index;
    std::unordered_map<std::string, size_t> edge_index;

    size_t vertex_at(const std::string& id) const;
    size_t edge_at(const std::string& id) const;
    /// Vertex the step starts at / ends at.
    size_t step_source(const FaceStep& s) const;
    size_t step_target(const FaceStep& s) const;
};

CellComplex2 make_complex(std::vector<std::string> vertices, std::vector<EdgeData> edges,
                          std::vector<Face> faces);

CellComplex2 parse_realization(const std::string& text);
std::string serialize_realization(const CellComplex2& X);

/// One vertex, a loop per label, a face per context spelling the context's
/// ordered signed label list.
CellComplex2 build_single_vertex(const Arrangement& arr);

enum class RealizationMode { Topological, Commutative };

struct RealizationViolation {
    std::string where;   // face/edge id
    std::string detail;
};

/// Topological mode: each face word must equal the context's ordered signed
/// list up to rotation of the closed word. Commutative mode: the face word
/// must use exactly the context's labels, with exponents a Z_d-unit multiple
/// of the context's signs (the chain-level relaxation; orientation reversal
/// is the motivating example).
std::vector<RealizationViolation> validate_realization(const Arrangement& arr, const CellComplex2& X,
                                                       RealizationMode mode);

struct SurfaceReport {
    int64_t euler = 0;
    bool is_closed_surface = false;
    enum class Orientable { Yes, No, Unknown } orientable = Orientable::Unknown;
    std::optional<int64_t> genus;  // cross-cap count when non-orientable
};

SurfaceReport surface_report(const CellComplex2& X);

/// Orientation reversal of the 2-cells: every boundary word reversed with
/// exponents negated, so the boundary matrix of the result is the negation
/// of the original. An involution.
CellComplex2 reverse_orientation(const CellComplex2& X);

/// Boundary matrix of the 2-cells in the label basis (|E| x |F| over Z).
IntMat boundary_matrix(const CellComplex2& X);

}  // namespace magicarr
