#include "magicarr/complex2.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace magicarr {

using nlohmann::json;
using nlohmann::ordered_json;

size_t CellComplex2::vertex_at(const std::string& id) const {
    auto it = vertex_index.find(id);
    if (it == vertex_index.end()) throw ValidationError("vertices", "unknown vertex '" + id + "'");
    return it->second;
}

size_t CellComplex2::edge_at(const std::string& id) const {
    auto it = edge_index.find(id);
    if (it == edge_index.end()) throw ValidationError("edges", "unknown edge '" + id + "'");
    return it->second;
}

size_t CellComplex2::step_source(const FaceStep& s) const {
    const EdgeData& e = edges[edge_at(s.edge)];
    return vertex_at(s.exp == 1 ? e.src : e.tgt);
}

size_t CellComplex2::step_target(const FaceStep& s) const {
    const EdgeData& e = edges[edge_at(s.edge)];
    return vertex_at(s.exp == 1 ? e.tgt : e.src);
}

CellComplex2 make_complex(std::vector<std::string> vertices, std::vector<EdgeData> edges,
                          std::vector<Face> faces) {
    CellComplex2 X;
    X.vertices = std::move(vertices);
    X.edges = std::move(edges);
    X.faces = std::move(faces);

    if (X.vertices.empty()) throw ValidationError("vertices", "complex needs at least one vertex");
    for (size_t i = 0; i < X.vertices.size(); ++i) {
        if (X.vertices[i].empty()) throw ValidationError("vertices[" + std::to_string(i) + "]", "empty id");
        if (!X.vertex_index.emplace(X.vertices[i], i).second)
            throw ValidationError("vertices[" + std::to_string(i) + "]", "duplicate vertex id");
    }
    for (size_t i = 0; i < X.edges.size(); ++i) {
        const EdgeData& e = X.edges[i];
        std::string where = "edges[" + std::to_string(i) + "]";
        if (e.id.empty()) throw ValidationError(where, "empty edge id");
        if (!X.edge_index.emplace(e.id, i).second)
            throw ValidationError(where, "duplicate edge id '" + e.id + "'");
        if (!X.vertex_index.count(e.src)) throw ValidationError(where, "unknown source '" + e.src + "'");
        if (!X.vertex_index.count(e.tgt)) throw ValidationError(where, "unknown target '" + e.tgt + "'");
    }
    std::set<std::string> face_ids;
    for (size_t fi = 0; fi < X.faces.size(); ++fi) {
        const Face& f = X.faces[fi];
        std::string where = "faces[" + std::to_string(fi) + "]";
        if (f.context.empty()) throw ValidationError(where, "empty face id");
        if (!face_ids.insert(f.context).second)
            throw ValidationError(where, "duplicate face id '" + f.context + "'");
        if (f.word.empty()) throw ValidationError(where, "empty boundary word");
        for (size_t si = 0; si < f.word.size(); ++si) {
            const FaceStep& s = f.word[si];
            std::string swhere = where + ".word[" + std::to_string(si) + "]";
            if (!X.edge_index.count(s.edge)) throw ValidationError(swhere, "unknown edge '" + s.edge + "'");
            if (s.exp != 1 && s.exp != -1) throw ValidationError(swhere, "exponent must be 1 or -1");
        }
        // closed edge path
        for (size_t si = 0; si < f.word.size(); ++si) {
            size_t tgt = X.step_target(f.word[si]);
            size_t nxt = X.step_source(f.word[(si + 1) % f.word.size()]);
            if (tgt != nxt)
                throw ValidationError(where, "boundary word is not a closed edge path at step " +
                                                 std::to_string(si));
        }
    }
    // connectivity over the 1-skeleton
    std::vector<char> seen(X.vertices.size(), 0);
    std::vector<size_t> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (const EdgeData& e : X.edges) {
            size_t a = X.vertex_at(e.src), b = X.vertex_at(e.tgt);
            if (a == v && !seen[b]) seen[b] = 1, stack.push_back(b);
            if (b == v && !seen[a]) seen[a] = 1, stack.push_back(a);
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(X.vertices.size()))
        throw ValidationError("vertices", "complex is not connected");
    return X;
}

CellComplex2 build_single_vertex(const Arrangement& arr) {
    std::vector<EdgeData> edges;
    for (const auto& l : arr.labels) edges.push_back({l, "v", "v"});
    std::vector<Face> faces;
    for (const auto& c : arr.contexts) {
        Face f;
        f.context = c.id;
        for (const auto& e : c.elements) f.word.push_back({e.label, e.sign});
        faces.push_back(std::move(f));
    }
    return make_complex({"v"}, std::move(edges), std::move(faces));
}

std::vector<RealizationViolation> validate_realization(const Arrangement& arr, const CellComplex2& X,
                                                       RealizationMode mode) {
    std::vector<RealizationViolation> out;
    // edge ids must biject with labels
    if (X.edges.size() != arr.labels.size())
        out.push_back({"edges", "edge count differs from label count"});
    for (const auto& e : X.edges)
        if (!arr.label_index.count(e.id)) out.push_back({e.id, "edge id is not a label"});
    // face ids must biject with contexts
    if (X.faces.size() != arr.contexts.size())
        out.push_back({"faces", "face count differs from context count"});
    std::set<std::string> seen_ctx;
    for (const auto& f : X.faces) {
        if (!arr.context_index.count(f.context)) {
            out.push_back({f.context, "face id is not a context"});
            continue;
        }
        seen_ctx.insert(f.context);
        const Context& c = arr.contexts[arr.context_at(f.context)];
        if (mode == RealizationMode::Topological) {
            // exact ordered signed list, up to rotation of the closed word
            if (f.word.size() != c.elements.size()) {
                out.push_back({f.context, "word length differs from context size"});
                continue;
            }
            const size_t n = f.word.size();
            bool match = false;
            for (size_t r = 0; r < n && !match; ++r) {
                bool ok = true;
                for (size_t i = 0; i < n && ok; ++i) {
                    const FaceStep& s = f.word[(r + i) % n];
                    ok = s.edge == c.elements[i].label && s.exp == c.elements[i].sign;
                }
                match = ok;
            }
            if (!match) out.push_back({f.context, "word does not spell the context (any rotation)"});
        } else {
            // chain-level agreement: same label set, exponents a unit multiple
            // of the context signs mod d
            std::map<std::string, int64_t> want, got;
            for (const auto& e : c.elements) want[e.label] = e.sign;
            for (const auto& s : f.word) {
                if (got.count(s.edge)) {
                    got[s.edge] += s.exp;  // repeated use is already suspicious
                } else {
                    got[s.edge] = s.exp;
                }
            }
            if (got.size() != want.size() || f.word.size() != c.elements.size()) {
                out.push_back({f.context, "word labels differ from context labels"});
                continue;
            }
            bool labels_ok = true;
            for (const auto& [k, v] : want)
                if (!got.count(k)) labels_ok = false;
            if (!labels_ok) {
                out.push_back({f.context, "word labels differ from context labels"});
                continue;
            }
            bool any = false;
            for (int64_t u = 1; u < arr.d && !any; ++u) {
                if (gcd64(u, arr.d) != 1) continue;
                bool ok = true;
                for (const auto& [k, v] : want)
                    if (mod_norm(got[k] - u * v, arr.d) != 0) ok = false;
                any = ok;
            }
            if (!any)
                out.push_back({f.context, "word exponents are not a unit multiple of the context signs"});
        }
    }
    // face/context bijection: every context must be covered
    for (const auto& c : arr.contexts)
        if (!seen_ctx.count(c.id) && X.faces.size() == arr.contexts.size())
            out.push_back({c.id, "context has no face"});
    return out;
}

namespace {

struct EdgeUse {
    size_t face;
    int exp;
};

}  // namespace

SurfaceReport surface_report(const CellComplex2& X) {
    SurfaceReport rep;
    rep.euler = static_cast<int64_t>(X.vertices.size()) - static_cast<int64_t>(X.edges.size()) +
                static_cast<int64_t>(X.faces.size());

    std::vector<std::vector<EdgeUse>> uses(X.edges.size());
    for (size_t fi = 0; fi < X.faces.size(); ++fi)
        for (const auto& s : X.faces[fi].word) uses[X.edge_at(s.edge)].push_back({fi, s.exp});

    bool twice = true;
    for (const auto& u : uses)
        if (u.size() != 2) twice = false;

    // vertex links: corners between consecutive steps of each face word.
    // An edge end is (edge, 0|1) for the source/target end.
    bool links_ok = twice;
    if (twice) {
        size_t V = X.vertices.size();
        std::vector<std::vector<std::pair<size_t, int>>> ends(V);  // (edge, end)
        for (size_t ei = 0; ei < X.edges.size(); ++ei) {
            ends[X.vertex_at(X.edges[ei].src)].push_back({ei, 0});
            ends[X.vertex_at(X.edges[ei].tgt)].push_back({ei, 1});
        }
        // corner (in-end, out-end) at the meeting vertex
        std::vector<std::vector<std::pair<std::pair<size_t, int>, std::pair<size_t, int>>>> corners(V);
        for (const Face& f : X.faces) {
            const size_t n = f.word.size();
            for (size_t i = 0; i < n; ++i) {
                const FaceStep& a = f.word[i];
                const FaceStep& b = f.word[(i + 1) % n];
                size_t v = X.step_target(a);
                std::pair<size_t, int> in_end = {X.edge_at(a.edge), a.exp == 1 ? 1 : 0};
                std::pair<size_t, int> out_end = {X.edge_at(b.edge), b.exp == 1 ? 0 : 1};
                corners[v].push_back({in_end, out_end});
            }
        }
        for (size_t v = 0; v < V && links_ok; ++v) {
            std::map<std::pair<size_t, int>, std::vector<std::pair<size_t, int>>> adj;
            std::map<std::pair<size_t, int>, int> deg;
            for (const auto& [a, b] : corners[v]) {
                adj[a].push_back(b);
                adj[b].push_back(a);
                ++deg[a];
                ++deg[b];
            }
            if (ends[v].empty()) {
                links_ok = false;
                break;
            }
            if (corners[v].size() != ends[v].size()) {
                links_ok = false;
                break;
            }
            for (const auto& e : ends[v])
                if (deg[e] != 2) links_ok = false;
            if (!links_ok) break;
            // connected?
            std::set<std::pair<size_t, int>> seen;
            std::vector<std::pair<size_t, int>> stack = {ends[v][0]};
            seen.insert(ends[v][0]);
            while (!stack.empty()) {
                auto cur = stack.back();
                stack.pop_back();
                for (const auto& nb : adj[cur])
                    if (seen.insert(nb).second) stack.push_back(nb);
            }
            if (seen.size() != ends[v].size()) links_ok = false;
        }
    }
    rep.is_closed_surface = twice && links_ok;

    if (!rep.is_closed_surface) {
        rep.orientable = SurfaceReport::Orientable::Unknown;
        return rep;
    }

    // coherent orientation search: faces sharing an edge with opposite
    // traversal directions keep the same class, same direction forces a flip
    size_t F = X.faces.size();
    std::vector<int> color(F, -1);
    std::vector<std::vector<std::pair<size_t, int>>> fadj(F);  // (face, parity)
    bool orientable = true;
    for (const auto& u : uses) {
        size_t f1 = u[0].face, f2 = u[1].face;
        int parity = u[0].exp != u[1].exp ? 0 : 1;
        if (f1 == f2) {
            if (parity == 1) orientable = false;
        } else {
            fadj[f1].push_back({f2, parity});
            fadj[f2].push_back({f1, parity});
        }
    }
    for (size_t f = 0; f < F && orientable; ++f) {
        if (color[f] != -1) continue;
        color[f] = 0;
        std::vector<size_t> stack = {f};
        while (!stack.empty() && orientable) {
            size_t cur = stack.back();
            stack.pop_back();
            for (const auto& [nb, parity] : fadj[cur]) {
                int want = color[cur] ^ parity;
                if (color[nb] == -1) {
                    color[nb] = want;
                    stack.push_back(nb);
                } else if (color[nb] != want) {
                    orientable = false;
                }
            }
        }
    }
    rep.orientable = orientable ? SurfaceReport::Orientable::Yes : SurfaceReport::Orientable::No;
    rep.genus = orientable ? (2 - rep.euler) / 2 : (2 - rep.euler);
    return rep;
}

CellComplex2 reverse_orientation(const CellComplex2& X) {
    std::vector<EdgeData> edges = X.edges;
    std::vector<Face> faces;
    for (const auto& f : X.faces) {
        Face g;
        g.context = f.context;
        for (auto it = f.word.rbegin(); it != f.word.rend(); ++it) g.word.push_back({it->edge, -it->exp});
        faces.push_back(std::move(g));
    }
    return make_complex(X.vertices, std::move(edges), std::move(faces));
}

IntMat boundary_matrix(const CellComplex2& X) {
    IntMat B(X.edges.size(), X.faces.size());
    for (size_t fi = 0; fi < X.faces.size(); ++fi)
        for (const auto& s : X.faces[fi].word) B.at(X.edge_at(s.edge), fi) += s.exp;
    return B;
}

CellComplex2 parse_realization(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_object()) throw ParseError("$", "expected a JSON object");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "vertices" && it.key() != "edges" && it.key() != "faces")
            throw ParseError("$", "unknown key '" + it.key() + "'");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("vertices", "missing or not an array");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("edges", "missing or not an array");
    if (!doc.contains("faces") || !doc["faces"].is_array()) throw ParseError("faces", "missing or not an array");

    std::vector<std::string> vertices;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw ParseError("vertices", "expected strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<EdgeData> edges;
    for (size_t i = 0; i < doc["edges"].size(); ++i) {
        const auto& e = doc["edges"][i];
        std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_object()) throw ParseError(where, "expected an object");
        for (auto it = e.begin(); it != e.end(); ++it)
            if (it.key() != "id" && it.key() != "source" && it.key() != "target")
                throw ParseError(where, "unknown key '" + it.key() + "'");
        if (!e.contains("id") || !e["id"].is_string()) throw ParseError(where + ".id", "missing or not a string");
        if (!e.contains("source") || !e["source"].is_string())
            throw ParseError(where + ".source", "missing or not a string");
        if (!e.contains("target") || !e["target"].is_string())
            throw ParseError(where + ".target", "missing or not a string");
        edges.push_back({e["id"].get<std::string>(), e["source"].get<std::string>(), e["target"].get<std::string>()});
    }
    std::vector<Face> faces;
    for (size_t i = 0; i < doc["faces"].size(); ++i) {
        const auto& f = doc["faces"][i];
        std::string where = "faces[" + std::to_string(i) + "]";
        if (!f.is_object()) throw ParseError(where, "expected an object");
        for (auto it = f.begin(); it != f.end(); ++it)
            if (it.key() != "context" && it.key() != "word") throw ParseError(where, "unknown key '" + it.key() + "'");
        if (!f.contains("context") || !f["context"].is_string())
            throw ParseError(where + ".context", "missing or not a string");
        if (!f.contains("word") || !f["word"].is_array())
            throw ParseError(where + ".word", "missing or not an array");
        Face face;
        face.context = f["context"].get<std::string>();
        for (size_t si = 0; si < f["word"].size(); ++si) {
            const auto& s = f["word"][si];
            std::string swhere = where + ".word[" + std::to_string(si) + "]";
            if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_number_integer())
                throw ParseError(swhere, "expected [edge, exponent]");
            face.word.push_back({s[0].get<std::string>(), s[1].get<int>()});
        }
        faces.push_back(std::move(face));
    }
    return make_complex(std::move(vertices), std::move(edges), std::move(faces));
}

std::string serialize_realization(const CellComplex2& X) {
    ordered_json doc;
    doc["vertices"] = X.vertices;
    doc["edges"] = ordered_json::array();
    for (const auto& e : X.edges)
        doc["edges"].push_back({{"id", e.id}, {"source", e.src}, {"target", e.tgt}});
    doc["faces"] = ordered_json::array();
    for (const auto& f : X.faces) {
        ordered_json jf;
        jf["context"] = f.context;
        jf["word"] = ordered_json::array();
        for (const auto& s : f.word) jf["word"].push_back({s.edge, s.exp});
        doc["faces"].push_back(std::move(jf));
    }
    return doc.dump(2) + "\n";
}

}  // namespace magicarr
