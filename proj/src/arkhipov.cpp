#include "magicarr/arkhipov.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace magicarr {

IntersectionGraph intersection_graph(const Arrangement& arr) {
    if (!arr.restricted)
        throw ValidationError("arrangement", "intersection graph requires a restricted arrangement");
    IntersectionGraph G;
    for (const auto& c : arr.contexts) G.vertices.push_back(c.id);
    for (const auto& l : arr.labels) {
        std::vector<size_t> in;
        for (size_t ci = 0; ci < arr.contexts.size(); ++ci)
            for (const auto& e : arr.contexts[ci].elements)
                if (e.label == l) in.push_back(ci);
        G.edges.push_back({in[0], in[1], l});
    }
    return G;
}

namespace {

inline int dart(size_t edge, int side) { return static_cast<int>(2 * edge + side); }
inline size_t dart_edge(int d) { return static_cast<size_t>(d / 2); }
inline int dart_side(int d) { return d & 1; }

/// Orbits of next(d) = rotation successor of the reverse dart at head(d).
std::vector<std::vector<int>> trace_faces(const IntersectionGraph& G, const RotationSystem& rot) {
    std::map<int, int> succ;  // dart -> next outgoing dart in rotation at its tail
    std::map<int, std::pair<size_t, size_t>> pos;
    for (size_t v = 0; v < rot.size(); ++v)
        for (size_t i = 0; i < rot[v].size(); ++i) {
            int d = rot[v][i];
            succ[d] = rot[v][(i + 1) % rot[v].size()];
        }
    std::vector<std::vector<int>> faces;
    std::set<int> seen;
    for (size_t e = 0; e < G.edges.size(); ++e)
        for (int s = 0; s < 2; ++s) {
            int d0 = dart(e, s);
            if (seen.count(d0)) continue;
            std::vector<int> face;
            int d = d0;
            while (!seen.count(d)) {
                seen.insert(d);
                face.push_back(d);
                int rev = dart(dart_edge(d), 1 - dart_side(d));
                d = succ.at(rev);
            }
            faces.push_back(std::move(face));
        }
    return faces;
}

bool connected(const IntersectionGraph& G) {
    if (G.vertices.empty()) return true;
    std::vector<char> seen(G.vertices.size(), 0);
    std::vector<size_t> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (const auto& e : G.edges) {
            if (e.u == v && !seen[e.v]) seen[e.v] = 1, stack.push_back(e.v);
            if (e.v == v && !seen[e.u]) seen[e.u] = 1, stack.push_back(e.u);
        }
    }
    return std::count(seen.begin(), seen.end(), 1) == static_cast<long>(G.vertices.size());
}

}  // namespace

size_t trace_face_count(const IntersectionGraph& G, const RotationSystem& rot) {
    return trace_faces(G, rot).size();
}

bool verify_kuratowski(const IntersectionGraph& G, const std::vector<size_t>& witness_edges,
                       std::string& kind_out) {
    // multigraph restricted to the witness, then suppress degree-2 vertices
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t ei : witness_edges) edges.push_back({G.edges[ei].u, G.edges[ei].v});
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<size_t, std::vector<size_t>> incident;  // vertex -> edge positions
        for (size_t i = 0; i < edges.size(); ++i) {
            incident[edges[i].first].push_back(i);
            incident[edges[i].second].push_back(i);
        }
        for (const auto& [v, inc] : incident) {
            if (inc.size() != 2 || inc[0] == inc[1]) continue;  // inc[0]==inc[1]: a loop
            size_t i = inc[0], j = inc[1];
            size_t a = edges[i].first == v ? edges[i].second : edges[i].first;
            size_t b = edges[j].first == v ? edges[j].second : edges[j].first;
            if (a == v || b == v) continue;  // loop at v
            if (a == b) return false;        // suppression would create a parallel pair collapse
            // replace the two edges with a single a-b edge
            std::vector<std::pair<size_t, size_t>> next;
            for (size_t k = 0; k < edges.size(); ++k)
                if (k != i && k != j) next.push_back(edges[k]);
            next.push_back({a, b});
            edges = std::move(next);
            changed = true;
            break;
        }
    }
    // classify the suppressed graph
    std::set<size_t> verts;
    for (const auto& [a, b] : edges) {
        verts.insert(a);
        verts.insert(b);
    }
    std::map<size_t, int> deg;
    std::set<std::pair<size_t, size_t>> simple;
    for (const auto& [a, b] : edges) {
        if (a == b) return false;
        auto key = std::minmax(a, b);
        if (!simple.insert({key.first, key.second}).second) return false;  // parallel edge
        ++deg[a];
        ++deg[b];
    }
    if (verts.size() == 5 && edges.size() == 10) {
        for (size_t v : verts)
            if (deg[v] != 4) return false;
        kind_out = "K5";
        return true;
    }
    if (verts.size() == 6 && edges.size() == 9) {
        for (size_t v : verts)
            if (deg[v] != 3) return false;
        // bipartite completeness: 2-color, then every cross pair present
        std::map<size_t, int> color;
        std::vector<size_t> stack = {*verts.begin()};
        color[*verts.begin()] = 0;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (const auto& [a, b] : edges) {
                if (a != v && b != v) continue;
                size_t w = a == v ? b : a;
                if (!color.count(w)) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
        kind_out = "K3,3";
        return true;
    }
    return false;
}

PlanarityResult planarity(const IntersectionGraph& G) {
    if (!connected(G)) throw ValidationError("graph", "planarity requires a connected multigraph");
    PlanarityResult res;

    // reduce to a simple graph: drop loops, collapse parallel bundles
    std::vector<size_t> loops;
    std::map<std::pair<size_t, size_t>, std::vector<size_t>> bundles;
    for (size_t ei = 0; ei < G.edges.size(); ++ei) {
        const auto& e = G.edges[ei];
        if (e.u == e.v) {
            loops.push_back(ei);
            continue;
        }
        auto key = std::minmax(e.u, e.v);
        bundles[{key.first, key.second}].push_back(ei);
    }

    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                              boost::property<boost::edge_index_t, int>>;
    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    BoostGraph bg(G.vertices.size());
    std::vector<size_t> rep_edges;  // boost edge index -> our edge index
    for (const auto& [key, bundle] : bundles) {
        boost::add_edge(key.first, key.second, static_cast<int>(rep_edges.size()), bg);
        rep_edges.push_back(bundle.front());
    }

    std::vector<std::vector<EdgeDesc>> embedding_storage(boost::num_vertices(bg));
    std::vector<EdgeDesc> kuratowski;
    bool planar = boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding_storage.begin(), boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    if (!planar) {
        res.planar = false;
        auto index = boost::get(boost::edge_index, bg);
        std::set<size_t> wit;
        for (const EdgeDesc& ed : kuratowski) wit.insert(rep_edges[index[ed]]);
        res.kuratowski_edges.assign(wit.begin(), wit.end());
        res.witness_verified = verify_kuratowski(G, res.kuratowski_edges, res.witness_kind);
        return res;
    }

    res.planar = true;
    // rotation system of the simple graph from the boost embedding
    RotationSystem rot(G.vertices.size());
    auto index = boost::get(boost::edge_index, bg);
    for (size_t v = 0; v < G.vertices.size(); ++v) {
        for (const EdgeDesc& ed : embedding_storage[v]) {
            size_t ei = rep_edges[index[ed]];
            int side = G.edges[ei].u == v ? 0 : 1;
            rot[v].push_back(dart(ei, side));
        }
    }
    // reinsert parallel edges as bigons alongside their representative:
    // at u just before (rep,0), at v just after (rep,1)
    for (const auto& [key, bundle] : bundles) {
        for (size_t bi = 1; bi < bundle.size(); ++bi) {
            size_t rep = bundle.front(), extra = bundle[bi];
            size_t u = G.edges[rep].u, v = G.edges[rep].v;
            auto& ru = rot[u];
            ru.insert(std::find(ru.begin(), ru.end(), dart(rep, 0)), dart(extra, 0));
            auto& rv = rot[v];
            rv.insert(std::next(std::find(rv.begin(), rv.end(), dart(rep, 1))), dart(extra, 1));
        }
    }
    // self-loops become monogons: the pair (loop,1),(loop,0) appended
    for (size_t ei : loops) {
        size_t v = G.edges[ei].u;
        rot[v].push_back(dart(ei, 1));
        rot[v].push_back(dart(ei, 0));
    }

    res.embedding = rot;
    res.face_count = trace_face_count(G, rot);
    int64_t chi = static_cast<int64_t>(G.vertices.size()) - static_cast<int64_t>(G.edges.size()) +
                  static_cast<int64_t>(res.face_count);
    res.embedding_verified = (chi == 2);
    return res;
}

CellComplex2 dual_complex(const IntersectionGraph& G, const PlanarityResult& emb) {
    if (!emb.planar || !emb.embedding_verified)
        throw ValidationError("embedding", "dual complex needs a verified planar embedding");
    auto faces = trace_faces(G, emb.embedding);
    std::map<int, size_t> face_of;  // dart -> face index
    for (size_t fi = 0; fi < faces.size(); ++fi)
        for (int d : faces[fi]) face_of[d] = fi;

    std::vector<std::string> vertices;
    for (size_t fi = 0; fi < faces.size(); ++fi) vertices.push_back("f" + std::to_string(fi));
    std::vector<EdgeData> edges;
    for (size_t ei = 0; ei < G.edges.size(); ++ei)
        edges.push_back({G.edges[ei].label, "f" + std::to_string(face_of.at(dart(ei, 0))),
                         "f" + std::to_string(face_of.at(dart(ei, 1)))});
    std::vector<Face> dfaces;
    for (size_t v = 0; v < G.vertices.size(); ++v) {
        Face f;
        f.context = G.vertices[v];
        for (int d : emb.embedding[v])
            f.word.push_back({G.edges[dart_edge(d)].label, dart_side(d) == 0 ? 1 : -1});
        dfaces.push_back(std::move(f));
    }
    return make_complex(std::move(vertices), std::move(edges), std::move(dfaces));
}

TheoremAVerdict theorem_a_verdict(const Arrangement& arr) {
    if (!arr.restricted || arr.d != 2) return TheoremAVerdict::NotApplicable;
    PlanarityResult pr = planarity(intersection_graph(arr));
    return pr.planar ? TheoremAVerdict::NonMagic : TheoremAVerdict::Magic;
}

std::string export_graph(const IntersectionGraph& G) {
    std::ostringstream os;
    for (const auto& e : G.edges) os << G.vertices[e.u] << " " << G.vertices[e.v] << " " << e.label << "\n";
    return os.str();
}

}  // namespace magicarr
