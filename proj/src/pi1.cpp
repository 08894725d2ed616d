#include "magicarr/pi1.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "magicarr/coset.hpp"
#include "magicarr/intmat.hpp"

namespace magicarr {

GroupPresentation presentation(const CellComplex2& X, const std::string& basepoint) {
    const size_t V = X.vertices.size();
    size_t root = X.vertex_at(basepoint);

    // BFS tree; candidate edges at each vertex visited in lexicographic
    // edge-id order so the tree is reproducible
    std::vector<size_t> order(X.edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return X.edges[a].id < X.edges[b].id; });

    std::vector<int> parent_edge(V, -1);  // tree edge index leading back toward the root
    std::vector<int> parent_dir(V, 0);    // +1: tree edge points away from root at this vertex
    std::vector<char> visited(V, 0);
    std::vector<char> in_tree(X.edges.size(), 0);
    std::queue<size_t> bfs;
    visited[root] = 1;
    bfs.push(root);
    while (!bfs.empty()) {
        size_t v = bfs.front();
        bfs.pop();
        for (size_t ei : order) {
            const EdgeData& e = X.edges[ei];
            size_t a = X.vertex_at(e.src), b = X.vertex_at(e.tgt);
            if (a == v && !visited[b]) {
                visited[b] = 1;
                in_tree[ei] = 1;
                parent_edge[b] = static_cast<int>(ei);
                parent_dir[b] = 1;  // traversed src->tgt going away from root
                bfs.push(b);
            } else if (b == v && !visited[a]) {
                visited[a] = 1;
                in_tree[ei] = 1;
                parent_edge[a] = static_cast<int>(ei);
                parent_dir[a] = -1;
                bfs.push(a);
            }
        }
    }

    // tree path root -> v as face steps
    auto path_from_root = [&](size_t v) {
        std::vector<FaceStep> rev;
        size_t cur = v;
        while (cur != root) {
            int ei = parent_edge[cur];
            rev.push_back({X.edges[ei].id, parent_dir[cur]});
            const EdgeData& e = X.edges[ei];
            cur = parent_dir[cur] == 1 ? X.vertex_at(e.src) : X.vertex_at(e.tgt);
        }
        std::reverse(rev.begin(), rev.end());
        return rev;
    };
    auto invert_path = [](const std::vector<FaceStep>& p) {
        std::vector<FaceStep> out;
        for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back({it->edge, -it->exp});
        return out;
    };

    GroupPresentation P;
    std::map<std::string, int> gen_of_edge;
    for (size_t ei : order) {
        if (in_tree[ei]) continue;
        const EdgeData& e = X.edges[ei];
        gen_of_edge[e.id] = static_cast<int>(P.generators.size());
        P.generators.push_back(e.id);
        P.generator_edge.push_back(e.id);
        std::vector<FaceStep> loop = path_from_root(X.vertex_at(e.src));
        loop.push_back({e.id, 1});
        auto back = invert_path(path_from_root(X.vertex_at(e.tgt)));
        loop.insert(loop.end(), back.begin(), back.end());
        P.generator_loop.push_back(std::move(loop));
    }

    for (const Face& f : X.faces) {
        GroupWord rel;
        for (const FaceStep& s : f.word) {
            auto it = gen_of_edge.find(s.edge);
            if (it == gen_of_edge.end()) continue;  // tree edges vanish under the collapse
            rel.push_back({it->second, s.exp});
        }
        P.relators.push_back(free_reduce(rel));
        P.relator_face.push_back(f.context);
        P.relator_path.push_back(path_from_root(X.step_source(f.word.front())));
    }
    return P;
}

std::vector<int64_t> abelianization(const GroupPresentation& P) {
    IntMat R(P.generators.size(), P.relators.size());
    for (size_t j = 0; j < P.relators.size(); ++j)
        for (const Letter& l : P.relators[j]) R.at(l.gen, j) += l.exp;
    SmithForm sf = smith_normal_form(R);
    std::vector<int64_t> out;
    for (const Int& s : sf.diag)
        if (s != 1) out.push_back(static_cast<int64_t>(s));
    for (size_t i = sf.rank; i < P.generators.size(); ++i) out.push_back(0);
    return out;
}

TrivialityVerdict triviality(const GroupPresentation& P, const ResourceLimits& limits) {
    TrivialityVerdict v;
    std::vector<int64_t> ab = abelianization(P);
    if (!ab.empty()) {
        v.status = TrivialityVerdict::Status::Nontrivial;
        std::ostringstream os;
        os << "abelianization invariant factors:";
        for (int64_t f : ab) os << " " << f;
        v.evidence = os.str();
        return v;
    }
    CosetResult cr = coset_enumerate(P.generators.size(), P.relators, limits.coset_rows);
    if (cr.completed && cr.index == 1) {
        v.status = TrivialityVerdict::Status::Trivial;
        v.evidence = "coset enumeration completed with index 1";
    } else if (cr.completed) {
        v.status = TrivialityVerdict::Status::Nontrivial;
        v.evidence = "coset enumeration completed with index " + std::to_string(cr.index);
    } else {
        v.status = TrivialityVerdict::Status::Unknown;
        v.evidence = "coset enumeration exceeded " + std::to_string(limits.coset_rows) + " rows";
    }
    return v;
}

FiniteOrderResult finite_order(const GroupPresentation& P, const ResourceLimits& limits) {
    FiniteOrderResult res;
    std::vector<int64_t> ab = abelianization(P);
    size_t free_rank = std::count(ab.begin(), ab.end(), 0);
    if (free_rank > 0) {
        res.note = "infinite: H1 has free rank " + std::to_string(free_rank);
        return res;
    }
    CosetResult cr = coset_enumerate(P.generators.size(), P.relators, limits.coset_rows);
    if (cr.completed) {
        res.order = cr.index;
        res.note = "coset enumeration completed";
    } else {
        res.note = "coset enumeration exceeded " + std::to_string(limits.coset_rows) + " rows";
    }
    return res;
}

CoprimeVerdict coprime_criterion(const Arrangement& arr, const GroupPresentation& P,
                                 const ResourceLimits& limits) {
    FiniteOrderResult fo = finite_order(P, limits);
    if (fo.order && gcd64(static_cast<int64_t>(*fo.order), arr.d) == 1)
        return CoprimeVerdict::NonMagicCertified;
    return CoprimeVerdict::Inconclusive;
}

std::string export_presentation(const GroupPresentation& P) {
    std::ostringstream os;
    os << "gens:";
    for (const auto& g : P.generators) os << " " << g;
    os << "\n";
    for (const GroupWord& r : P.relators) {
        bool first = true;
        for (const Letter& l : r) {
            if (!first) os << " ";
            first = false;
            os << P.generators[l.gen];
            if (l.exp == -1) os << "^-1";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace magicarr
