#include "magicarr/pauli.hpp"

#include <json.hpp>

#include "magicarr/intmat.hpp"

namespace magicarr {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

int64_t norm(int64_t v, int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

}  // namespace

PauliOp pauli_identity(int64_t d, size_t n) {
    PauliOp p;
    p.d = d;
    p.phase = 0;
    p.sites.assign(n, {0, 0});
    return p;
}

PauliOp multiply(const PauliOp& p, const PauliOp& q) {
    if (p.d != q.d || p.sites.size() != q.sites.size())
        throw ValidationError("pauli", "dimension mismatch in operator product");
    PauliOp r;
    r.d = p.d;
    int64_t cross = 0;
    r.sites.resize(p.sites.size());
    for (size_t k = 0; k < p.sites.size(); ++k) {
        const auto& [a, b] = p.sites[k];
        const auto& [a2, b2] = q.sites[k];
        cross = norm(cross + b * a2, p.d);
        r.sites[k] = {norm(a + a2, p.d), norm(b + b2, p.d)};
    }
    r.phase = norm(p.phase + q.phase + 2 * cross, 2 * p.d);
    return r;
}

PauliOp inverse(const PauliOp& p) {
    PauliOp r;
    r.d = p.d;
    int64_t cross = 0;
    r.sites.resize(p.sites.size());
    for (size_t k = 0; k < p.sites.size(); ++k) {
        const auto& [a, b] = p.sites[k];
        cross = norm(cross + a * b, p.d);
        r.sites[k] = {norm(-a, p.d), norm(-b, p.d)};
    }
    r.phase = norm(-p.phase + 2 * cross, 2 * p.d);
    return r;
}

PauliOp power(const PauliOp& p, int64_t m) {
    PauliOp base = m < 0 ? inverse(p) : p;
    int64_t k = m < 0 ? -m : m;
    PauliOp acc = pauli_identity(p.d, p.sites.size());
    while (k > 0) {
        if (k & 1) acc = multiply(acc, base);
        base = multiply(base, base);
        k >>= 1;
    }
    return acc;
}

bool is_identity(const PauliOp& p) { return is_scalar_omega(p, 0); }

bool is_scalar_omega(const PauliOp& p, int64_t k) {
    for (const auto& [a, b] : p.sites)
        if (a != 0 || b != 0) return false;
    return p.phase == norm(2 * k, 2 * p.d);
}

int64_t scalar_omega_exponent(const PauliOp& p) {
    for (const auto& [a, b] : p.sites)
        if (a != 0 || b != 0) throw ValidationError("pauli", "operator is not a scalar");
    if (p.phase % 2 != 0) throw ValidationError("pauli", "scalar is not a power of omega");
    return (p.phase / 2) % p.d;
}

bool order_divides_d(const PauliOp& p) { return is_identity(power(p, p.d)); }

bool commutes(const PauliOp& p, const PauliOp& q) {
    int64_t symp = 0;
    for (size_t k = 0; k < p.sites.size(); ++k) {
        const auto& [a, b] = p.sites[k];
        const auto& [a2, b2] = q.sites[k];
        symp = norm(symp + a * b2 - b * a2, p.d);
    }
    return symp == 0;
}

std::vector<OperatorViolation> verify_operator_realization(const Arrangement& arr,
                                                           const OperatorAssignment& T) {
    std::vector<OperatorViolation> out;
    if (T.d != arr.d) out.push_back({"d", "operator modulus differs from arrangement"});
    for (const auto& l : arr.labels) {
        auto it = T.ops.find(l);
        if (it == T.ops.end()) {
            out.push_back({l, "label has no operator"});
            continue;
        }
        if (!order_divides_d(it->second)) out.push_back({l, "operator order does not divide d"});
    }
    if (!out.empty()) return out;
    for (const auto& c : arr.contexts) {
        PauliOp acc = pauli_identity(T.d, T.n);
        for (const auto& e : c.elements) {
            const PauliOp& op = T.ops.at(e.label);
            acc = multiply(acc, e.sign == 1 ? op : inverse(op));
        }
        if (!is_scalar_omega(acc, c.tau))
            out.push_back({c.id, "ordered product is not omega^tau"});
    }
    return out;
}

std::vector<OperatorViolation> verify_quantum_realization(const Arrangement& arr,
                                                          const OperatorAssignment& T) {
    std::vector<OperatorViolation> out = verify_operator_realization(arr, T);
    for (const auto& c : arr.contexts) {
        for (size_t i = 0; i < c.elements.size(); ++i)
            for (size_t j = i + 1; j < c.elements.size(); ++j) {
                auto it1 = T.ops.find(c.elements[i].label);
                auto it2 = T.ops.find(c.elements[j].label);
                if (it1 == T.ops.end() || it2 == T.ops.end()) continue;
                if (!commutes(it1->second, it2->second))
                    out.push_back({c.id, "operators for '" + c.elements[i].label + "' and '" +
                                             c.elements[j].label + "' do not commute"});
            }
    }
    return out;
}

PauliOp path_operator(const OperatorAssignment& T, const CellComplex2& X,
                      const std::vector<FaceStep>& path) {
    PauliOp acc = pauli_identity(T.d, T.n);
    for (size_t i = 0; i < path.size(); ++i) {
        if (i + 1 < path.size() && X.step_target(path[i]) != X.step_source(path[i + 1]))
            throw ValidationError("path", "steps are not incident at position " + std::to_string(i));
        auto it = T.ops.find(path[i].edge);
        if (it == T.ops.end()) throw ValidationError("path", "no operator for edge '" + path[i].edge + "'");
        acc = multiply(acc, path[i].exp == 1 ? it->second : inverse(it->second));
    }
    return acc;
}

std::vector<OperatorViolation> check_face_identity(const OperatorAssignment& T, const CellComplex2& X,
                                                   const Arrangement& arr) {
    std::vector<OperatorViolation> out;
    for (const Face& f : X.faces) {
        int64_t tau = arr.contexts[arr.context_at(f.context)].tau;
        PauliOp op = path_operator(T, X, f.word);
        if (!is_scalar_omega(op, tau)) out.push_back({f.context, "boundary operator is not omega^tau"});
    }
    return out;
}

PoweredRealization power_realization(const Arrangement& arr, const OperatorAssignment& T, int64_t m) {
    auto viol = verify_quantum_realization(arr, T);
    if (!viol.empty())
        throw ValidationError(viol.front().where, "not a quantum realization: " + viol.front().detail);
    PoweredRealization out;
    out.ops.d = T.d;
    out.ops.n = T.n;
    for (const auto& [label, op] : T.ops) out.ops.ops[label] = power(op, m);
    std::vector<Context> contexts = arr.contexts;
    for (auto& c : contexts) c.tau = norm(c.tau * m, arr.d);
    out.arr = make_arrangement(arr.d, arr.labels, std::move(contexts));
    return out;
}

OperatorAssignment parse_operators(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_object()) throw ParseError("$", "expected a JSON object");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "n" && it.key() != "d" && it.key() != "ops")
            throw ParseError("$", "unknown key '" + it.key() + "'");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("n", "missing or non-integer");
    if (!doc.contains("d") || !doc["d"].is_number_integer()) throw ParseError("d", "missing or non-integer");
    if (!doc.contains("ops") || !doc["ops"].is_object()) throw ParseError("ops", "missing or not an object");

    OperatorAssignment T;
    T.n = doc["n"].get<size_t>();
    T.d = doc["d"].get<int64_t>();
    if (T.d < 2) throw ValidationError("d", "modulus must be at least 2");
    if (T.n < 1) throw ValidationError("n", "at least one qudit required");
    for (auto it = doc["ops"].begin(); it != doc["ops"].end(); ++it) {
        const auto& jo = it.value();
        std::string where = "ops." + it.key();
        if (!jo.is_object()) throw ParseError(where, "expected an object");
        for (auto kt = jo.begin(); kt != jo.end(); ++kt)
            if (kt.key() != "phase" && kt.key() != "sites") throw ParseError(where, "unknown key '" + kt.key() + "'");
        if (!jo.contains("phase") || !jo["phase"].is_number_integer())
            throw ParseError(where + ".phase", "missing or non-integer");
        if (!jo.contains("sites") || !jo["sites"].is_array())
            throw ParseError(where + ".sites", "missing or not an array");
        PauliOp op;
        op.d = T.d;
        op.phase = jo["phase"].get<int64_t>();
        if (op.phase < 0 || op.phase >= 2 * T.d) throw ValidationError(where + ".phase", "phase out of [0, 2d)");
        if (jo["sites"].size() != T.n) throw ValidationError(where + ".sites", "expected n site pairs");
        for (const auto& s : jo["sites"]) {
            if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer())
                throw ParseError(where + ".sites", "expected [a, b] integer pairs");
            int64_t a = s[0].get<int64_t>(), b = s[1].get<int64_t>();
            if (a < 0 || a >= T.d || b < 0 || b >= T.d)
                throw ValidationError(where + ".sites", "exponents out of [0, d)");
            op.sites.push_back({a, b});
        }
        T.ops[it.key()] = std::move(op);
    }
    return T;
}

std::string serialize_operators(const OperatorAssignment& T) {
    ordered_json doc;
    doc["n"] = T.n;
    doc["d"] = T.d;
    doc["ops"] = ordered_json::object();
    for (const auto& [label, op] : T.ops) {
        ordered_json jo;
        jo["phase"] = op.phase;
        jo["sites"] = ordered_json::array();
        for (const auto& [a, b] : op.sites) jo["sites"].push_back({a, b});
        doc["ops"][label] = std::move(jo);
    }
    return doc.dump(2) + "\n";
}

}  // namespace magicarr
