#include "magicarr/rewrite.hpp"

#include <algorithm>
#include <deque>

#include "magicarr/intmat.hpp"

namespace magicarr {

std::vector<int> RewriteSystem::encode(const GroupWord& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (const Letter& l : w) out.push_back(2 * l.gen + (l.exp == 1 ? 0 : 1));
    return out;
}

GroupWord RewriteSystem::decode(const std::vector<int>& w) {
    GroupWord out;
    out.reserve(w.size());
    for (int c : w) out.push_back({c / 2, (c & 1) ? -1 : 1});
    return out;
}

bool RewriteSystem::shortlex_less(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

bool contains_factor(const std::vector<int>& w, const std::vector<int>& f) {
    if (f.empty() || f.size() > w.size()) return false;
    for (size_t i = 0; i + f.size() <= w.size(); ++i)
        if (std::equal(f.begin(), f.end(), w.begin() + i)) return true;
    return false;
}

}  // namespace

RewriteSystem::RewriteSystem(size_t ngens, int64_t d,
                             const std::vector<std::pair<GroupWord, int64_t>>& relators,
                             const ResourceLimits& limits)
    : ngens_(ngens), d_(d), max_steps_(limits.kb_max_steps) {
    // equation (a, va) ~ (b, vb): the group elements J^va a and J^vb b agree
    struct Eq {
        std::vector<int> a, b;
        int64_t va, vb;
    };
    std::deque<Eq> eqs;
    for (size_t g = 0; g < ngens_; ++g) {
        eqs.push_back({{int(2 * g), int(2 * g + 1)}, {}, 0, 0});
        eqs.push_back({{int(2 * g + 1), int(2 * g)}, {}, 0, 0});
    }
    for (const auto& [w, k] : relators) eqs.push_back({encode(free_reduce(w)), {}, 0, mod_norm(k, d_)});

    std::vector<char> active;
    std::vector<std::vector<size_t>> by_last(2 * ngens_);
    std::vector<size_t> fresh;

    auto reduce_with = [&](std::vector<int> w, int64_t v0) -> Reduced {
        Reduced res;
        res.val = v0;
        std::vector<int>& out = res.word;
        std::vector<int> pending(w.rbegin(), w.rend());
        while (!pending.empty()) {
            out.push_back(pending.back());
            pending.pop_back();
            bool matched = true;
            while (matched && !out.empty() && steps_ < max_steps_) {
                matched = false;
                for (size_t ri : by_last[out.back()]) {
                    if (!active[ri]) continue;
                    const Rule& r = rules_[ri];
                    if (r.lhs.size() > out.size()) continue;
                    if (!std::equal(r.lhs.begin(), r.lhs.end(), out.end() - r.lhs.size())) continue;
                    out.resize(out.size() - r.lhs.size());
                    for (auto it = r.rhs.rbegin(); it != r.rhs.rend(); ++it) pending.push_back(*it);
                    res.val = mod_norm(res.val + r.val, d_);
                    ++steps_;
                    matched = !out.empty();
                    break;
                }
            }
            if (steps_ >= max_steps_) {
                while (!pending.empty()) {
                    out.push_back(pending.back());
                    pending.pop_back();
                }
                break;
            }
        }
        return res;
    };

    auto note_collapse = [&](int64_t delta) {
        delta = mod_norm(delta, d_);
        if (delta == 0) return;
        collapse_ = collapse_ == 0 ? delta : gcd64(collapse_, delta);
    };

    auto add_equation = [&](std::vector<int> a, int64_t va, std::vector<int> b, int64_t vb) -> void {
        Reduced ra = reduce_with(std::move(a), va);
        Reduced rb = reduce_with(std::move(b), vb);
        if (ra.word == rb.word) {
            note_collapse(ra.val - rb.val);
            return;
        }
        // orient: bigger word becomes the lhs; lhs = J^{v_rhs - v_lhs} rhs
        if (shortlex_less(ra.word, rb.word)) std::swap(ra, rb);
        size_t idx = rules_.size();
        rules_.push_back({ra.word, rb.word, mod_norm(rb.val - ra.val, d_)});
        active.push_back(1);
        by_last[ra.word.back()].push_back(idx);
        fresh.push_back(idx);
        // interreduce: recycle rules the new lhs can rewrite
        for (size_t i = 0; i < idx; ++i) {
            if (!active[i]) continue;
            if (contains_factor(rules_[i].lhs, ra.word)) {
                active[i] = 0;
                eqs.push_back({rules_[i].lhs, rules_[i].rhs, 0, rules_[i].val});
            } else if (contains_factor(rules_[i].rhs, ra.word)) {
                Reduced rr = reduce_with(rules_[i].rhs, 0);
                rules_[i].rhs = rr.word;
                rules_[i].val = mod_norm(rules_[i].val + rr.val, d_);
            }
        }
    };

    std::deque<std::pair<size_t, size_t>> pairs;
    auto drain_equations = [&]() {
        while (!eqs.empty()) {
            if (rules_.size() > limits.kb_max_rules || steps_ >= max_steps_) return false;
            Eq e = eqs.front();
            eqs.pop_front();
            add_equation(std::move(e.a), e.va, std::move(e.b), e.vb);
        }
        for (size_t n : fresh) {
            for (size_t j = 0; j < rules_.size(); ++j) {
                if (!active[j] || !active[n]) continue;
                pairs.push_back({n, j});
                if (j != n) pairs.push_back({j, n});
            }
        }
        fresh.clear();
        return true;
    };

    bool within = drain_equations();
    while (within && !pairs.empty()) {
        if (rules_.size() > limits.kb_max_rules || steps_ >= max_steps_) {
            within = false;
            break;
        }
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (!active[i] || !active[j]) continue;
        const std::vector<int> li = rules_[i].lhs, ri = rules_[i].rhs;
        const std::vector<int> lj = rules_[j].lhs, rj = rules_[j].rhs;
        const int64_t vi = rules_[i].val, vj = rules_[j].val;
        size_t maxk = std::min(li.size(), lj.size());
        for (size_t k = 1; k <= maxk; ++k) {
            if (!std::equal(lj.begin(), lj.begin() + k, li.end() - k)) continue;
            // x.o.y with li = x.o and lj = o.y reduces two ways:
            //   J^vi ri.y   and   J^vj x.rj
            std::vector<int> a = ri;
            a.insert(a.end(), lj.begin() + k, lj.end());
            std::vector<int> b(li.begin(), li.end() - k);
            b.insert(b.end(), rj.begin(), rj.end());
            eqs.push_back({std::move(a), std::move(b), vi, vj});
        }
        within = drain_equations();
    }
    completed_ = within && pairs.empty() && eqs.empty();

    std::vector<Rule> final_rules;
    for (size_t i = 0; i < rules_.size(); ++i)
        if (active[i]) final_rules.push_back(std::move(rules_[i]));
    rules_ = std::move(final_rules);
    by_last_.assign(2 * ngens_, {});
    for (size_t i = 0; i < rules_.size(); ++i) by_last_[rules_[i].lhs.back()].push_back(i);
}

RewriteSystem::Reduced RewriteSystem::reduce(std::vector<int> w) const {
    Reduced res;
    std::vector<int>& out = res.word;
    std::vector<int> pending(w.rbegin(), w.rend());
    while (!pending.empty()) {
        out.push_back(pending.back());
        pending.pop_back();
        bool matched = true;
        while (matched && !out.empty() && steps_ < max_steps_) {
            matched = false;
            for (size_t ri : by_last_[out.back()]) {
                const Rule& r = rules_[ri];
                if (r.lhs.size() > out.size()) continue;
                if (!std::equal(r.lhs.begin(), r.lhs.end(), out.end() - r.lhs.size())) continue;
                out.resize(out.size() - r.lhs.size());
                for (auto it = r.rhs.rbegin(); it != r.rhs.rend(); ++it) pending.push_back(*it);
                res.val = mod_norm(res.val + r.val, d_);
                ++steps_;
                matched = !out.empty();
                break;
            }
        }
        if (steps_ >= max_steps_) {
            while (!pending.empty()) {
                out.push_back(pending.back());
                pending.pop_back();
            }
            break;
        }
    }
    return res;
}

}  // namespace magicarr
