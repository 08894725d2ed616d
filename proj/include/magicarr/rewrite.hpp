#pragma once

#include <cstdint>
#include <vector>

#include "magicarr/presentation.hpp"

namespace magicarr {

/// String rewriting for central extensions 1 -> <J> -> G -> Gbar -> 1:
/// words live over the non-central generators and every rule carries an
/// exact J-valuation in Z_d, so "u -> (v, k)" means u = J^k v in G. This
/// keeps the J-power bookkeeping exact even when the relations force J to
/// collapse below order d; such collapses surface as value-inconsistent
/// critical pairs and are recorded instead of silently folding into the
/// exponents.
///
/// Letters are encoded 2*gen (+1 for the inverse); the word order is
/// shortlex on that encoding.
class RewriteSystem {
  public:
    struct Rule {
        std::vector<int> lhs, rhs;
        int64_t val = 0;  // lhs = J^val rhs
    };

    struct Reduced {
        std::vector<int> word;
        int64_t val = 0;  // input = J^val word
    };

    /// relators: (word, k) meaning word = J^k in G.
    RewriteSystem(size_t ngens, int64_t d, const std::vector<std::pair<GroupWord, int64_t>>& relators,
                  const ResourceLimits& limits);

    /// Leftmost reduction. Every applied rule is an identity in G, so the
    /// result is a sound derivation even when the system is not confluent.
    Reduced reduce(std::vector<int> w) const;

    bool completed() const { return completed_; }
    /// True when completion found J^delta = 1 with delta != 0 (mod d); the
    /// J-exponents of distinct derivations may then differ.
    bool collapse_detected() const { return collapse_ != 0; }
    int64_t collapse_modulus() const { return collapse_; }
    size_t rule_count() const { return rules_.size(); }
    uint64_t steps_used() const { return steps_; }
    bool budget_exhausted() const { return steps_ >= max_steps_; }

    static std::vector<int> encode(const GroupWord& w);
    static GroupWord decode(const std::vector<int>& w);

  private:
    size_t ngens_;
    int64_t d_;
    std::vector<Rule> rules_;
    std::vector<std::vector<size_t>> by_last_;
    bool completed_ = false;
    int64_t collapse_ = 0;  // gcd of discovered J-collapses, 0 = none
    mutable uint64_t steps_ = 0;
    uint64_t max_steps_;

    bool shortlex_less(const std::vector<int>& a, const std::vector<int>& b) const;
};

}  // namespace magicarr
