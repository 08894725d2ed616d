#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace magicarr {

/// One letter of a group word: generator index plus exponent +1/-1.
struct Letter {
    int gen = 0;
    int exp = 1;
    bool operator==(const Letter&) const = default;
};

using GroupWord = std::vector<Letter>;

GroupWord inverse_word(const GroupWord& w);
GroupWord free_reduce(GroupWord w);

/// Resource caps for the bounded decision procedures. The verdicts they
/// produce are tri-state; hitting a cap yields "unknown", never a claim.
struct ResourceLimits {
    uint64_t coset_rows = 1'000'000;
    uint64_t kb_max_rules = 50'000;
    uint64_t kb_max_steps = 1'000'000;
};

}  // namespace magicarr
