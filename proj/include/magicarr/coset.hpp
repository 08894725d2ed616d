#pragma once

#include <cstdint>
#include <vector>

#include "magicarr/presentation.hpp"

namespace magicarr {

struct CosetResult {
    bool completed = false;
    uint64_t index = 0;     // number of cosets when completed
    uint64_t defined = 0;   // total cosets ever defined
};

/// Todd-Coxeter enumeration of the cosets of the trivial subgroup, bounded
/// by max_rows live-plus-dead coset definitions. When it completes, `index`
/// is the group order.
CosetResult coset_enumerate(size_t ngens, const std::vector<GroupWord>& relators, uint64_t max_rows);

}  // namespace magicarr
