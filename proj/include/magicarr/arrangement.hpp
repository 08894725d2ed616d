#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "magicarr/errors.hpp"

namespace magicarr {

/// One occurrence of a label inside a context. The sign is per occurrence:
/// the same label may appear with different signs in different contexts.
struct SignedLabel {
    std::string label;
    int sign = 1;  // +1 or -1
};

struct Context {
    std::string id;
    std::vector<SignedLabel> elements;  // order is significant
    int64_t tau = 0;                    // residue in [0, d)
};

/// A signed arrangement (L, M, epsilon) with constraint cochain tau.
/// Values are immutable after construction and safe to share.
struct Arrangement {
    int64_t d = 2;
    std::vector<std::string> labels;    // file order; also the solver's coordinate order
    std::vector<Context> contexts;      // file order
    bool restricted = false;            // every label occurs in exactly two contexts

    std::unordered_map<std::string, size_t> label_index;
    std::unordered_map<std::string, size_t> context_index;

    size_t label_at(const std::string& id) const;
    size_t context_at(const std::string& id) const;
};

/// Validates the raw fields and derives the indexes and the restricted flag.
/// Throws ValidationError with a position path on any invariant violation.
Arrangement make_arrangement(int64_t d, std::vector<std::string> labels, std::vector<Context> contexts);

Arrangement parse_arrangement(const std::string& text);
std::string serialize_arrangement(const Arrangement& arr);

bool is_restricted(const Arrangement& arr);

}  // namespace magicarr
