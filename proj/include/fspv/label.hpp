#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fspv {

// An action label: non-empty '.'-joined segments, each an identifier or a
// decimal integer. Flattened indices produce integer segments ("readSign.3");
// process labeling produces prefixed labels ("c.1.empty.loaded").
// Equality is full-text equality.
struct ActionLabel {
    std::string text;

    ActionLabel() = default;
    explicit ActionLabel(std::string t) : text(std::move(t)) {}

    auto operator<=>(const ActionLabel&) const = default;

    std::vector<std::string_view> segments() const;

    // True iff text is non-empty, has no empty segments, and every segment
    // is an identifier or a decimal integer.
    static bool valid_text(std::string_view text);
};

// Canonical (lexicographic) iteration order makes serialized output
// byte-identical across runs.
using Alphabet = std::set<ActionLabel>;

}  // namespace fspv
