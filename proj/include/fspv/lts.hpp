#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fspv/label.hpp"

namespace fspv {

// State numbering: 0 is the initial state, non-error states are the
// consecutive integers 0..state_count-1, and -1 is the distinguished
// absorbing ERROR state (never counted in state_count).
using StateId = int;

inline constexpr StateId kInitialState = 0;
inline constexpr StateId kErrorState = -1;

struct Transition {
    StateId src = 0;
    ActionLabel label;
    StateId dst = 0;

    auto operator<=>(const Transition&) const = default;
};

// Explicit labelled transition system. Immutable once built; analyses share
// LTSs read-only. Transitions are kept sorted by (src, label, dst) and
// duplicate-free so all derived output is deterministic.
struct Lts {
    int state_count = 1;
    Alphabet alphabet;
    std::vector<Transition> transitions;
    bool has_error = false;
    bool is_property = false;

    bool operator==(const Lts&) const = default;

    // Inserts unsorted; call finalize() once after the last add.
    void add_transition(StateId src, ActionLabel label, StateId dst);
    void finalize();

    // Sorted outgoing transitions of a non-error state (empty for ERROR).
    std::span<const Transition> outgoing(StateId s) const;
};

// Finite action sequence; counterexamples and animation history. For
// nondeterministic systems the witnessing state sequence is stored too
// (states.size() == actions.size() + 1 when present).
struct Trace {
    std::vector<ActionLabel> actions;
    std::vector<StateId> states;

    bool operator==(const Trace&) const = default;
};

struct ProgressProperty {
    std::string name;
    Alphabet action_set;
};

// Empty iff all Lts invariants hold; otherwise one human-readable entry per
// violated invariant.
std::vector<std::string> validate_lts(const Lts& lts);

// Newline-free, comma-separated label list; empty renders as "<empty>".
std::string trace_to_text(const Trace& trace);

}  // namespace fspv
