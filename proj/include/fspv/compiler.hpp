#pragma once

#include <span>
#include <string>
#include <vector>

#include "fspv/lts.hpp"
#include "fspv/resolve.hpp"

namespace fspv {

struct CompileOptions {
    // Desk-scale default; exceeding it is a hard error naming the partial
    // frontier size.
    std::size_t max_states = 1'000'000;
};

// Flattens an indexed action: segments joined by '.', then one '.'-separated
// integer per index ("readSign", {3}) -> readSign.3.
ActionLabel flatten_label(std::span<const std::string> segments,
                          std::span<const long> indices);

// Expands a process definition into an explicit LTS by breadth-first
// exploration of reachable (local, index-values) configurations. State 0 is
// the entry configuration; every syntactic STOP shares one sink state; state
// numbering is BFS discovery order with ties broken by branch declaration
// order.
Lts compile_process(const ResolvedSpec& spec, const std::string& name,
                    std::span<const long> args = {},
                    const CompileOptions& options = {});

// Completes a deterministic property LTS into a safety automaton: every
// missing (state, alphabet label) pair gains a transition to ERROR.
Lts complete_property(const Lts& lts);

// Subset construction; requires has_error == false. Trace-equivalent,
// deterministic result.
Lts determinize(const Lts& lts, const CompileOptions& options = {});

// Quotient under strong bisimulation via partition refinement. ERROR stays
// its own class; the result has no two distinct bisimilar states.
Lts minimize(const Lts& lts);

}  // namespace fspv
