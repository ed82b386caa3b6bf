#pragma once
#include <optional>

#include "mcut/colouring.hpp"
#include "mcut/graph.hpp"

namespace mcut {

// Completion of a processed partial colouring into a perfect colouring in
// which every component of the uncoloured subgraph is monochromatic, or
// nullopt when none exists. Requires pc to be a fixpoint of the perfect rules
// (throws std::invalid_argument otherwise).
std::optional<Colouring> perfect_mono_components(const Graph& g, const PartialColouring& pc);

struct MaxColouringResult {
    Colouring colouring;
    int value = 0;
};

// Maximum-value valid 1-colouring extending pc when the uncoloured set is
// independent. Requires pc to be a fixpoint of the d = 1 threshold rules and
// Z independent (throws std::invalid_argument otherwise). Ties are broken
// towards the lexicographically smallest assignment string.
std::optional<MaxColouringResult> max_valid_independent_z(const Graph& g,
                                                          const PartialColouring& pc);

// Same maximisation restricted to colourings whose bichromatic edges extend
// to a perfect matching.
std::optional<MaxColouringResult> max_extendable_independent_z(const Graph& g,
                                                               const PartialColouring& pc);

}  // namespace mcut
