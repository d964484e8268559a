#pragma once

#include <string>

#include "nssd/graph.hpp"

namespace nssd {

/// Relabeling-invariant identifier of the unlabeled graph: two graphs have
/// equal canonical forms iff they are isomorphic. The bytes are the graph6
/// encoding of the canonically relabeled graph, so a form is also directly
/// usable as output.
struct CanonicalForm {
    std::string bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator<(const CanonicalForm& x, const CanonicalForm& y) {
        return x.bytes < y.bytes;
    }
};

/// Degree partition refinement followed by individualize-and-refine
/// backtracking, selecting the lexicographically minimal adjacency bit string
/// (in graph6 bit order). Discovered automorphisms prune the search, so
/// regular and highly symmetric graphs stay cheap. Guarded to order <= 20.
CanonicalForm canonical_form(const Graph& g);

}  // namespace nssd
