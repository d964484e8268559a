#pragma once

#include <span>
#include <string>
#include <vector>

#include "nssd/graph.hpp"
#include "nssd/nssd_check.hpp"

namespace nssd {

struct PreconditionCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Output of the two commuting-graph constructions. The joined graph and its
/// certificate are always produced, even when preconditions fail, so failing
/// hypothesis sets stay explorable.
struct ConstructionResult {
    Graph graph;
    bool preconditions_met = false;        // every check, strengthened ones included
    bool paper_preconditions_met = false;  // the literally stated hypothesis set
    std::vector<PreconditionCheck> report;
    NssdCertificate certificate;
};

/// Pendant construction: joins an edgeless C(V) to C(U) where each v in V
/// commutes with exactly one u in U. preconditions_met additionally demands
/// the v -> u assignment be a perfect matching; two pendants sharing a u make
/// the join singular, so the literal hypothesis set is tracked separately.
/// Throws on empty or overlapping U, V.
ConstructionResult pendant_union(const HvGroupCtx& ctx, std::span<const GroupElement> u,
                                 std::span<const GroupElement> v);

/// Bridge construction: C(U) and C(V) both NSSD and exactly one
/// cross-commuting pair joins them.
ConstructionResult bridge_join(const HvGroupCtx& ctx, std::span<const GroupElement> u,
                               std::span<const GroupElement> v);

struct PendantNullityResult {
    int nullity = 0;
    bool fully_reduced = false;  // true when pendant removal alone emptied the edges
};

/// Nullity via repeated removal of a pendant vertex together with its
/// neighbor; each removal preserves nullity. Falls back to exact rank when
/// the residue still has edges but no pendant.
PendantNullityResult pendant_nullity(const Graph& g);

/// Disjoint union of g1 and g2 (block-diagonal adjacency) plus the edge
/// joining vertex u of g1 to vertex v of g2. Labels survive only when both
/// inputs carry them.
Graph join_with_edge(const Graph& g1, int u, const Graph& g2, int v);

/// Verifies, with exact coefficient comparison,
///   P(G') = P(G1) P(G2) - P(G1 - u) P(G2 - v)
/// for the bridge graph G' = join_with_edge(g1, u, g2, v).
bool bridge_charpoly_identity(const Graph& g1, int u, const Graph& g2, int v);

}  // namespace nssd
