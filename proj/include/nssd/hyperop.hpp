#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "nssd/dihedral.hpp"

namespace nssd {

/// (D_2n, o) with the hyperoperation  x o y = {xy, xy^-1, a, a^-1, a^2, a^-2, b}.
/// The five trailing terms are fixed once per n; they collide for small n
/// (n=2 leaves {a, e, b}), so the fixed set is stored reduced and deduplicated.
struct HvGroupCtx {
    GroupCtx group;
    std::vector<GroupElement> fixed;  // sorted by global order, unique

    explicit HvGroupCtx(int n);
    int order() const { return group.order(); }
};

/// The value of x o y: a sorted set of at most 7 group elements, always
/// containing the fixed set.
struct HyperProduct {
    std::vector<GroupElement> members;  // sorted by global order, unique

    bool contains(GroupElement x) const;
    std::size_t size() const { return members.size(); }
    friend bool operator==(const HyperProduct&, const HyperProduct&) = default;
};

HyperProduct hyper_product(GroupElement x, GroupElement y, const HvGroupCtx& ctx);

/// U o V = union of x o y over x in U, y in V. Rejects empty inputs.
HyperProduct hyper_product_sets(std::span<const GroupElement> u,
                                std::span<const GroupElement> v,
                                const HvGroupCtx& ctx);

/// s and t commute when s o t and t o s are equal as sets. Reflexive and
/// symmetric; decided by full set comparison, so collisions between the
/// xy / xy^-1 terms and the fixed elements are handled uniformly.
bool commutes(GroupElement x, GroupElement y, const HvGroupCtx& ctx);

struct WeakAssociativityReport {
    bool holds = false;
    std::optional<std::array<GroupElement, 3>> witness;  // first failing (s, t, u)
};

struct ReproductionReport {
    bool holds = false;
    std::optional<GroupElement> witness;
};

/// Exhaustive check of s o (t o u) meeting (s o t) o u over all (2n)^3 triples.
/// workers <= 0 uses all hardware threads. Requires n <= 64.
WeakAssociativityReport check_weak_associativity(const HvGroupCtx& ctx, int workers = 0);

/// Exhaustive check of x o J = J = J o x for every x. Requires n <= 64.
ReproductionReport check_reproduction(const HvGroupCtx& ctx, int workers = 0);

// Plain single-threaded reference implementations of the two checks above.
// Kept for testing the parallel kernels against; same results by contract.
WeakAssociativityReport check_weak_associativity_serial(const HvGroupCtx& ctx);
ReproductionReport check_reproduction_serial(const HvGroupCtx& ctx);

}  // namespace nssd
