#include "nssd/hyperop.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nssd {

HvGroupCtx::HvGroupCtx(int n) : group(n) {
    fixed = {make_element(1, false, group),  make_element(-1, false, group),
             make_element(2, false, group),  make_element(-2, false, group),
             make_element(0, true, group)};
    std::sort(fixed.begin(), fixed.end());
    fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
}

bool HyperProduct::contains(GroupElement x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

HyperProduct hyper_product(GroupElement x, GroupElement y, const HvGroupCtx& ctx) {
    HyperProduct p;
    p.members = ctx.fixed;
    p.members.push_back(multiply(x, y, ctx.group));
    p.members.push_back(multiply(x, inverse(y, ctx.group), ctx.group));
    std::sort(p.members.begin(), p.members.end());
    p.members.erase(std::unique(p.members.begin(), p.members.end()), p.members.end());
    return p;
}

HyperProduct hyper_product_sets(std::span<const GroupElement> u,
                                std::span<const GroupElement> v,
                                const HvGroupCtx& ctx) {
    if (u.empty() || v.empty())
        throw std::invalid_argument("hyper_product_sets: empty operand");
    HyperProduct out;
    for (GroupElement x : u)
        for (GroupElement y : v) {
            HyperProduct p = hyper_product(x, y, ctx);
            out.members.insert(out.members.end(), p.members.begin(), p.members.end());
        }
    std::sort(out.members.begin(), out.members.end());
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    return out;
}

bool commutes(GroupElement x, GroupElement y, const HvGroupCtx& ctx) {
    return hyper_product(x, y, ctx) == hyper_product(y, x, ctx);
}

namespace {

// Element-index bitmask wide enough for 2n <= 128 (the axiom-check guard).
struct Mask128 {
    std::uint64_t w[2] = {0, 0};

    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    Mask128& operator|=(const Mask128& o) {
        w[0] |= o.w[0];
        w[1] |= o.w[1];
        return *this;
    }
    bool intersects(const Mask128& o) const { return (w[0] & o.w[0]) | (w[1] & o.w[1]); }
    friend bool operator==(const Mask128&, const Mask128&) = default;
};

// Table of x o y as index masks, for all ordered pairs.
struct ProductTable {
    int count;                     // 2n
    std::vector<Mask128> pair;     // pair[x * count + y]
    Mask128 full;

    explicit ProductTable(const HvGroupCtx& ctx) : count(ctx.order()), pair(count * count) {
        if (ctx.group.n > 64)
            throw std::invalid_argument("axiom checks support n <= 64");
        auto els = elements(ctx.group);
        for (int x = 0; x < count; ++x)
            for (int y = 0; y < count; ++y) {
                HyperProduct p = hyper_product(els[x], els[y], ctx);
                Mask128& m = pair[x * count + y];
                for (GroupElement g : p.members) m.set(element_index(g, ctx.group));
            }
        for (int i = 0; i < count; ++i) full.set(i);
    }

    Mask128 compose_right(int s, const Mask128& inner) const {
        // s o (set)
        Mask128 out;
        for (int y = 0; y < count; ++y)
            if (inner.test(y)) out |= pair[s * count + y];
        return out;
    }
    Mask128 compose_left(const Mask128& inner, int u) const {
        // (set) o u
        Mask128 out;
        for (int x = 0; x < count; ++x)
            if (inner.test(x)) out |= pair[x * count + u];
        return out;
    }
};

// Earliest failing (t, u) for a fixed s, or -1 if the axiom holds at s.
long long weak_assoc_scan(const ProductTable& tab, int s) {
    const int m = tab.count;
    for (int t = 0; t < m; ++t)
        for (int u = 0; u < m; ++u) {
            Mask128 lhs = tab.compose_right(s, tab.pair[t * m + u]);
            Mask128 rhs = tab.compose_left(tab.pair[s * m + t], u);
            if (!lhs.intersects(rhs)) return static_cast<long long>(t) * m + u;
        }
    return -1;
}

bool reproduction_at(const ProductTable& tab, int x) {
    const int m = tab.count;
    Mask128 right, left;
    for (int y = 0; y < m; ++y) {
        right |= tab.pair[x * m + y];
        left |= tab.pair[y * m + x];
    }
    return right == tab.full && left == tab.full;
}

WeakAssociativityReport assemble_weak_assoc(const HvGroupCtx& ctx,
                                            const std::vector<long long>& fail_at) {
    WeakAssociativityReport rep;
    rep.holds = true;
    const int m = ctx.order();
    for (int s = 0; s < m; ++s) {
        if (fail_at[s] < 0) continue;
        rep.holds = false;
        int t = static_cast<int>(fail_at[s] / m);
        int u = static_cast<int>(fail_at[s] % m);
        rep.witness = {element_at(s, ctx.group), element_at(t, ctx.group),
                       element_at(u, ctx.group)};
        break;
    }
    return rep;
}

ReproductionReport assemble_reproduction(const HvGroupCtx& ctx, const std::vector<char>& ok) {
    ReproductionReport rep;
    rep.holds = true;
    for (int x = 0; x < ctx.order(); ++x) {
        if (ok[x]) continue;
        rep.holds = false;
        rep.witness = element_at(x, ctx.group);
        break;
    }
    return rep;
}

}  // namespace

WeakAssociativityReport check_weak_associativity(const HvGroupCtx& ctx, int workers) {
    ProductTable tab(ctx);
    const int m = ctx.order();
    std::vector<long long> fail_at(m, -1);
#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#pragma omp parallel for schedule(dynamic)
#endif
    for (int s = 0; s < m; ++s) fail_at[s] = weak_assoc_scan(tab, s);
    return assemble_weak_assoc(ctx, fail_at);
}

ReproductionReport check_reproduction(const HvGroupCtx& ctx, int workers) {
    ProductTable tab(ctx);
    const int m = ctx.order();
    std::vector<char> ok(m, 0);
#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#pragma omp parallel for schedule(dynamic)
#endif
    for (int x = 0; x < m; ++x) ok[x] = reproduction_at(tab, x);
    return assemble_reproduction(ctx, ok);
}

WeakAssociativityReport check_weak_associativity_serial(const HvGroupCtx& ctx) {
    ProductTable tab(ctx);
    const int m = ctx.order();
    std::vector<long long> fail_at(m, -1);
    for (int s = 0; s < m; ++s) fail_at[s] = weak_assoc_scan(tab, s);
    return assemble_weak_assoc(ctx, fail_at);
}

ReproductionReport check_reproduction_serial(const HvGroupCtx& ctx) {
    ProductTable tab(ctx);
    const int m = ctx.order();
    std::vector<char> ok(m, 0);
    for (int x = 0; x < m; ++x) ok[x] = reproduction_at(tab, x);
    return assemble_reproduction(ctx, ok);
}

}  // namespace nssd
