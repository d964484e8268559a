#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nssd {

/// Parameters of the dihedral group D_2n = <a, b | a^n = b^2 = 1, ab = b a^-1>.
/// n >= 2; the group has 2n elements.
struct GroupCtx {
    int n;

    explicit GroupCtx(int n_);
    int order() const { return 2 * n; }
};

/// One element of D_2n in normal form: a^rotation, or a^rotation * b when
/// reflected. The identity is (rotation=0, reflected=false).
struct GroupElement {
    int rotation = 0;
    bool reflected = false;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    // Global order: rotations e, a, ..., a^{n-1} first, then b, ab, ..., a^{n-1}b.
    friend bool operator<(const GroupElement& x, const GroupElement& y) {
        if (x.reflected != y.reflected) return !x.reflected;
        return x.rotation < y.rotation;
    }
};

inline GroupElement identity() { return {0, false}; }

/// Element with the exponent reduced into [0, n).
GroupElement make_element(int rotation, bool reflected, const GroupCtx& ctx);

/// All 2n elements in the global order.
std::vector<GroupElement> elements(const GroupCtx& ctx);

/// Position of x in the global order: rotation, or n + rotation for reflections.
int element_index(GroupElement x, const GroupCtx& ctx);
GroupElement element_at(int index, const GroupCtx& ctx);

GroupElement multiply(GroupElement x, GroupElement y, const GroupCtx& ctx);
GroupElement inverse(GroupElement x, const GroupCtx& ctx);

/// Grammar: `e` | `a` | `b` | `a^K` | `a^K b` | `a^K*b` | `ab`; whitespace and
/// a `*` between the rotation and `b` are optional; exponents >= n reduce mod n.
/// Throws std::invalid_argument on malformed text.
GroupElement parse_element(std::string_view text, const GroupCtx& ctx);

/// Comma-separated element list; rejects duplicates (after reduction mod n).
std::vector<GroupElement> parse_subset(std::string_view text, const GroupCtx& ctx);

/// Canonical text: `e`, `a`, `a^K`, `b`, `a b`, `a^K b`. Round-trips through
/// parse_element.
std::string format_element(GroupElement x);

std::string format_subset(const std::vector<GroupElement>& xs);

}  // namespace nssd
