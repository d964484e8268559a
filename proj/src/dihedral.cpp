#include "nssd/dihedral.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nssd {

GroupCtx::GroupCtx(int n_) : n(n_) {
    if (n < 2) throw std::invalid_argument("GroupCtx: n must be >= 2");
}

GroupElement make_element(int rotation, bool reflected, const GroupCtx& ctx) {
    int r = rotation % ctx.n;
    if (r < 0) r += ctx.n;
    return {r, reflected};
}

std::vector<GroupElement> elements(const GroupCtx& ctx) {
    std::vector<GroupElement> out;
    out.reserve(ctx.order());
    for (int i = 0; i < ctx.n; ++i) out.push_back({i, false});
    for (int i = 0; i < ctx.n; ++i) out.push_back({i, true});
    return out;
}

int element_index(GroupElement x, const GroupCtx& ctx) {
    return x.rotation + (x.reflected ? ctx.n : 0);
}

GroupElement element_at(int index, const GroupCtx& ctx) {
    if (index < 0 || index >= ctx.order())
        throw std::out_of_range("element_at: index out of range");
    return {index % ctx.n, index >= ctx.n};
}

GroupElement multiply(GroupElement x, GroupElement y, const GroupCtx& ctx) {
    // b a^i = a^{-i} b, so (a^i b^r)(a^j b^s) = a^{i + j or i - j} b^{r xor s}.
    int rot = x.reflected ? x.rotation - y.rotation : x.rotation + y.rotation;
    return make_element(rot, x.reflected != y.reflected, ctx);
}

GroupElement inverse(GroupElement x, const GroupCtx& ctx) {
    if (x.reflected) return x;  // reflections are involutions
    return make_element(-x.rotation, false, ctx);
}

namespace {

[[noreturn]] void bad_element(std::string_view text) {
    throw std::invalid_argument("cannot parse group element: '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

GroupElement parse_element(std::string_view text, const GroupCtx& ctx) {
    std::string_view s = trim(text);
    if (s.empty()) bad_element(text);
    if (s == "e") return identity();

    int rotation = 0;
    size_t pos = 0;
    if (s[pos] == 'a') {
        ++pos;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) bad_element(text);
            long long k = 0;
            for (size_t i = start; i < pos; ++i) {
                k = k * 10 + (s[i] - '0');
                if (k > 1'000'000'000LL) k %= ctx.n;  // keep huge exponents reduced
            }
            rotation = static_cast<int>(k % ctx.n);
        } else {
            rotation = 1 % ctx.n;
        }
        // optional separator before b
        while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '*'))
            ++pos;
        if (pos == s.size()) return make_element(rotation, false, ctx);
        if (s[pos] == 'b' && pos + 1 == s.size()) return make_element(rotation, true, ctx);
        bad_element(text);
    }
    if (s[pos] == 'b' && pos + 1 == s.size()) return {0, true};
    bad_element(text);
}

std::vector<GroupElement> parse_subset(std::string_view text, const GroupCtx& ctx) {
    std::vector<GroupElement> out;
    size_t start = 0;
    std::string_view s = text;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string_view tok = s.substr(start, comma == std::string_view::npos ? comma : comma - start);
        out.push_back(parse_element(tok, ctx));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    auto sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("subset contains a repeated element: '" + std::string(text) + "'");
    return out;
}

std::string format_element(GroupElement x) {
    std::string rot;
    if (x.rotation == 1)
        rot = "a";
    else if (x.rotation != 0)
        rot = "a^" + std::to_string(x.rotation);
    if (!x.reflected) return rot.empty() ? "e" : rot;
    return rot.empty() ? "b" : rot + " b";
}

std::string format_subset(const std::vector<GroupElement>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += format_element(xs[i]);
    }
    return out;
}

}  // namespace nssd
