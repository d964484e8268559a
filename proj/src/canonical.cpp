#include "nssd/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace nssd {

namespace {

constexpr int kMaxOrder = 20;

// Packed candidate bit string, graph6 bit order, MSB-first; 20 vertices need
// at most 190 bits.
using Bits = std::array<std::uint64_t, 3>;

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

struct UnionFind {
    std::array<int, kMaxOrder> parent;

    explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

struct Canonicalizer {
    int n = 0;
    std::array<std::uint32_t, kMaxOrder> rows{};

    bool have_best = false;
    Bits best{};
    std::array<int, kMaxOrder> best_lab{};           // position -> vertex
    std::vector<std::array<int, kMaxOrder>> autos;   // vertex -> vertex maps
    std::vector<int> base;                           // individualized vertices

    explicit Canonicalizer(const Graph& g) : n(g.order()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (g.adjacent(i, j)) rows[i] |= std::uint32_t(1) << j;
    }

    Partition refine(Partition cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                std::uint32_t splitter = 0;
                for (int v : cells[s]) splitter |= std::uint32_t(1) << v;
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c].size() <= 1) continue;
                    auto count = [&](int v) { return __builtin_popcount(rows[v] & splitter); };
                    int c0 = count(cells[c][0]);
                    bool uniform = std::all_of(cells[c].begin(), cells[c].end(),
                                               [&](int v) { return count(v) == c0; });
                    if (uniform) continue;
                    // split cell c into groups by ascending neighbor count
                    std::vector<std::pair<int, int>> keyed;
                    for (int v : cells[c]) keyed.emplace_back(count(v), v);
                    std::sort(keyed.begin(), keyed.end());
                    Partition groups;
                    for (auto& [k, v] : keyed) {
                        if (groups.empty() || count(groups.back().front()) != k) groups.push_back({});
                        groups.back().push_back(v);
                    }
                    cells.erase(cells.begin() + c);
                    cells.insert(cells.begin() + c, groups.begin(), groups.end());
                    changed = true;
                    break;
                }
            }
        }
        return cells;
    }

    Bits leaf_bits(const std::array<int, kMaxOrder>& lab) const {
        Bits b{};
        int t = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if (rows[lab[i]] >> lab[j] & 1) b[t >> 6] |= std::uint64_t(1) << (63 - (t & 63));
        return b;
    }

    void leaf(const Partition& cells) {
        std::array<int, kMaxOrder> lab{};
        int p = 0;
        for (const Cell& c : cells) lab[p++] = c.front();
        Bits cand = leaf_bits(lab);
        if (!have_best || cand < best) {
            best = cand;
            best_lab = lab;
            have_best = true;
        } else if (cand == best) {
            std::array<int, kMaxOrder> alpha{};
            for (int q = 0; q < n; ++q) alpha[lab[q]] = best_lab[q];
            autos.push_back(alpha);
        }
    }

    // Orbits of the subgroup generated by discovered automorphisms that fix
    // the current base pointwise; used to skip equivalent branch targets.
    UnionFind base_orbits() {
        UnionFind uf(n);
        for (const auto& alpha : autos) {
            bool fixes = std::all_of(base.begin(), base.end(),
                                     [&](int b) { return alpha[b] == b; });
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) uf.unite(v, alpha[v]);
        }
        return uf;
    }

    void search(const Partition& cells) {
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                target = c;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            UnionFind uf = base_orbits();
            bool skip = std::any_of(tried.begin(), tried.end(),
                                    [&](int u) { return uf.find(u) == uf.find(v); });
            if (skip) continue;
            tried.push_back(v);
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                Cell rest;
                for (int u : cells[c])
                    if (u != v) rest.push_back(u);
                child.push_back({v});
                child.push_back(std::move(rest));
            }
            base.push_back(v);
            search(refine(std::move(child)));
            base.pop_back();
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > kMaxOrder) throw std::invalid_argument("canonical_form: order > 20");
    if (n == 0) return {std::string(1, static_cast<char>(63))};
    Canonicalizer c(g);
    Cell all(n);
    std::iota(all.begin(), all.end(), 0);
    c.search(c.refine({all}));

    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            adj[p][q] = g.adjacent(c.best_lab[p], c.best_lab[q]) ? 1 : 0;
    return {export_graph6(Graph(adj))};
}

}  // namespace nssd
