#include "nssd/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace nssd {

Graph::Graph(const std::vector<std::vector<int>>& adjacency, std::vector<GroupElement> labels)
    : n_(static_cast<int>(adjacency.size())), labels_(std::move(labels)) {
    words_ = (n_ + 63) / 64;
    dense_.assign(static_cast<std::size_t>(n_) * n_, 0);
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw std::invalid_argument("Graph: label count does not match order");
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(adjacency[i].size()) != n_)
            throw std::invalid_argument("Graph: adjacency matrix is not square");
        for (int j = 0; j < n_; ++j) {
            int a = adjacency[i][j];
            if (a != 0 && a != 1) throw std::invalid_argument("Graph: entries must be 0/1");
            if (i == j && a != 0) throw std::invalid_argument("Graph: diagonal must be zero");
            if (adjacency[j][i] != a) throw std::invalid_argument("Graph: matrix must be symmetric");
            dense_[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::uint8_t>(a);
            if (a) bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t(1) << (j & 63);
        }
    }
}

IntMatrix Graph::adjacency_matrix() const {
    IntMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = adjacency(i, j);
    return m;
}

SquareMatrix<std::int64_t> Graph::adjacency_matrix_i64() const {
    SquareMatrix<std::int64_t> m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = adjacency(i, j);
    return m;
}

Graph commuting_graph(const HvGroupCtx& ctx, std::span<const GroupElement> subset) {
    if (subset.empty()) throw std::invalid_argument("commuting_graph: empty subset");
    std::vector<GroupElement> verts(subset.begin(), subset.end());
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw std::invalid_argument("commuting_graph: repeated element in subset");
    for (GroupElement v : verts)
        if (v.rotation < 0 || v.rotation >= ctx.group.n)
            throw std::invalid_argument("commuting_graph: element not in normal form for this n");
    const int k = static_cast<int>(verts.size());
    std::vector<std::vector<int>> adj(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (commutes(verts[i], verts[j], ctx)) adj[i][j] = adj[j][i] = 1;
    return Graph(adj, std::move(verts));
}

int degree(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("degree: vertex out of range");
    int d = 0;
    for (int w = 0; w < g.words_per_row(); ++w) d += __builtin_popcountll(g.row_word(v, w));
    return d;
}

int max_degree(const Graph& g) {
    int m = 0;
    for (int v = 0; v < g.order(); ++v) m = std::max(m, degree(g, v));
    return m;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
            if (!seen[u] && g.adjacent(v, u)) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n;
}

bool is_molecular(const Graph& g) { return is_connected(g) && max_degree(g) <= 3; }

Graph delete_vertex(const Graph& g, int v) {
    if (g.order() < 2) throw std::invalid_argument("delete_vertex: graph has only one vertex");
    if (v < 0 || v >= g.order()) throw std::out_of_range("delete_vertex: vertex out of range");
    const int n = g.order();
    std::vector<std::vector<int>> adj(n - 1, std::vector<int>(n - 1, 0));
    std::vector<GroupElement> labels;
    for (int i = 0, r = 0; i < n; ++i) {
        if (i == v) continue;
        if (g.has_labels()) labels.push_back(g.labels()[i]);
        for (int j = 0, c = 0; j < n; ++j) {
            if (j == v) continue;
            adj[r][c++] = g.adjacency(i, j);
        }
        ++r;
    }
    return Graph(adj, std::move(labels));
}

std::string export_dot(const Graph& g) {
    auto name = [&](int v) {
        return g.has_labels() ? format_element(g.labels()[v]) : std::to_string(v);
    };
    std::string out = "graph commuting {\n";
    for (int v = 0; v < g.order(); ++v) out += "  \"" + name(v) + "\";\n";
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j)) out += "  \"" + name(i) + "\" -- \"" + name(j) + "\";\n";
    out += "}\n";
    return out;
}

std::string export_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("export_graph6: short form limited to 62 vertices");
    std::string out;
    out += static_cast<char>(63 + n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | g.adjacency(i, j);
            if (++nbits == 6) {
                out += static_cast<char>(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out += static_cast<char>(63 + (acc << (6 - nbits)));
    return out;
}

}  // namespace nssd
