#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nssd/exact_linalg.hpp"
#include "nssd/hyperop.hpp"

namespace nssd {

/// Simple undirected graph with an exact 0/1 adjacency matrix, stored both as
/// a dense integer matrix and as bitmask rows. Vertices may carry group
/// element labels (commuting graphs do; synthetic test graphs need not).
/// Immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(const std::vector<std::vector<int>>& adjacency,
                   std::vector<GroupElement> labels = {});

    int order() const { return n_; }
    int adjacency(int i, int j) const { return dense_[static_cast<std::size_t>(i) * n_ + j]; }
    bool adjacent(int i, int j) const { return adjacency(i, j) != 0; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<GroupElement>& labels() const { return labels_; }

    /// Neighbor bitmask of vertex i, word w (64 vertices per word).
    std::uint64_t row_word(int i, int w) const { return bits_[static_cast<std::size_t>(i) * words_ + w]; }
    int words_per_row() const { return words_; }

    IntMatrix adjacency_matrix() const;
    SquareMatrix<std::int64_t> adjacency_matrix_i64() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint8_t> dense_;
    std::vector<std::uint64_t> bits_;
    std::vector<GroupElement> labels_;
};

/// The commuting graph C(H, subset): vertices are the subset in global element
/// order, edges join distinct commuting elements. Rejects empty subsets and
/// duplicates.
Graph commuting_graph(const HvGroupCtx& ctx, std::span<const GroupElement> subset);

int degree(const Graph& g, int v);
int max_degree(const Graph& g);
bool is_connected(const Graph& g);

/// Connected with maximum degree <= 3 (a carbon-skeleton shape). Advisory;
/// never a precondition of anything else here.
bool is_molecular(const Graph& g);

/// Graph with vertex v removed; labels of the remaining vertices preserved.
/// Requires order >= 2.
Graph delete_vertex(const Graph& g, int v);

/// DOT text; vertices use element labels when present, otherwise indices.
std::string export_dot(const Graph& g);

/// graph6 short form (order <= 62), bit-exact per the standard encoding.
std::string export_graph6(const Graph& g);

}  // namespace nssd
