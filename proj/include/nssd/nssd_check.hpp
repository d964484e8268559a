#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nssd/graph.hpp"

namespace nssd {

enum class NssdFailure {
    Singular,               // det(A) = 0
    NonsingularDeckEntry,   // some vertex-deleted subgraph is non-singular
};

/// Exact witness of the NSSD decision: the adjacency determinant and the full
/// principal-minor diagonal. verdict = det != 0 and every minor = 0.
struct NssdCertificate {
    BigInt det;
    std::vector<BigInt> minor_diag;  // one entry per vertex
    bool verdict = false;
    std::optional<NssdFailure> failure;
    int failure_vertex = -1;  // set when failure == NonsingularDeckEntry
};

/// Determinant-and-minors decision path. Degenerate inputs (a single vertex)
/// yield verdict=false with reason Singular, not an error.
NssdCertificate is_nssd(const Graph& g);

/// Independent rank-only oracle: nullity(A) = 0 and nullity(A minus row/col i)
/// >= 1 for every i. No determinants anywhere; must agree with is_nssd.
bool is_nssd_spectral(const Graph& g);

/// int64 kernel over packed neighbor masks; rows[i] holds the neighbors of
/// vertex i among the k vertices, bit positions 0..k-1. Requires k <= 16,
/// where Bareiss intermediates of a 0/1 matrix provably fit in 64 bits.
/// Early-exits on a zero determinant or the first non-zero minor.
bool is_nssd_fast_bits(const std::uint64_t* rows, int k);

/// Same verdict as is_nssd(g).verdict, via the int64 kernel when the order
/// permits and the arbitrary-precision path otherwise.
bool is_nssd_fast(const Graph& g);

}  // namespace nssd
