#include "nssd/nssd_check.hpp"

#include <stdexcept>

namespace nssd {

NssdCertificate is_nssd(const Graph& g) {
    NssdCertificate cert;
    const int n = g.order();
    IntMatrix a = g.adjacency_matrix();
    cert.det = determinant(a);
    cert.minor_diag.reserve(n);
    for (int i = 0; i < n; ++i)
        cert.minor_diag.push_back(n >= 2 ? principal_minor(a, i) : BigInt(1));
    cert.verdict = cert.det != 0;
    if (!cert.verdict) {
        cert.failure = NssdFailure::Singular;
        return cert;
    }
    for (int i = 0; i < n; ++i) {
        if (cert.minor_diag[i] == 0) continue;
        cert.verdict = false;
        cert.failure = NssdFailure::NonsingularDeckEntry;
        cert.failure_vertex = i;
        return cert;
    }
    return cert;
}

bool is_nssd_spectral(const Graph& g) {
    const int n = g.order();
    if (n < 2) return false;
    IntMatrix a = g.adjacency_matrix();
    if (nullity(a) != 0) return false;
    for (int i = 0; i < n; ++i)
        if (nullity(a.without(i)) < 1) return false;
    return true;
}

namespace {

// Bareiss determinant on a scratch int64 matrix of dimension k (<= 16).
std::int64_t det_i64(std::int64_t* m, int k) {
    if (k == 0) return 1;
    std::int64_t prev = 1;
    int sign = 1;
    auto at = [&](int i, int j) -> std::int64_t& { return m[i * k + j]; };
    for (int p = 0; p + 1 < k; ++p) {
        if (at(p, p) == 0) {
            int r = -1;
            for (int i = p + 1; i < k; ++i)
                if (at(i, p) != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            for (int j = 0; j < k; ++j) std::swap(at(p, j), at(r, j));
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i) {
            for (int j = p + 1; j < k; ++j)
                at(i, j) = (at(i, j) * at(p, p) - at(i, p) * at(p, j)) / prev;
            at(i, p) = 0;
        }
        prev = at(p, p);
    }
    return sign * at(k - 1, k - 1);
}

}  // namespace

bool is_nssd_fast_bits(const std::uint64_t* rows, int k) {
    if (k > 16) throw std::invalid_argument("is_nssd_fast_bits: overflow-safe bound is k <= 16");
    if (k < 2) return false;
    std::int64_t full[16 * 16];
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) full[i * 16 + j] = (rows[i] >> j) & 1;

    std::int64_t scratch[16 * 16];
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) scratch[i * k + j] = full[i * 16 + j];
    if (det_i64(scratch, k) == 0) return false;

    const int m = k - 1;
    for (int drop = 0; drop < k; ++drop) {
        for (int i = 0, r = 0; i < k; ++i) {
            if (i == drop) continue;
            for (int j = 0, c = 0; j < k; ++j) {
                if (j == drop) continue;
                scratch[r * m + c++] = full[i * 16 + j];
            }
            ++r;
        }
        if (det_i64(scratch, m) != 0) return false;
    }
    return true;
}

bool is_nssd_fast(const Graph& g) {
    const int n = g.order();
    if (n < 2) return false;
    if (n <= 16) {
        std::uint64_t rows[16] = {};
        for (int i = 0; i < n; ++i) rows[i] = g.row_word(i, 0);
        return is_nssd_fast_bits(rows, n);
    }
    return is_nssd(g).verdict;
}

}  // namespace nssd
