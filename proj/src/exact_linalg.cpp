#include "nssd/exact_linalg.hpp"

#include <cassert>

namespace nssd {

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> c(p.coeffs.size() + q.coeffs.size() - 1);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs.size(); ++j) c[i + j] += p.coeffs[i] * q.coeffs[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_sub(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<BigInt> c(std::max(p.coeffs.size(), q.coeffs.size()));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) c[i] -= q.coeffs[i];
    return IntPolynomial(std::move(c));
}

BigInt eval_at_zero(const IntPolynomial& p) {
    return p.is_zero() ? BigInt(0) : p.coeffs.front();
}

int trailing_zero_count(const IntPolynomial& p) {
    int k = 0;
    while (k < static_cast<int>(p.coeffs.size()) && p.coeffs[k] == 0) ++k;
    return k;
}

IntPolynomial char_poly(const IntMatrix& m) {
    const int n = m.dim();
    // p(l) = l^n + c[1] l^{n-1} + ... + c[n]
    std::vector<BigInt> c(n + 1);
    c[0] = 1;
    IntMatrix mk(n);  // starts as the zero matrix
    for (int k = 1; k <= n; ++k) {
        // mk <- m * (mk + c[k-1] * I)
        IntMatrix t = mk;
        for (int i = 0; i < n; ++i) t.at(i, i) += c[k - 1];
        IntMatrix next(n);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (m.at(i, l) == 0) continue;
                for (int j = 0; j < n; ++j) next.at(i, j) += m.at(i, l) * t.at(l, j);
            }
        mk = std::move(next);
        BigInt tr(0);
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        assert(tr % k == 0);
        c[k] = -tr / k;
    }
    std::vector<BigInt> lowest_first(n + 1);
    for (int k = 0; k <= n; ++k) lowest_first[n - k] = c[k];
    return IntPolynomial(std::move(lowest_first));
}

}  // namespace nssd
