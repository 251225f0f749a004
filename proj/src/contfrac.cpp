#include "lensfib/contfrac.hpp"

#include <numeric>

#include "lensfib/error.hpp"

namespace lensfib {

Rational evaluate_cf(const CFExpansion& cf) {
    if (cf.terms.empty())
        fail("OutOfRange", "empty continued fraction");
    Rational v = Rational::integer(cf.terms.back());
    for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it)
        v = cf_step(*it, v);
    return v;
}

CFExpansion expand_neg_cf(long long p, long long q) {
    if (p < 2 || q < 1 || q >= p)
        fail("OutOfRange", "need p >= 2 and 1 <= q < p");
    if (std::gcd(p, q) != 1)
        fail("NotCoprime", "gcd(p,q) must be 1");

    // Expand p/q = [b_1,...,b_n] with b_i >= 2 by the ceiling recursion,
    // then negate termwise: [-b_1,...,-b_n] evaluates to -p/q.
    CFExpansion cf;
    while (true) {
        long long b = (p + q - 1) / q; // ceil(p/q), p,q > 0
        cf.terms.push_back(-b);
        long long r = b * q - p; // 0 <= r < q
        if (r == 0) break;
        p = q;
        q = r;
    }
    return cf;
}

FramedLinkMatrix chain_matrix(const CFExpansion& cf) {
    const int n = static_cast<int>(cf.terms.size());
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        rows[i][i] = cf.terms[i];
        if (i + 1 < n) rows[i][i + 1] = rows[i + 1][i] = 1;
    }
    return FramedLinkMatrix(std::move(rows));
}

} // namespace lensfib
