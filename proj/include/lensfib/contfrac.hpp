#pragma once

#include <vector>

#include "lensfib/kirby.hpp"
#include "lensfib/rational.hpp"

namespace lensfib {

// Negative continued fraction [a_1,...,a_n] = a_1 - 1/(a_2 - 1/(... - 1/a_n)).
// The canonical expansion produced by expand_neg_cf has every term <= -2.
struct CFExpansion {
    std::vector<long long> terms;
};

// Exact value, computed right to left.
Rational evaluate_cf(const CFExpansion& cf);

// Unique all-(<= -2) expansion of -p/q for coprime p >= 2, 1 <= q < p.
CFExpansion expand_neg_cf(long long p, long long q);

// Chain of unknots with framings a_i: diagonal a_i, 1 at |i-j| = 1, 0 elsewhere.
FramedLinkMatrix chain_matrix(const CFExpansion& cf);

} // namespace lensfib
