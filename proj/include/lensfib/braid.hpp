#pragma once

#include <string>
#include <vector>

namespace lensfib {

// Word in the Artin generators of B_n. Letter e > 0 is sigma_e, e < 0 is
// sigma_{|e|}^{-1}; every letter satisfies 1 <= |e| <= strands-1. The empty
// word is the identity braid. Immutable by convention: operations return
// new values.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool is_identity() const { return letters.empty(); }
    long long exponent_sum() const;
};

// Bijection of {0,..,n-1}; images[s] is where strand s (top) ends (bottom).
struct StrandPermutation {
    std::vector<int> images;

    bool is_identity() const;
    bool is_order_reversing() const;
    friend bool operator==(const StrandPermutation& a, const StrandPermutation& b) {
        return a.images == b.images;
    }
};

// Invariants of the braid closure with all strands oriented coherently with
// the braid direction. linking is symmetric and indexed by components;
// off-diagonal entries are linking numbers (half the signed crossing count),
// diagonal entries are self-writhes (signed self-crossing count, not halved).
struct ClosureInvariants {
    int component_count = 0;
    long long exponent_sum = 0;
    std::vector<std::vector<long long>> linking;
};

enum class TwoStrandClosure {
    TwoUnlink,
    Unknot,
    HopfPositiveLinking,
    HopfNegativeLinking,
    TorusLink,
};

// Classification of a 2-strand closure; k is the reduced exponent of the
// single generator (meaningful for every kind, required for TorusLink).
struct TwoStrandClassification {
    TwoStrandClosure kind = TwoStrandClosure::TwoUnlink;
    long long k = 0;
};

BraidWord parse_word(const std::string& text, int strands);
std::string word_text(const BraidWord& w);

// Half-twist braid: (s1)(s2 s1)...(s_{n-1} ... s1). Every pair of strands
// crosses exactly once; n = 1 gives the identity.
BraidWord garside_delta(int n);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& w, long long k);
BraidWord inverse(const BraidWord& w);

// Cancels adjacent sigma_i sigma_i^{-1} pairs until none remain. No braid
// relations are applied; the result is the unique free reduction.
BraidWord free_reduce(const BraidWord& w);

StrandPermutation permutation(const BraidWord& w);

ClosureInvariants closure_invariants(const BraidWord& w);

TwoStrandClassification classify_two_strand_closure(const BraidWord& w);

// Human label; paper_naming swaps the Hopf labels for the orientation
// convention in which the negative-linking closure is called H+.
std::string classification_label(const TwoStrandClassification& c, bool paper_naming = false);

} // namespace lensfib
