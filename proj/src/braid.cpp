#include "lensfib/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "lensfib/error.hpp"

namespace lensfib {

long long BraidWord::exponent_sum() const {
    long long s = 0;
    for (int e : letters) s += (e > 0) ? 1 : -1;
    return s;
}

bool StrandPermutation::is_identity() const {
    for (int i = 0; i < static_cast<int>(images.size()); ++i)
        if (images[i] != i) return false;
    return true;
}

bool StrandPermutation::is_order_reversing() const {
    const int n = static_cast<int>(images.size());
    for (int i = 0; i < n; ++i)
        if (images[i] != n - 1 - i) return false;
    return true;
}

BraidWord parse_word(const std::string& text, int strands) {
    if (strands < 1)
        fail("GeneratorOutOfRange", "strand count must be positive");
    BraidWord w;
    w.strands = strands;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        errno = 0;
        char* end = nullptr;
        long v = std::strtol(tok.c_str(), &end, 10);
        if (end == tok.c_str() || *end != '\0' || errno != 0)
            fail("MalformedToken", "not an integer: '" + tok + "'");
        if (v == 0)
            fail("MalformedToken", "generator index 0 is not allowed");
        long a = v < 0 ? -v : v;
        if (a > strands - 1)
            fail("GeneratorOutOfRange",
                 "letter " + tok + " out of range for " + std::to_string(strands) + " strands");
        w.letters.push_back(static_cast<int>(v));
    }
    return w;
}

std::string word_text(const BraidWord& w) {
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.letters[i]);
    }
    return out;
}

BraidWord garside_delta(int n) {
    if (n < 1)
        fail("GeneratorOutOfRange", "strand count must be positive");
    BraidWord w;
    w.strands = n;
    w.letters.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int k = 1; k <= n - 1; ++k)
        for (int i = k; i >= 1; --i)
            w.letters.push_back(i);
    return w;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands)
        fail("StrandMismatch", "cannot concatenate words on " + std::to_string(a.strands) +
                                   " and " + std::to_string(b.strands) + " strands");
    BraidWord w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

BraidWord inverse(const BraidWord& w) {
    BraidWord r;
    r.strands = w.strands;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(-*it);
    return r;
}

BraidWord power(const BraidWord& w, long long k) {
    const BraidWord& base = k < 0 ? inverse(w) : w;
    if (k < 0) k = -k;
    BraidWord r;
    r.strands = w.strands;
    r.letters.reserve(base.letters.size() * static_cast<size_t>(k));
    for (long long i = 0; i < k; ++i)
        r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
    return r;
}

BraidWord free_reduce(const BraidWord& w) {
    BraidWord r;
    r.strands = w.strands;
    for (int e : w.letters) {
        if (!r.letters.empty() && r.letters.back() == -e)
            r.letters.pop_back();
        else
            r.letters.push_back(e);
    }
    return r;
}

StrandPermutation permutation(const BraidWord& w) {
    // strand_at[pos] = strand occupying that position, transposed in word order
    std::vector<int> strand_at(w.strands);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (int e : w.letters) {
        int c = (e > 0 ? e : -e) - 1;
        std::swap(strand_at[c], strand_at[c + 1]);
    }
    StrandPermutation p;
    p.images.resize(w.strands);
    for (int pos = 0; pos < w.strands; ++pos)
        p.images[strand_at[pos]] = pos;
    return p;
}

ClosureInvariants closure_invariants(const BraidWord& w) {
    const int n = w.strands;
    StrandPermutation perm = permutation(w);

    // components = cycles of the closure permutation, numbered by least strand
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        for (int t = s; comp[t] < 0; t = perm.images[t])
            comp[t] = ncomp;
        ++ncomp;
    }

    std::vector<std::vector<long long>> signed_crossings(
        ncomp, std::vector<long long>(ncomp, 0));

    std::vector<int> strand_at(n);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (int e : w.letters) {
        int c = (e > 0 ? e : -e) - 1;
        int a = comp[strand_at[c]];
        int b = comp[strand_at[c + 1]];
        long long s = e > 0 ? 1 : -1;
        signed_crossings[a][b] += s;
        if (a != b) signed_crossings[b][a] += s;
        std::swap(strand_at[c], strand_at[c + 1]);
    }

    ClosureInvariants inv;
    inv.component_count = ncomp;
    inv.exponent_sum = w.exponent_sum();
    inv.linking.assign(ncomp, std::vector<long long>(ncomp, 0));
    for (int i = 0; i < ncomp; ++i) {
        for (int j = 0; j < ncomp; ++j) {
            if (i == j) {
                inv.linking[i][i] = signed_crossings[i][i]; // self-writhe
            } else {
                // signed crossing count between disjoint closed components is even
                long long c = signed_crossings[i][j];
                if (c % 2 != 0)
                    fail("NumericalBreakdown", "odd inter-component crossing count");
                inv.linking[i][j] = c / 2;
            }
        }
    }
    return inv;
}

TwoStrandClassification classify_two_strand_closure(const BraidWord& w) {
    if (w.strands != 2)
        fail("NotTwoStrands", "classification requires a 2-strand word");
    BraidWord r = free_reduce(w);
    // in B_2 free reduction always leaves sigma_1^k
    long long k = 0;
    for (int e : r.letters) k += (e > 0) ? 1 : -1;
    TwoStrandClassification c;
    c.k = k;
    if (k == 0)
        c.kind = TwoStrandClosure::TwoUnlink;
    else if (k == 1 || k == -1)
        c.kind = TwoStrandClosure::Unknot;
    else if (k == 2)
        c.kind = TwoStrandClosure::HopfPositiveLinking;
    else if (k == -2)
        c.kind = TwoStrandClosure::HopfNegativeLinking;
    else
        c.kind = TwoStrandClosure::TorusLink;
    return c;
}

std::string classification_label(const TwoStrandClassification& c, bool paper_naming) {
    switch (c.kind) {
    case TwoStrandClosure::TwoUnlink: return "TwoUnlink";
    case TwoStrandClosure::Unknot: return "Unknot";
    case TwoStrandClosure::HopfPositiveLinking:
        return paper_naming ? "H- (paper)" : "HopfPositiveLinking";
    case TwoStrandClosure::HopfNegativeLinking:
        return paper_naming ? "H+ (paper)" : "HopfNegativeLinking";
    case TwoStrandClosure::TorusLink:
        return "TorusLink(" + std::to_string(c.k) + ")";
    }
    return "?";
}

} // namespace lensfib
