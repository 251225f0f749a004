#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lensfib {

// Framed link modelled by its linking matrix: symmetric n x n integers,
// diagonal entry i = framing of component i, off-diagonal (i,j) = lk(L_i,L_j).
// n = 0 (empty link) is allowed and presents S^3. Components are 0-indexed.
class FramedLinkMatrix {
public:
    FramedLinkMatrix() = default;
    explicit FramedLinkMatrix(std::vector<std::vector<long long>> rows);

    static FramedLinkMatrix single(long long framing);

    int size() const { return static_cast<int>(rows_.size()); }
    long long entry(int i, int j) const { return rows_[i][j]; }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }

    friend bool operator==(const FramedLinkMatrix& a, const FramedLinkMatrix& b) {
        return a.rows_ == b.rows_;
    }

private:
    friend FramedLinkMatrix k1_add(const FramedLinkMatrix&, int);
    friend FramedLinkMatrix k1_remove(const FramedLinkMatrix&, int);
    friend FramedLinkMatrix k2_slide(const FramedLinkMatrix&, int, int, int);
    friend FramedLinkMatrix blow_down(const FramedLinkMatrix&, int);
    std::vector<std::vector<long long>> rows_;
};

struct Move {
    enum Kind { K1Add, K1Remove, K2Slide, BlowDown } kind;
    int sign = 0;  // K1Add, K2Slide
    int i = 0;     // K1Remove/BlowDown index, K2Slide target row
    int j = 0;     // K2Slide source row
};

using MoveTrace = std::vector<Move>;

// Adds an unknotted, unlinked circle with framing sign (= +/-1).
FramedLinkMatrix k1_add(const FramedLinkMatrix& m, int sign);

// Deletes component `index`; it must be +/-1-framed and unlinked.
FramedLinkMatrix k1_remove(const FramedLinkMatrix& m, int index);

// Handle slide of component i over component j: row i += sign * row j, then
// column i += sign * column j. With sign = +1 the new framing at i is
// n_i + n_j + 2 lk(L_i, L_j).
FramedLinkMatrix k2_slide(const FramedLinkMatrix& m, int i, int j, int sign);

// Removes a +/-1-framed component e, twisting everything through it:
// entry(i,j) -= eps * entry(i,e) * entry(j,e) for all i,j != e, then delete e.
FramedLinkMatrix blow_down(const FramedLinkMatrix& m, int index);

// |det|; nullopt means det = 0 (infinite first homology). Empty matrix -> 1.
std::optional<long long> h1_order(const FramedLinkMatrix& m);

FramedLinkMatrix apply_move(const FramedLinkMatrix& m, const Move& mv);
FramedLinkMatrix apply_trace(const FramedLinkMatrix& m, const MoveTrace& trace);

// A +/-1-framed circle appended during reduce_to_zero_framings, in addition
// order. links holds (original component, linking coefficient) pairs.
struct AddedCircle {
    int index = 0;
    int framing = 0;
    std::vector<std::pair<int, long long>> links;
};

struct ReduceResult {
    FramedLinkMatrix matrix;
    MoveTrace trace;
    std::vector<AddedCircle> circles;
    // per original component: count of +1-framed minus -1-framed meridians
    std::vector<long long> meridian_net;
    // adjacent pairs whose linking was cancelled, in addition order
    std::vector<std::pair<int, int>> pair_circles;
};

// Brings a chain-shaped matrix (tridiagonal with unit off-diagonal, or a
// single framed unknot) to zero framings and zero linkings on the original
// components by introducing +/-1-framed circles: one per adjacent pair, then
// meridians per component. Blowing all added circles back down restores the
// input.
ReduceResult reduce_to_zero_framings(const FramedLinkMatrix& m);

} // namespace lensfib
