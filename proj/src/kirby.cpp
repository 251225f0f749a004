#include "lensfib/kirby.hpp"

#include <cstdlib>

#include "lensfib/error.hpp"

namespace lensfib {

namespace {

void check_index(const FramedLinkMatrix& m, int i) {
    if (i < 0 || i >= m.size())
        fail("IndexOutOfRange", "component index " + std::to_string(i) +
                                    " out of range for size " + std::to_string(m.size()));
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1)
        fail("IndexOutOfRange", "sign must be +1 or -1");
}

long long checked_mul(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN)
        fail("NumericalBreakdown", "integer overflow in matrix arithmetic");
    return static_cast<long long>(r);
}

} // namespace

FramedLinkMatrix::FramedLinkMatrix(std::vector<std::vector<long long>> rows)
    : rows_(std::move(rows)) {
    const size_t n = rows_.size();
    for (size_t i = 0; i < n; ++i) {
        if (rows_[i].size() != n)
            fail("MalformedMatrix", "linking matrix must be square");
        for (size_t j = 0; j < i; ++j)
            if (rows_[i][j] != rows_[j][i])
                fail("MalformedMatrix", "linking matrix must be symmetric");
    }
}

FramedLinkMatrix FramedLinkMatrix::single(long long framing) {
    return FramedLinkMatrix(std::vector<std::vector<long long>>{{framing}});
}

FramedLinkMatrix k1_add(const FramedLinkMatrix& m, int sign) {
    check_sign(sign);
    FramedLinkMatrix r = m;
    const int n = r.size();
    for (auto& row : r.rows_) row.push_back(0);
    r.rows_.emplace_back(n + 1, 0);
    r.rows_[n][n] = sign;
    return r;
}

FramedLinkMatrix k1_remove(const FramedLinkMatrix& m, int index) {
    check_index(m, index);
    long long f = m.entry(index, index);
    if (f != 1 && f != -1)
        fail("NotRemovable", "framing must be +1 or -1");
    for (int j = 0; j < m.size(); ++j)
        if (j != index && m.entry(index, j) != 0)
            fail("NotRemovable", "component links another component");
    FramedLinkMatrix r = m;
    r.rows_.erase(r.rows_.begin() + index);
    for (auto& row : r.rows_) row.erase(row.begin() + index);
    return r;
}

FramedLinkMatrix k2_slide(const FramedLinkMatrix& m, int i, int j, int sign) {
    check_index(m, i);
    check_index(m, j);
    check_sign(sign);
    if (i == j)
        fail("IndexOutOfRange", "handle slide needs two distinct components");
    FramedLinkMatrix r = m;
    const int n = r.size();
    for (int k = 0; k < n; ++k) r.rows_[i][k] += sign * r.rows_[j][k];
    for (int k = 0; k < n; ++k) r.rows_[k][i] += sign * r.rows_[k][j];
    return r;
}

FramedLinkMatrix blow_down(const FramedLinkMatrix& m, int index) {
    check_index(m, index);
    long long eps = m.entry(index, index);
    if (eps != 1 && eps != -1)
        fail("NotUnimodalFraming", "blow-down needs framing +1 or -1");
    const int n = m.size();
    std::vector<std::vector<long long>> rows;
    rows.reserve(n - 1);
    for (int i = 0; i < n; ++i) {
        if (i == index) continue;
        std::vector<long long> row;
        row.reserve(n - 1);
        for (int j = 0; j < n; ++j) {
            if (j == index) continue;
            row.push_back(m.entry(i, j) -
                          eps * checked_mul(m.entry(i, index), m.entry(j, index)));
        }
        rows.push_back(std::move(row));
    }
    return FramedLinkMatrix(std::move(rows));
}

std::optional<long long> h1_order(const FramedLinkMatrix& m) {
    const int n = m.size();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination; exact over the integers.
    std::vector<std::vector<long long>> a = m.rows();
    long long sign = 1;
    long long prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { piv = r; break; }
            if (piv < 0) return std::nullopt; // singular
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                long long num = checked_mul(a[i][j], a[k][k]) - checked_mul(a[i][k], a[k][j]);
                a[i][j] = num / prev; // exact by Bareiss
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    long long det = sign * a[n - 1][n - 1];
    if (det == 0) return std::nullopt;
    return det < 0 ? -det : det;
}

FramedLinkMatrix apply_move(const FramedLinkMatrix& m, const Move& mv) {
    switch (mv.kind) {
    case Move::K1Add: return k1_add(m, mv.sign);
    case Move::K1Remove: return k1_remove(m, mv.i);
    case Move::K2Slide: return k2_slide(m, mv.i, mv.j, mv.sign);
    case Move::BlowDown: return blow_down(m, mv.i);
    }
    fail("IndexOutOfRange", "unknown move kind");
}

FramedLinkMatrix apply_trace(const FramedLinkMatrix& m, const MoveTrace& trace) {
    FramedLinkMatrix r = m;
    for (const Move& mv : trace) r = apply_move(r, mv);
    return r;
}

namespace {

bool is_chain_shape(const FramedLinkMatrix& m) {
    const int n = m.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long want = (j == i + 1) ? 1 : 0;
            if (m.entry(i, j) != want) return false;
        }
    return true;
}

} // namespace

ReduceResult reduce_to_zero_framings(const FramedLinkMatrix& m) {
    if (!is_chain_shape(m))
        fail("UnsupportedShape",
             "supported inputs: tridiagonal chain with unit off-diagonal, or a single unknot");

    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        long long f = m.entry(i, i);
        if (f > 1000000 || f < -1000000)
            fail("UnsupportedShape", "framing magnitude too large to reduce");
    }
    ReduceResult res;
    res.matrix = m;
    res.meridian_net.assign(n, 0);

    auto add_circle = [&](int framing, std::vector<std::pair<int, long long>> links) {
        const int e = res.matrix.size();
        res.matrix = k1_add(res.matrix, framing);
        res.trace.push_back({Move::K1Add, framing, 0, 0});
        AddedCircle circle;
        circle.index = e;
        circle.framing = framing;
        for (auto [comp, coef] : links) {
            // slide comp over the fresh circle; coef = +/-1 is the linking left behind
            int s = framing * static_cast<int>(coef) > 0 ? 1 : -1;
            res.matrix = k2_slide(res.matrix, comp, e, s);
            res.trace.push_back({Move::K2Slide, s, comp, e});
        }
        circle.links = std::move(links);
        res.circles.push_back(std::move(circle));
    };

    // one +1-framed circle per adjacent pair, linked with opposite signs so
    // the pair's linking cancels and each framing gains +1
    for (int i = 0; i + 1 < n; ++i) {
        add_circle(+1, {{i, +1}, {i + 1, -1}});
        res.pair_circles.emplace_back(i, i + 1);
    }

    // meridians: each +1-framed circle raises a framing by 1, each -1 lowers it
    for (int i = 0; i < n; ++i) {
        while (res.matrix.entry(i, i) < 0) {
            add_circle(+1, {{i, +1}});
            res.meridian_net[i] += 1;
        }
        while (res.matrix.entry(i, i) > 0) {
            add_circle(-1, {{i, +1}});
            res.meridian_net[i] -= 1;
        }
    }
    return res;
}

} // namespace lensfib
