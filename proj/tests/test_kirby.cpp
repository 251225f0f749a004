#include <doctest.h>

#include <random>

#include "lensfib/contfrac.hpp"
#include "lensfib/error.hpp"
#include "lensfib/kirby.hpp"
#include "test_helpers.hpp"

using namespace lensfib;
using lensfib::testing::cofactor_det;
using lensfib::testing::random_symmetric;

TEST_SUITE("kirby") {

TEST_CASE("k1_add") {
    FramedLinkMatrix empty;
    FramedLinkMatrix one = k1_add(empty, +1);
    CHECK(one.rows() == std::vector<std::vector<long long>>{{1}});

    FramedLinkMatrix two = k1_add(FramedLinkMatrix::single(-5), -1);
    CHECK(two.rows() == std::vector<std::vector<long long>>{{-5, 0}, {0, -1}});
    CHECK(h1_order(two) == 5);
}

TEST_CASE("k1_remove") {
    FramedLinkMatrix m({{-5, 0}, {0, 1}});
    CHECK(k1_remove(m, 1) == FramedLinkMatrix::single(-5));
    CHECK(k1_remove(FramedLinkMatrix::single(1), 0).size() == 0);

    try {
        k1_remove(FramedLinkMatrix({{-4, 1}, {1, -2}}), 0);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.name() == "NotRemovable");
    }
    CHECK_THROWS_AS(k1_remove(FramedLinkMatrix::single(-5), 0), Error);
}

TEST_CASE("k2_slide") {
    FramedLinkMatrix hopf({{0, 1}, {1, 0}});
    CHECK(k2_slide(hopf, 0, 1, +1).rows() ==
          std::vector<std::vector<long long>>{{2, 1}, {1, 0}});

    FramedLinkMatrix split({{-3, 0}, {0, -2}});
    CHECK(k2_slide(split, 0, 1, +1).rows() ==
          std::vector<std::vector<long long>>{{-5, -2}, {-2, -2}});

    CHECK_THROWS_AS(k2_slide(hopf, 0, 0, +1), Error);
    CHECK_THROWS_AS(k2_slide(hopf, 0, 2, +1), Error);
}

TEST_CASE("k2_slide keeps the framing formula") {
    // new framing at i is n_i + n_j + 2 lk(i,j) for sign +1
    std::mt19937 rng(5);
    for (int rep = 0; rep < 100; ++rep) {
        FramedLinkMatrix m(random_symmetric(rng, 4, 5));
        FramedLinkMatrix r = k2_slide(m, 1, 2, +1);
        CHECK(r.entry(1, 1) == m.entry(1, 1) + m.entry(2, 2) + 2 * m.entry(1, 2));
    }
}

TEST_CASE("blow_down") {
    FramedLinkMatrix m({{-4, 1}, {1, 1}});
    CHECK(blow_down(m, 1) == FramedLinkMatrix::single(-5));

    CHECK(blow_down(FramedLinkMatrix({{7, 0}, {0, 1}}), 1) == FramedLinkMatrix::single(7));

    CHECK(blow_down(FramedLinkMatrix({{0, 1}, {1, -1}}), 1) == FramedLinkMatrix::single(1));

    try {
        blow_down(FramedLinkMatrix({{-4, 1}, {1, -2}}), 1);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.name() == "NotUnimodalFraming");
    }
}

TEST_CASE("h1_order") {
    CHECK(h1_order(chain_matrix({{-4, -2}})) == 7);
    CHECK(h1_order(FramedLinkMatrix::single(-5)) == 5);
    CHECK(h1_order(FramedLinkMatrix::single(0)) == std::nullopt);
    CHECK(h1_order(FramedLinkMatrix()) == 1);
    // zero diagonal needing a pivot swap
    CHECK(h1_order(FramedLinkMatrix({{0, 1}, {1, 0}})) == 1);
}

TEST_CASE("h1_order agrees with cofactor expansion") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 200; ++rep) {
        std::uniform_int_distribution<int> size(0, 5);
        auto rows = random_symmetric(rng, size(rng), 5);
        long long det = cofactor_det(rows);
        auto h = h1_order(FramedLinkMatrix(rows));
        if (det == 0)
            CHECK(!h.has_value());
        else
            CHECK(*h == (det < 0 ? -det : det));
    }
}

TEST_CASE("|det| is preserved along random legal move sequences") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> size(1, 6);
    std::uniform_int_distribution<int> move_kind(0, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int rep = 0; rep < 1000; ++rep) {
        FramedLinkMatrix m(random_symmetric(rng, size(rng), 5));
        auto order = h1_order(m);
        for (int step = 0; step < 8; ++step) {
            switch (move_kind(rng)) {
            case 0: m = k1_add(m, coin(rng) ? 1 : -1); break;
            case 1: {
                // remove the first removable component, if any
                for (int i = 0; i < m.size(); ++i) {
                    long long f = m.entry(i, i);
                    bool unlinked = (f == 1 || f == -1);
                    for (int j = 0; unlinked && j < m.size(); ++j)
                        if (j != i && m.entry(i, j) != 0) unlinked = false;
                    if (unlinked) {
                        m = k1_remove(m, i);
                        break;
                    }
                }
                break;
            }
            case 2: {
                if (m.size() < 2) break;
                std::uniform_int_distribution<int> pick(0, m.size() - 1);
                int i = pick(rng), j = pick(rng);
                if (i != j) m = k2_slide(m, i, j, coin(rng) ? 1 : -1);
                break;
            }
            case 3: {
                for (int i = 0; i < m.size(); ++i)
                    if (m.entry(i, i) == 1 || m.entry(i, i) == -1) {
                        m = blow_down(m, i);
                        break;
                    }
                break;
            }
            }
            CHECK(h1_order(m) == order);
        }
    }
}

TEST_CASE("blow_down undoes k1_add") {
    std::mt19937 rng(29);
    for (int rep = 0; rep < 100; ++rep) {
        FramedLinkMatrix m(random_symmetric(rng, 3, 4));
        int sign = rep % 2 ? 1 : -1;
        CHECK(blow_down(k1_add(m, sign), m.size()) == m);
    }
}

TEST_CASE("opposite slides cancel") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 100; ++rep) {
        FramedLinkMatrix m(random_symmetric(rng, 4, 4));
        CHECK(k2_slide(k2_slide(m, 0, 2, +1), 0, 2, -1) == m);
    }
}

TEST_CASE("reduce_to_zero_framings on a single unknot") {
    ReduceResult res = reduce_to_zero_framings(FramedLinkMatrix::single(-3));
    CHECK(res.matrix.size() == 4);
    CHECK(res.matrix.entry(0, 0) == 0);
    CHECK(res.circles.size() == 3);
    for (const auto& c : res.circles) {
        CHECK(c.framing == 1);
        CHECK(c.links.size() == 1);
        CHECK(c.links[0].first == 0);
    }
    CHECK(res.meridian_net == std::vector<long long>{3});
    CHECK(res.pair_circles.empty());

    // framing 0 stays untouched
    ReduceResult zero = reduce_to_zero_framings(FramedLinkMatrix::single(0));
    CHECK(zero.matrix == FramedLinkMatrix::single(0));
    CHECK(zero.trace.empty());

    // positive framing -> negative circles
    ReduceResult pos = reduce_to_zero_framings(FramedLinkMatrix::single(2));
    CHECK(pos.meridian_net == std::vector<long long>{-2});
    CHECK(pos.circles.size() == 2);
    CHECK(pos.circles[0].framing == -1);
}

TEST_CASE("reduce_to_zero_framings on chains") {
    CFExpansion cf{{-4, -2}};
    FramedLinkMatrix chain = chain_matrix(cf);
    ReduceResult res = reduce_to_zero_framings(chain);

    // original block: zero framings, zero linkings
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(res.matrix.entry(i, j) == 0);

    CHECK(res.pair_circles == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(res.meridian_net == std::vector<long long>{3, 1});
    CHECK(res.circles.size() == 5);

    // replaying the trace from the chain reproduces the matrix
    CHECK(apply_trace(chain, res.trace) == res.matrix);

    // blowing every added circle back down restores the chain
    FramedLinkMatrix back = res.matrix;
    for (int e = back.size() - 1; e >= 2; --e) back = blow_down(back, e);
    CHECK(back == chain);

    // the added circles never change the homology order
    CHECK(h1_order(res.matrix) == h1_order(chain));

    try {
        reduce_to_zero_framings(FramedLinkMatrix({{0, 2}, {2, 0}}));
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.name() == "UnsupportedShape");
    }
}

TEST_CASE("reduce_to_zero_framings across chain lengths") {
    for (long long p = 2; p <= 40; ++p) {
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            FramedLinkMatrix chain = chain_matrix(expand_neg_cf(p, q));
            ReduceResult res = reduce_to_zero_framings(chain);
            const int n = chain.size();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) CHECK(res.matrix.entry(i, j) == 0);
            CHECK(apply_trace(chain, res.trace) == res.matrix);
            FramedLinkMatrix back = res.matrix;
            for (int e = back.size() - 1; e >= n; --e) back = blow_down(back, e);
            CHECK(back == chain);
            CHECK(h1_order(res.matrix) == p);
        }
    }
}

} // TEST_SUITE
