#include <doctest.h>

#include <numeric>
#include <random>

#include "lensfib/error.hpp"
#include "lensfib/openbook.hpp"

using namespace lensfib;

TEST_SUITE("openbook") {

TEST_CASE("standard disk book") {
    AbstractOpenBook disk = standard_disk_book();
    CHECK(disk.genus == 0);
    CHECK(disk.boundary_count == 1);
    CHECK(disk.monodromy.empty());
    CHECK(disk.euler_characteristic() == 1);
}

TEST_CASE("transverse zero surgery punctures the page") {
    AbstractOpenBook ob = standard_disk_book();
    AbstractOpenBook annulus = transverse_zero_surgery(ob);
    CHECK(annulus.genus == 0);
    CHECK(annulus.boundary_count == 2);
    CHECK(annulus.monodromy.empty());
    CHECK(annulus.euler_characteristic() == ob.euler_characteristic() - 1);

    for (int n = 1; n <= 6; ++n) {
        ob = transverse_zero_surgery(ob);
        CHECK(ob.genus == 0);
        CHECK(ob.boundary_count == n + 1);
        CHECK(ob.euler_characteristic() == 1 - n);
    }
}

TEST_CASE("page curve surgery composes twists") {
    AbstractOpenBook annulus =
        register_curve(transverse_zero_surgery(standard_disk_book()), CurveId::core());

    AbstractOpenBook once = page_curve_surgery(annulus, CurveId::core(), +1);
    REQUIRE(once.monodromy.size() == 1);
    CHECK(once.monodromy[0].exponent == -1);
    CHECK(once.boundary_count == annulus.boundary_count);
    CHECK(once.euler_characteristic() == annulus.euler_characteristic());

    AbstractOpenBook cancel = page_curve_surgery(once, CurveId::core(), -1);
    CHECK(cancel.monodromy.empty());

    AbstractOpenBook many = annulus;
    for (int i = 0; i < 5; ++i) many = page_curve_surgery(many, CurveId::core(), +1);
    CHECK(mcg_annulus_reduce(many) == -5);

    try {
        page_curve_surgery(annulus, CurveId::encircling("missing", {0}), +1);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.name() == "UnknownCurve");
    }
}

TEST_CASE("stabilization bookkeeping") {
    AbstractOpenBook annulus = transverse_zero_surgery(standard_disk_book());

    // joining the two boundary components adds genus
    AbstractOpenBook toric = stabilize(annulus, +1, 0, 1);
    CHECK(toric.genus == 1);
    CHECK(toric.boundary_count == 1);
    CHECK(toric.euler_characteristic() == annulus.euler_characteristic() - 1);
    REQUIRE(toric.monodromy.size() == 1);
    CHECK(toric.monodromy[0].exponent == 1);
    CHECK(toric.monodromy[0].curve.kind == CurveId::Kind::Handle);

    // a handle with both feet on the disk boundary gives the Hopf books
    AbstractOpenBook disk = standard_disk_book();
    for (int sign : {+1, -1}) {
        AbstractOpenBook hopf = stabilize(disk, sign, 0, 0);
        CHECK(hopf.genus == 0);
        CHECK(hopf.boundary_count == 2);
        CHECK(hopf.euler_characteristic() == disk.euler_characteristic() - 1);
        CHECK(mcg_annulus_reduce(hopf) == sign);
    }

    CHECK_THROWS_AS(stabilize(disk, +1, 0, 1), Error);
}

TEST_CASE("chi bookkeeping under random operation sequences") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> op(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int rep = 0; rep < 150; ++rep) {
        AbstractOpenBook ob =
            register_curve(transverse_zero_surgery(standard_disk_book()), CurveId::core());
        for (int step = 0; step < 10; ++step) {
            int chi = ob.euler_characteristic();
            switch (op(rng)) {
            case 0:
                ob = transverse_zero_surgery(ob);
                CHECK(ob.euler_characteristic() == chi - 1);
                break;
            case 1: {
                if (!ob.is_annulus()) break;
                ob = page_curve_surgery(ob, CurveId::core(), coin(rng) ? 1 : -1);
                CHECK(ob.euler_characteristic() == chi);
                break;
            }
            case 2: {
                std::uniform_int_distribution<int> b(0, ob.boundary_count - 1);
                ob = stabilize(ob, coin(rng) ? 1 : -1, b(rng), b(rng));
                CHECK(ob.euler_characteristic() == chi - 1);
                break;
            }
            }
        }
    }
}

TEST_CASE("fibered link in L(p,1)") {
    for (long long p = -8; p <= 8; ++p) {
        FiberedLink fl = build_fibered_Lp1(p);
        CHECK(fl.book.genus == 0);
        CHECK(fl.book.boundary_count == 2);
        CHECK(mcg_annulus_reduce(fl.book) == -p);
        CHECK(fl.presentation.moving_components == 2);
        CHECK(fl.presentation.fixed_matrix == FramedLinkMatrix::single(-p));
    }

    FiberedLink id = build_fibered_Lp1(0);
    CHECK(id.book.monodromy.empty());

    FiberedLink neg = build_fibered_Lp1(-2);
    REQUIRE(neg.book.monodromy.size() == 1);
    CHECK(neg.book.monodromy[0].exponent == 2);
}

TEST_CASE("fibered link from a chain expansion") {
    FiberedLink fl = build_fibered_Lpq({{-4, -2}});
    CHECK(fl.book.genus == 0);
    CHECK(fl.book.boundary_count == 3);
    CHECK(fl.presentation.moving_components == 3);

    // twist word: the pair curve once, then 3 + 1 puncture twists
    long long total = 0;
    for (const Twist& t : fl.book.monodromy) total += std::abs(t.exponent);
    CHECK(total == (4 - 1) + (2 - 1) + 1);
    REQUIRE(fl.book.monodromy.size() == 3);
    CHECK(fl.book.monodromy[0].curve.encircles == std::set<int>{1, 2});
    CHECK(fl.book.monodromy[0].exponent == -1);
    CHECK(fl.book.monodromy[1].curve.encircles == std::set<int>{1});
    CHECK(fl.book.monodromy[1].exponent == -3);
    CHECK(fl.book.monodromy[2].curve.encircles == std::set<int>{2});
    CHECK(fl.book.monodromy[2].exponent == -1);

    // the braid closure form of the fixed part presents the same chain
    CHECK(fl.presentation.fixed_braid.strands == 2);

    FiberedLink four = build_fibered_Lpq({{-2, -2, -2}});
    CHECK(four.book.boundary_count == 4);
    long long total4 = 0;
    for (const Twist& t : four.book.monodromy) total4 += std::abs(t.exponent);
    CHECK(total4 == 2 + 1 + 0 + 1);
}

TEST_CASE("single-term expansion matches the L(p,1) build") {
    for (long long p = 2; p <= 8; ++p) {
        FiberedLink a = build_fibered_Lpq({{-p}});
        FiberedLink b = build_fibered_Lp1(p);
        CHECK(a.book.genus == b.book.genus);
        CHECK(a.book.boundary_count == b.book.boundary_count);
        CHECK(a.book.monodromy == b.book.monodromy);
    }
}

TEST_CASE("trace of the fibered build preserves the homology order") {
    for (long long p = 2; p <= 30; ++p) {
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CFExpansion cf = expand_neg_cf(p, q);
            ReduceResult res = reduce_to_zero_framings(chain_matrix(cf));
            CHECK(h1_order(apply_trace(chain_matrix(cf), res.trace)) == p);
        }
    }
}

TEST_CASE("annulus reduction and equivalence") {
    CHECK(mcg_annulus_reduce(quotient_hopf_book(0)) == 0);

    AbstractOpenBook word = quotient_hopf_book(-3);
    word = page_curve_surgery(word, CurveId::core(), -1); // appends +1 twist
    CHECK(mcg_annulus_reduce(word) == -2);

    CHECK(books_equivalent_annulus(quotient_hopf_book(2), quotient_hopf_book(2)));
    CHECK_FALSE(books_equivalent_annulus(quotient_hopf_book(2), quotient_hopf_book(3)));

    for (long long p = -8; p <= 8; ++p) {
        FiberedLink fl = build_fibered_Lp1(p);
        CHECK(books_equivalent_annulus(fl.book, quotient_hopf_book(p),
                                       CoreOrientation::Opposite));
    }

    try {
        mcg_annulus_reduce(standard_disk_book());
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.name() == "NotAnnulus");
    }

    // a twist about a non-core curve on a bigger page cannot be reduced
    FiberedLink fl = build_fibered_Lpq({{-4, -2}});
    CHECK_THROWS_AS(mcg_annulus_reduce(fl.book), Error);
}

} // TEST_SUITE
