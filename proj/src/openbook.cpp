#include "lensfib/openbook.hpp"

#include <algorithm>

#include "lensfib/error.hpp"

namespace lensfib {

CurveId CurveId::core() {
    CurveId c;
    c.kind = Kind::Core;
    c.label = "gamma";
    return c;
}

CurveId CurveId::encircling(std::string label, std::set<int> boundaries) {
    CurveId c;
    c.kind = Kind::Encircling;
    c.label = std::move(label);
    c.encircles = std::move(boundaries);
    return c;
}

CurveId CurveId::handle(std::string label) {
    CurveId c;
    c.kind = Kind::Handle;
    c.label = std::move(label);
    return c;
}

namespace {

bool curve_registered(const AbstractOpenBook& ob, const CurveId& curve) {
    return std::find(ob.curves.begin(), ob.curves.end(), curve) != ob.curves.end();
}

// Appends a twist, merging with the previous one when it is about the same
// curve; zero exponents are dropped.
void append_twist(AbstractOpenBook& ob, const CurveId& curve, long long exponent) {
    if (exponent == 0) return;
    if (!ob.monodromy.empty() && ob.monodromy.back().curve == curve) {
        ob.monodromy.back().exponent += exponent;
        if (ob.monodromy.back().exponent == 0) ob.monodromy.pop_back();
        return;
    }
    ob.monodromy.push_back({curve, exponent});
}

bool is_core_on_annulus(const AbstractOpenBook& ob, const CurveId& curve) {
    if (!ob.is_annulus()) return false;
    if (curve.kind == CurveId::Kind::Core) return true;
    // on an annulus, a curve around a single boundary component is the core
    return curve.kind == CurveId::Kind::Encircling && curve.encircles.size() == 1;
}

} // namespace

AbstractOpenBook standard_disk_book() {
    AbstractOpenBook ob;
    ob.genus = 0;
    ob.boundary_count = 1;
    return ob;
}

AbstractOpenBook register_curve(const AbstractOpenBook& ob, const CurveId& curve) {
    if (curve.kind == CurveId::Kind::Core && !ob.is_annulus())
        fail("NotAnnulus", "core curve requires an annulus page");
    if (curve.kind == CurveId::Kind::Encircling) {
        if (curve.encircles.empty())
            fail("UnknownCurve", "curve must encircle at least one boundary component");
        for (int b : curve.encircles)
            if (b < 0 || b >= ob.boundary_count)
                fail("IndexOutOfRange", "boundary index out of range");
        if (ob.genus == 0 &&
            static_cast<int>(curve.encircles.size()) >= ob.boundary_count)
            fail("UnknownCurve",
                 "on a planar page a curve must encircle a proper subset of boundaries");
    }
    AbstractOpenBook r = ob;
    if (!curve_registered(r, curve)) r.curves.push_back(curve);
    return r;
}

AbstractOpenBook transverse_zero_surgery(const AbstractOpenBook& ob) {
    AbstractOpenBook r = ob;
    r.boundary_count += 1;
    return r;
}

AbstractOpenBook page_curve_surgery(const AbstractOpenBook& ob, const CurveId& curve, int sign) {
    if (sign != 1 && sign != -1)
        fail("IndexOutOfRange", "surgery sign must be +1 or -1");
    if (!curve_registered(ob, curve))
        fail("UnknownCurve", "curve '" + curve.label + "' is not registered on the page");
    AbstractOpenBook r = ob;
    append_twist(r, curve, -sign);
    return r;
}

AbstractOpenBook stabilize(const AbstractOpenBook& ob, int sign, int boundary_i, int boundary_j) {
    if (sign != 1 && sign != -1)
        fail("IndexOutOfRange", "stabilization sign must be +1 or -1");
    if (boundary_i < 0 || boundary_i >= ob.boundary_count || boundary_j < 0 ||
        boundary_j >= ob.boundary_count)
        fail("IndexOutOfRange", "boundary index out of range");
    AbstractOpenBook r = ob;
    CurveId c;
    if (boundary_i == boundary_j) {
        // handle with both feet on one boundary splits it in two
        r.boundary_count += 1;
        c = r.is_annulus() ? CurveId::core()
                           : CurveId::encircling(
                                 "stab" + std::to_string(r.curves.size()),
                                 {r.boundary_count - 1});
    } else {
        // handle joining two boundaries merges them and adds genus
        r.boundary_count -= 1;
        r.genus += 1;
        c = CurveId::handle("stab" + std::to_string(r.curves.size()));
    }
    if (!curve_registered(r, c)) r.curves.push_back(c);
    append_twist(r, c, sign);
    return r;
}

FiberedLink build_fibered_Lp1(long long p) {
    AbstractOpenBook ob = standard_disk_book();
    ob = transverse_zero_surgery(ob); // annulus page
    ob = register_curve(ob, CurveId::core());
    ReduceResult red = reduce_to_zero_framings(FramedLinkMatrix::single(-p));
    for (const AddedCircle& circle : red.circles)
        ob = page_curve_surgery(ob, CurveId::core(), circle.framing);

    FiberedLink fl;
    fl.book = std::move(ob);
    fl.presentation.fixed_matrix = FramedLinkMatrix::single(-p);
    fl.presentation.fixed_braid = BraidWord{1, {}}; // unknot, closed 1-braid
    fl.presentation.moving_components = fl.book.boundary_count;
    fl.presentation.description =
        "unknot framed " + std::to_string(-p) + " threading 2 binding circles";
    return fl;
}

FiberedLink build_fibered_Lpq(const CFExpansion& terms) {
    const int n = static_cast<int>(terms.terms.size());
    if (n == 1) return build_fibered_Lp1(-terms.terms[0]);

    AbstractOpenBook ob = standard_disk_book();
    for (int i = 0; i < n; ++i) ob = transverse_zero_surgery(ob);
    // boundary 0 is the original disk boundary; punctures are 1..n, puncture i
    // belonging to chain component i-1
    std::vector<CurveId> puncture_curve(n);
    for (int i = 0; i < n; ++i) {
        puncture_curve[i] = CurveId::encircling("c" + std::to_string(i + 1), {i + 1});
        ob = register_curve(ob, puncture_curve[i]);
    }
    std::vector<CurveId> pair_curve(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        pair_curve[i] = CurveId::encircling(
            "c" + std::to_string(i + 1) + std::to_string(i + 2), {i + 1, i + 2});
        ob = register_curve(ob, pair_curve[i]);
    }

    FramedLinkMatrix chain = chain_matrix(terms);
    ReduceResult red = reduce_to_zero_framings(chain);
    for (const AddedCircle& circle : red.circles) {
        const CurveId& curve = circle.links.size() == 2
                                   ? pair_curve[circle.links[0].first]
                                   : puncture_curve[circle.links[0].first];
        ob = page_curve_surgery(ob, curve, circle.framing);
    }

    // fixed part as a closed braid: chain of unknots = closure of s1^2 s2^2 ...
    BraidWord chain_braid;
    chain_braid.strands = n;
    for (int i = 1; i <= n - 1; ++i) {
        chain_braid.letters.push_back(i);
        chain_braid.letters.push_back(i);
    }

    FiberedLink fl;
    fl.book = std::move(ob);
    fl.presentation.fixed_matrix = std::move(chain);
    fl.presentation.fixed_braid = std::move(chain_braid);
    fl.presentation.moving_components = fl.book.boundary_count;
    fl.presentation.description = std::to_string(n) + "-component chain threading " +
                                  std::to_string(n + 1) + " binding circles";
    return fl;
}

long long mcg_annulus_reduce(const AbstractOpenBook& ob) {
    if (!ob.is_annulus())
        fail("NotAnnulus", "reduction is defined on annulus pages only");
    long long sum = 0;
    for (const Twist& t : ob.monodromy) {
        if (!is_core_on_annulus(ob, t.curve))
            fail("NonCoreCurve", "twist about '" + t.curve.label + "' is not a core twist");
        sum += t.exponent;
    }
    return sum;
}

bool books_equivalent_annulus(const AbstractOpenBook& a, const AbstractOpenBook& b,
                              CoreOrientation orientation) {
    long long ka = mcg_annulus_reduce(a);
    long long kb = mcg_annulus_reduce(b);
    return orientation == CoreOrientation::Same ? ka == kb : ka == -kb;
}

AbstractOpenBook quotient_hopf_book(long long p) {
    AbstractOpenBook ob;
    ob.genus = 0;
    ob.boundary_count = 2;
    ob.curves.push_back(CurveId::core());
    if (p != 0) ob.monodromy.push_back({CurveId::core(), p});
    return ob;
}

} // namespace lensfib
