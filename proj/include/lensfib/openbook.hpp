#pragma once

#include <set>
#include <string>
#include <vector>

#include "lensfib/braid.hpp"
#include "lensfib/contfrac.hpp"
#include "lensfib/kirby.hpp"

namespace lensfib {

// Simple closed curve on a page, identified combinatorially. On a planar page
// a curve is the boundary of a neighborhood of the punctures it encircles;
// Core marks the core circle of an annulus page; Handle marks the curve
// crossing a stabilization handle (needed once the page has genus).
struct CurveId {
    enum class Kind { Core, Encircling, Handle };
    Kind kind = Kind::Core;
    std::string label;
    std::set<int> encircles; // boundary indices, Encircling only

    static CurveId core();
    static CurveId encircling(std::string label, std::set<int> boundaries);
    static CurveId handle(std::string label);

    friend bool operator==(const CurveId& a, const CurveId& b) {
        return a.kind == b.kind && a.label == b.label && a.encircles == b.encircles;
    }
};

struct Twist {
    CurveId curve;
    long long exponent = 0; // nonzero

    friend bool operator==(const Twist& a, const Twist& b) {
        return a.curve == b.curve && a.exponent == b.exponent;
    }
};

// Page (genus, boundary count) plus monodromy as an ordered word of Dehn
// twists about registered curves. Boundary components are 0-indexed; the
// Euler characteristic is 2 - 2*genus - boundary_count.
struct AbstractOpenBook {
    int genus = 0;
    int boundary_count = 1;
    std::vector<Twist> monodromy;
    std::vector<CurveId> curves; // registered curve table

    int euler_characteristic() const { return 2 - 2 * genus - boundary_count; }
    bool is_annulus() const { return genus == 0 && boundary_count == 2; }
};

// Surgery presentation carrying the open book: the surgery link (fixed part)
// as a linking matrix together with a closed-braid form of it, and the count
// of binding circles (moving part) threaded through it.
struct MixedLinkPresentation {
    FramedLinkMatrix fixed_matrix;
    BraidWord fixed_braid;
    int moving_components = 0;
    std::string description;
};

AbstractOpenBook standard_disk_book();

// Registers a curve on the page. On a genus-0 page an encircling curve must
// surround a nonempty proper subset of the boundary components.
AbstractOpenBook register_curve(const AbstractOpenBook& ob, const CurveId& curve);

// 0-surgery along a circle meeting every page once: the page loses a disk
// (one more boundary component), the monodromy word is unchanged.
AbstractOpenBook transverse_zero_surgery(const AbstractOpenBook& ob);

// (+/-1)-surgery along a registered page curve: page unchanged, monodromy
// gains the twist (curve, -sign).
AbstractOpenBook page_curve_surgery(const AbstractOpenBook& ob, const CurveId& curve, int sign);

// Attaches a 1-handle between boundary components i and j and composes the
// monodromy with (c, sign) for a fresh curve c through the handle. i == j
// splits a boundary component (boundary_count + 1); i != j merges two
// (genus + 1). Either way the Euler characteristic drops by 1.
AbstractOpenBook stabilize(const AbstractOpenBook& ob, int sign, int boundary_i, int boundary_j);

struct FiberedLink {
    AbstractOpenBook book;
    MixedLinkPresentation presentation;
};

// Annulus open book of the -p-framed unknot surgery: monodromy D_core^{-p},
// presented as a mixed link with two binding circles.
FiberedLink build_fibered_Lp1(long long p);

// Planar open book for the chain presentation given by a negative continued
// fraction: page = disk with one puncture per chain component, monodromy read
// off the circles introduced by reduce_to_zero_framings.
FiberedLink build_fibered_Lpq(const CFExpansion& terms);

// Sum of twist exponents; requires an annulus page with core-only monodromy.
long long mcg_annulus_reduce(const AbstractOpenBook& ob);

enum class CoreOrientation { Same, Opposite };

// Equality of annulus open books as reduced core-twist powers, optionally
// after reversing the core orientation of the second book.
bool books_equivalent_annulus(const AbstractOpenBook& a, const AbstractOpenBook& b,
                              CoreOrientation orientation = CoreOrientation::Same);

// Annulus book (A, D_core^p): the book induced on the quotient of the Hopf
// pair, used to cross-check build_fibered_Lp1 with reversed core orientation.
AbstractOpenBook quotient_hopf_book(long long p);

} // namespace lensfib
