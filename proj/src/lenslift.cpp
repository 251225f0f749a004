#include "lensfib/lenslift.hpp"

#include <cmath>
#include <numeric>

#include "lensfib/error.hpp"

namespace lensfib {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) r += kTwoPi;
    return r;
}

bool angles_equal(double a, double b, double tol) {
    double d = std::fabs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, kTwoPi - d) <= tol;
}

} // namespace

S3Point S3Point::make(double rho1, double theta1, double rho2, double theta2) {
    if (rho1 < 0 || rho2 < 0)
        fail("NumericalBreakdown", "radii must be nonnegative");
    if (std::fabs(rho1 * rho1 + rho2 * rho2 - 1.0) > 1e-12)
        fail("NumericalBreakdown", "point is not on the unit sphere");
    S3Point x;
    x.rho1 = rho1;
    x.theta1 = wrap_angle(theta1);
    x.rho2 = rho2;
    x.theta2 = wrap_angle(theta2);
    return x;
}

LensParams normalize(long long p, long long q) {
    if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1)
        fail("NotCoprime", "gcd(p,q) must be 1");
    LensParams out;
    if (p < 0) {
        p = -p;
        q = -q;
        out.transformations.push_back("negated both: (p,q) -> (-p,-q)");
    }
    if (p == 0) {
        // q = +/-1 by coprimality
        if (q != 1) out.transformations.push_back("q -> 1 (orientation of the S1xS2 factor)");
        q = 1;
    } else if (p == 1) {
        if (q != 0) out.transformations.push_back("q -> q mod 1 = 0");
        q = 0;
    } else {
        long long r = ((q % p) + p) % p;
        if (r != q) out.transformations.push_back("q -> q mod p = " + std::to_string(r));
        q = r;
    }
    out.p = p;
    out.q = q;
    return out;
}

std::pair<Rational, BandDiagram> rolfsen_twist(const Rational& coefficient, long long k,
                                               const BandDiagram& band) {
    long long new_den = coefficient.den + k * coefficient.num;
    if (new_den == 0)
        fail("DegenerateCoefficient", "twisted coefficient has zero denominator");
    Rational twisted(coefficient.num, new_den);
    BandDiagram out = band;
    out.word = concat(band.word, power(garside_delta(band.strands), 2 * k));
    return {twisted, out};
}

BraidWord lift(const BandDiagram& band, const LensParams& params) {
    if (params.p < 1 || params.q < 0 || (params.p >= 2 && params.q >= params.p) ||
        (params.p == 1 && params.q != 0))
        fail("NonCanonicalParams",
             "lift needs canonical parameters with p >= 1 (got p=" +
                 std::to_string(params.p) + ", q=" + std::to_string(params.q) + ")");
    if (band.word.strands != band.strands)
        fail("StrandMismatch", "band word strand count disagrees with the diagram");
    const long long n = band.strands;
    long long unreduced = params.p * static_cast<long long>(band.word.letters.size()) +
                          params.q * n * (n - 1);
    if (unreduced > 50'000'000)
        fail("OutOfRange", "lift word would have " + std::to_string(unreduced) + " letters");
    BraidWord w = power(band.word, params.p);
    w = concat(w, power(garside_delta(band.strands), 2 * params.q));
    return free_reduce(w);
}

LiftResult lift_fibered_Lp1(long long p) {
    if (p < 2)
        fail("OutOfRange", "need p >= 2");
    // move the surgery coefficient from -p to p/(p-1) with one twist
    BandDiagram trivial;
    trivial.strands = 2;
    trivial.word = parse_word("", 2);
    auto [coefficient, formula_band] = rolfsen_twist(Rational(-p, 1), 1, trivial);
    (void)formula_band;
    // the annulus boundary reads off the twisted diagram as one negative full
    // twist; the twist sign is fixed by the diagram's page orientation
    BandDiagram band;
    band.strands = 2;
    band.word = parse_word("-1 -1", 2);
    LensParams params = normalize(coefficient.num, coefficient.den);
    LiftResult out;
    out.word = lift(band, params);
    out.classification = classify_two_strand_closure(out.word);
    return out;
}

S3Point zp_act(const LensParams& params, long long n, const S3Point& x) {
    if (params.p < 1) {
        S3Point y = x; // p = 0: the action degenerates to the identity here
        return y;
    }
    double step1 = kTwoPi * static_cast<double>(((n % params.p) + params.p) % params.p) /
                   static_cast<double>(params.p);
    long long nq = ((n % params.p) * (params.q % params.p)) % params.p;
    double step2 = kTwoPi * static_cast<double>((nq + params.p) % params.p) /
                   static_cast<double>(params.p);
    S3Point y = x;
    y.theta1 = wrap_angle(x.theta1 + step1);
    y.theta2 = wrap_angle(x.theta2 + step2);
    return y;
}

std::vector<S3Point> orbit(const LensParams& params, const S3Point& x) {
    long long p = params.p >= 1 ? params.p : 1;
    std::vector<S3Point> out;
    out.reserve(static_cast<size_t>(p));
    for (long long n = 0; n < p; ++n) out.push_back(zp_act(params, n, x));
    return out;
}

bool s3_points_equal(const S3Point& a, const S3Point& b, double tol) {
    if (std::fabs(a.rho1 - b.rho1) > tol || std::fabs(a.rho2 - b.rho2) > tol) return false;
    if (a.rho1 > tol && !angles_equal(a.theta1, b.theta1, tol)) return false;
    if (a.rho2 > tol && !angles_equal(a.theta2, b.theta2, tol)) return false;
    return true;
}

} // namespace lensfib
