#pragma once

#include <array>
#include <string>
#include <vector>

#include "lensfib/braid.hpp"
#include "lensfib/rational.hpp"

namespace lensfib {

// Coprime lens-space parameters in canonical form: p >= 0, and 0 <= q < p
// when p >= 2; p = 0 forces q = 1, p = 1 forces q = 0. transformations
// records the normalization steps applied to reach this form.
struct LensParams {
    long long p = 1;
    long long q = 0;
    std::vector<std::string> transformations;
};

// Link in a lens space presented as a braid-like tangle in a rectangle with
// `strands` boundary points on each side.
struct BandDiagram {
    int strands = 1;
    BraidWord word;
};

// Point of the unit 3-sphere in bipolar coordinates (rho1, theta1, rho2,
// theta2); rho1^2 + rho2^2 = 1 within 1e-12, angles in [0, 2pi).
struct S3Point {
    double rho1 = 1.0;
    double theta1 = 0.0;
    double rho2 = 0.0;
    double theta2 = 0.0;

    static S3Point make(double rho1, double theta1, double rho2, double theta2);
};

LensParams normalize(long long p, long long q);

// Changes the surgery coefficient p/q on the fixed unknot to p/(q + k*p) and
// appends k full twists (Delta_n^{2k}) to the band.
std::pair<Rational, BandDiagram> rolfsen_twist(const Rational& coefficient, long long k,
                                               const BandDiagram& band);

// Diagram of the preimage in S^3: p copies of the band closed with
// Delta_n^{2q}, freely reduced. Requires canonical parameters with p >= 1.
BraidWord lift(const BandDiagram& band, const LensParams& params);

struct LiftResult {
    BraidWord word;
    TwoStrandClassification classification;
};

// Lift of the annulus-boundary link of the -p-framed unknot: band sigma_1^{-2}
// (the twisted band diagram, coefficient moved from -p to p/(p-1)) lifted with
// parameters (p, p-1). Reduces to sigma_1^{-2} for every p >= 2.
LiftResult lift_fibered_Lp1(long long p);

// Action of n on the sphere: theta1 += 2*pi*n/p, theta2 += 2*pi*n*q/p (mod 2pi).
S3Point zp_act(const LensParams& params, long long n, const S3Point& x);

// The p images of x under the action, n = 0..p-1.
std::vector<S3Point> orbit(const LensParams& params, const S3Point& x);

// Equality on the sphere at tolerance; an angle is ignored where its radius
// vanishes.
bool s3_points_equal(const S3Point& a, const S3Point& b, double tol = 1e-9);

} // namespace lensfib
