#pragma once

#include <array>
#include <functional>

#include "lensfib/lenslift.hpp"

namespace lensfib {

using Coords = std::array<double, 4>;

// 1-form on a coordinate chart, given by its coefficient functions in the
// chart's coordinate basis. dimension is 3 (Cartesian x,y,z) or 4 (bipolar
// rho1,theta1,rho2,theta2 on the 3-sphere); unused trailing coefficients are
// zero. The coefficient function must be deterministic and finite.
struct SampledOneForm {
    int dimension = 3;
    std::function<Coords(const Coords&)> coefficients;
};

// Annulus page embedded in the sphere: (t, theta) in [0,1] x [0,2pi) to
// bipolar coordinates, at page angle omega. The map returns unwrapped angles
// so that finite differences across it are smooth.
struct PageParametrization {
    std::function<Coords(double t, double theta)> map;
    double omega = 0.0;
};

enum class BindingComponent { Z1Zero, Z2Zero };

struct CompatibilityReport {
    double min_page_area_value = 0.0;
    double min_binding_value = 0.0;
    long long sample_count = 0;
    double tolerance = 0.0;
    bool verdict = false;
};

struct GridSpec {
    int n_t = 2;
    int n_theta = 2;
    int n_omega = 2;
};

struct StandardForms {
    SampledOneForm r3_standard;  // dz + x dy
    SampledOneForm r3_symmetric; // dz + x dy - y dx
    SampledOneForm s3_standard;  // rho1^2 dtheta1 + rho2^2 dtheta2
};

StandardForms standard_forms();

SampledOneForm negate_form(const SampledOneForm& form);
SampledOneForm scale_form(const SampledOneForm& form, double c);

// The (alpha ^ d alpha)(e1,e2,e3) scalar at a point of R^3; d alpha by
// central differences with step h.
double contact_volume_value(const SampledOneForm& form, const Coords& point, double h = 1e-5);

// Standard page family: (t,theta) -> (sqrt(1-t^2), omega - theta, t, theta).
PageParametrization standard_page(double omega);

// Same annulus swept with the opposite fibration orientation (theta -> -theta).
PageParametrization reversed_page(double omega);

struct PulledBackForm {
    double f_t = 0.0;
    double f_theta = 0.0;
};

// Coefficients of the pullback of a 1-form on the sphere along the page map,
// in the (dt, dtheta) basis; chain rule via central differences of the
// parametrization (step h). Requires 0 < t < 1.
PulledBackForm pullback_page(const SampledOneForm& form, const PageParametrization& page,
                             double t, double theta, double h = 1e-6);

// dt^dtheta coefficient of d(pullback) via central differences of the
// pullback coefficients (outer step h).
double page_area_value(const SampledOneForm& form, const PageParametrization& page, double t,
                       double theta, double h = 1e-4);

// alpha evaluated on the binding tangent: d/dtheta2 on {z1=0}, d/dtheta1 on
// {z2=0}. Exact coefficient evaluation (the chart is degenerate there).
double binding_value(const SampledOneForm& form, BindingComponent component, double theta);

// Max over sampled points x, directions v and group elements n of
// |alpha(n.x)(dn v) - alpha(x)(v)| for the standard sphere form; the
// pushforward dn is computed by central differences of the action map.
double zp_invariance_defect(const LensParams& params, int sample_count,
                            unsigned long seed = 12345);

// Sweeps page_area_value over the interior grid (t in [1e-3, 1-1e-3]) for
// every page angle and binding_value over the binding samples; verdict is
// true iff both minima exceed tol.
CompatibilityReport check_supports(const SampledOneForm& form,
                                   const std::function<PageParametrization(double)>& pages,
                                   const std::vector<BindingComponent>& bindings,
                                   const GridSpec& grid, double tol = 1e-8);

} // namespace lensfib
