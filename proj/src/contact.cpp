#include "lensfib/contact.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "lensfib/error.hpp"

namespace lensfib {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_finite(double v, const char* where) {
    if (!std::isfinite(v))
        fail("NumericalBreakdown", std::string("non-finite value in ") + where);
}

Coords eval(const SampledOneForm& form, const Coords& x) {
    Coords a = form.coefficients(x);
    for (int i = 0; i < form.dimension; ++i) check_finite(a[i], "form coefficients");
    return a;
}

} // namespace

StandardForms standard_forms() {
    StandardForms f;
    f.r3_standard.dimension = 3;
    f.r3_standard.coefficients = [](const Coords& x) {
        return Coords{0.0, x[0], 1.0, 0.0};
    };
    f.r3_symmetric.dimension = 3;
    f.r3_symmetric.coefficients = [](const Coords& x) {
        return Coords{-x[1], x[0], 1.0, 0.0};
    };
    f.s3_standard.dimension = 4;
    f.s3_standard.coefficients = [](const Coords& x) {
        return Coords{0.0, x[0] * x[0], 0.0, x[2] * x[2]};
    };
    return f;
}

SampledOneForm negate_form(const SampledOneForm& form) { return scale_form(form, -1.0); }

SampledOneForm scale_form(const SampledOneForm& form, double c) {
    SampledOneForm out;
    out.dimension = form.dimension;
    auto inner = form.coefficients;
    out.coefficients = [inner, c](const Coords& x) {
        Coords a = inner(x);
        for (double& v : a) v *= c;
        return a;
    };
    return out;
}

double contact_volume_value(const SampledOneForm& form, const Coords& point, double h) {
    if (form.dimension != 3)
        fail("NumericalBreakdown", "volume value is a 3-dimensional computation");
    if (!(h > 0)) fail("NumericalBreakdown", "step must be positive");

    Coords a = eval(form, point);
    // partial[i][j] = d a_j / d x_i by central differences
    double partial[3][3];
    for (int i = 0; i < 3; ++i) {
        Coords xp = point, xm = point;
        xp[i] += h;
        xm[i] -= h;
        Coords ap = eval(form, xp);
        Coords am = eval(form, xm);
        for (int j = 0; j < 3; ++j) {
            partial[i][j] = (ap[j] - am[j]) / (2 * h);
            check_finite(partial[i][j], "exterior derivative");
        }
    }
    double p = partial[1][2] - partial[2][1]; // dy^dz coefficient
    double q = partial[2][0] - partial[0][2]; // dz^dx
    double r = partial[0][1] - partial[1][0]; // dx^dy
    double value = a[0] * p + a[1] * q + a[2] * r;
    check_finite(value, "volume value");
    return value;
}

PageParametrization standard_page(double omega) {
    PageParametrization page;
    page.omega = omega;
    page.map = [omega](double t, double theta) {
        return Coords{std::sqrt(1.0 - t * t), omega - theta, t, theta};
    };
    return page;
}

PageParametrization reversed_page(double omega) {
    PageParametrization page;
    page.omega = omega;
    page.map = [omega](double t, double theta) {
        return Coords{std::sqrt(1.0 - t * t), omega + theta, t, -theta};
    };
    return page;
}

PulledBackForm pullback_page(const SampledOneForm& form, const PageParametrization& page,
                             double t, double theta, double h) {
    if (form.dimension != 4)
        fail("NumericalBreakdown", "pullback expects a form on the sphere chart");
    if (!(t > 0.0 && t < 1.0))
        fail("NumericalBreakdown", "pullback requires an interior parameter 0 < t < 1");

    Coords x = page.map(t, theta);
    Coords a = eval(form, x);

    Coords tp = page.map(t + h, theta), tm = page.map(t - h, theta);
    Coords hp = page.map(t, theta + h), hm = page.map(t, theta - h);
    PulledBackForm out;
    for (int k = 0; k < 4; ++k) {
        out.f_t += a[k] * (tp[k] - tm[k]) / (2 * h);
        out.f_theta += a[k] * (hp[k] - hm[k]) / (2 * h);
    }
    check_finite(out.f_t, "pullback");
    check_finite(out.f_theta, "pullback");
    return out;
}

double page_area_value(const SampledOneForm& form, const PageParametrization& page, double t,
                       double theta, double h) {
    PulledBackForm tp = pullback_page(form, page, t + h, theta);
    PulledBackForm tm = pullback_page(form, page, t - h, theta);
    PulledBackForm hp = pullback_page(form, page, t, theta + h);
    PulledBackForm hm = pullback_page(form, page, t, theta - h);
    double value = (tp.f_theta - tm.f_theta) / (2 * h) - (hp.f_t - hm.f_t) / (2 * h);
    check_finite(value, "page area value");
    return value;
}

double binding_value(const SampledOneForm& form, BindingComponent component, double theta) {
    if (component == BindingComponent::Z1Zero) {
        Coords x{0.0, 0.0, 1.0, theta};
        return eval(form, x)[3]; // alpha(d/dtheta2)
    }
    Coords x{1.0, theta, 0.0, 0.0};
    return eval(form, x)[1]; // alpha(d/dtheta1)
}

double zp_invariance_defect(const LensParams& params, int sample_count, unsigned long seed) {
    const SampledOneForm alpha = standard_forms().s3_standard;
    const long long p = params.p >= 1 ? params.p : 1;
    const double h = 1e-4;

    std::mt19937 rng(static_cast<unsigned int>(seed));
    std::uniform_real_distribution<double> ut(0.05, 0.95);
    std::uniform_real_distribution<double> uangle(0.0, kTwoPi);
    std::uniform_real_distribution<double> udir(-1.0, 1.0);

    // the action in these coordinates: shift both angles by constants
    auto act = [&](long long n, const Coords& x) {
        long long n1 = ((n % p) + p) % p;
        long long n2 = ((n1 * (params.q % p)) % p + p) % p;
        return Coords{x[0], x[1] + kTwoPi * static_cast<double>(n1) / static_cast<double>(p),
                      x[2], x[3] + kTwoPi * static_cast<double>(n2) / static_cast<double>(p)};
    };

    double defect = 0.0;
    for (int s = 0; s < sample_count; ++s) {
        double t = ut(rng);
        Coords x{std::sqrt(1.0 - t * t), uangle(rng), t, uangle(rng)};
        Coords v;
        double norm = 0.0;
        do {
            norm = 0.0;
            for (int k = 0; k < 4; ++k) {
                v[k] = udir(rng);
                norm += v[k] * v[k];
            }
        } while (norm < 1e-6);
        norm = std::sqrt(norm);
        for (double& c : v) c /= norm;

        Coords ax = eval(alpha, x);
        double base = 0.0;
        for (int k = 0; k < 4; ++k) base += ax[k] * v[k];

        // n = 0 is the identity and contributes no defect
        for (long long n = 1; n < p; ++n) {
            Coords y = act(n, x);
            Coords ay = eval(alpha, y);
            // pushforward of v by central differences of the action map
            Coords xp = x, xm = x;
            for (int k = 0; k < 4; ++k) {
                xp[k] = x[k] + h * v[k];
                xm[k] = x[k] - h * v[k];
            }
            Coords yp = act(n, xp), ym = act(n, xm);
            double moved = 0.0;
            for (int k = 0; k < 4; ++k)
                moved += ay[k] * (yp[k] - ym[k]) / (2 * h);
            defect = std::max(defect, std::fabs(moved - base));
        }
    }
    return defect;
}

CompatibilityReport check_supports(const SampledOneForm& form,
                                   const std::function<PageParametrization(double)>& pages,
                                   const std::vector<BindingComponent>& bindings,
                                   const GridSpec& grid, double tol) {
    if (grid.n_t < 2 || grid.n_theta < 2 || grid.n_omega < 2)
        fail("NumericalBreakdown", "grid dimensions must each be at least 2");

    const double t_min = 1e-3;
    CompatibilityReport report;
    report.tolerance = tol;
    double min_area = std::numeric_limits<double>::infinity();
    double min_binding = std::numeric_limits<double>::infinity();
    long long samples = 0;

    for (int w = 0; w < grid.n_omega; ++w) {
        double omega = kTwoPi * w / grid.n_omega;
        PageParametrization page = pages(omega);
        for (int it = 0; it < grid.n_t; ++it) {
            double t = t_min + (1.0 - 2.0 * t_min) * it / (grid.n_t - 1);
            for (int ih = 0; ih < grid.n_theta; ++ih) {
                double theta = kTwoPi * ih / grid.n_theta;
                min_area = std::min(min_area, page_area_value(form, page, t, theta));
                ++samples;
            }
        }
    }
    for (BindingComponent b : bindings) {
        for (int ih = 0; ih < grid.n_theta; ++ih) {
            double theta = kTwoPi * ih / grid.n_theta;
            min_binding = std::min(min_binding, binding_value(form, b, theta));
            ++samples;
        }
    }

    report.min_page_area_value = min_area;
    report.min_binding_value = min_binding;
    report.sample_count = samples;
    report.verdict = (min_area > tol) && (min_binding > tol);
    return report;
}

} // namespace lensfib
