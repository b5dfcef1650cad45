#ifndef POLYPAIR_SPHERE_HPP
#define POLYPAIR_SPHERE_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace polypair {

using Complex = std::complex<double>;

/// A point of the unit round sphere in the holomorphic chart centered at the
/// pole of the polynomials. The chart origin w = 0 is the pole itself; the
/// antipodal point (chart value infinity) is represented explicitly by the
/// omega flag so distance formulas never see overflowing floats.
struct ChartPoint {
    Complex w{0.0, 0.0};
    bool omega = false;

    ChartPoint() = default;
    ChartPoint(Complex value) : w(value) {}                // NOLINT: implicit by design
    ChartPoint(double re, double im) : w(re, im) {}

    static ChartPoint omega_point() {
        ChartPoint p;
        p.omega = true;
        return p;
    }

    bool is_omega() const { return omega; }
    double abs() const { return omega ? std::numeric_limits<double>::infinity() : std::abs(w); }
};

/// Chordal distance on the unit sphere, range [0, 2].
inline double chordal_distance(const ChartPoint& a, const ChartPoint& b) {
    if (a.is_omega() && b.is_omega()) return 0.0;
    if (a.is_omega()) return 2.0 / std::sqrt(1.0 + std::norm(b.w));
    if (b.is_omega()) return 2.0 / std::sqrt(1.0 + std::norm(a.w));
    return 2.0 * std::abs(a.w - b.w) /
           std::sqrt((1.0 + std::norm(a.w)) * (1.0 + std::norm(b.w)));
}

/// Geodesic distance in radians on the unit round sphere, range [0, pi].
inline double geodesic_distance(const ChartPoint& a, const ChartPoint& b) {
    double half = 0.5 * chordal_distance(a, b);
    return 2.0 * std::asin(half < 1.0 ? half : 1.0);
}

/// Antipodal point: w -> -1/conj(w), with 0 and omega swapped.
inline ChartPoint antipode(const ChartPoint& p) {
    if (p.is_omega()) return ChartPoint(Complex(0.0, 0.0));
    if (p.w == Complex(0.0, 0.0)) return ChartPoint::omega_point();
    return ChartPoint(-1.0 / std::conj(p.w));
}

/// Positively oriented circle in the chart, sampled at equally spaced angles.
struct Contour {
    Complex center{0.0, 0.0};
    double chart_radius = 0.0;
    int sample_count = 0;

    Complex point(int k) const {
        double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(sample_count);
        return center + chart_radius * Complex(std::cos(t), std::sin(t));
    }
    /// Point at an arbitrary angle parameter in [0, 1).
    Complex point_at(double s) const {
        double t = 2.0 * M_PI * s;
        return center + chart_radius * Complex(std::cos(t), std::sin(t));
    }
};

/// Chart realization of the geodesic circle of the given radius around a
/// finite center. First-order conformal rescaling: the chart radius is
/// geodesic_radius * (1+|center|^2)/2, accurate to O(radius^2), which is
/// negligible in the radius ~ 1/N regime this is used for.
inline Contour geodesic_circle(const ChartPoint& center, double geodesic_radius, int samples) {
    if (center.is_omega() || center.w == Complex(0.0, 0.0))
        throw std::invalid_argument("geodesic_circle: chart circle undefined around the pole");
    if (!(geodesic_radius > 0.0) || geodesic_radius >= 0.1)
        throw std::invalid_argument("geodesic_circle: radius must be in (0, 0.1)");
    if (samples < 64)
        throw std::invalid_argument("geodesic_circle: need at least 64 samples");
    Contour c;
    c.center = center.w;
    c.chart_radius = geodesic_radius * (1.0 + std::norm(center.w)) / 2.0;
    c.sample_count = samples;
    return c;
}

/// Uniform spherical mass of a chart-centered disk of chart radius rho.
inline double uniform_mass_in_chart_disk(double rho) {
    return rho * rho / (1.0 + rho * rho);
}

/// Uniform spherical mass of a geodesic ball of the given radius.
inline double uniform_mass_in_geodesic_ball(double geodesic_radius) {
    double s = std::sin(0.5 * geodesic_radius);
    return s * s;
}

}  // namespace polypair

#endif
