#ifndef POLYPAIR_MEASURES_HPP
#define POLYPAIR_MEASURES_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "polypair/rng.hpp"
#include "polypair/sphere.hpp"

namespace polypair {

enum class MeasureKind { Uniform, Radial, GenericDensity };

/// Value of the mean-field transform phi(w) = integral of dmu(zeta)/(w - zeta),
/// together with how it was obtained. Quadrature values carry the achieved
/// absolute error estimate.
struct CauchyFieldValue {
    Complex value{0.0, 0.0};
    enum class Method { closed_form, quadrature } method = Method::closed_form;
    double error_estimate = 0.0;
};

enum class ExceptionalVerdict { clear, exceptional };

/// A probability measure on the sphere with bounded density with respect to
/// the uniform measure, given in the chart centered at the pole. Radial kinds
/// are specified by their enclosed-mass profile M(rho) (mass of the chart disk
/// |w| <= rho) and admit a closed-form transform M(|w|)/w; generic kinds carry
/// a density and are integrated numerically. The declared density bound is
/// spot-checked on a grid at construction.
class ZeroMeasure {
  public:
    static ZeroMeasure uniform();
    /// Standard complex Gaussian in the inverted coordinate z = 1/w, i.e. a
    /// rotationally symmetric measure concentrated at the point antipodal to
    /// the pole. Enclosed mass M(rho) = exp(-1/rho^2), density bound 4/e.
    static ZeroMeasure gaussian_at_antipode();
    /// Uniform measure restricted to the chart disk |w| <= chart_radius.
    static ZeroMeasure cap(double chart_radius);
    static ZeroMeasure radial(std::string id,
                              std::function<double(double)> enclosed_mass,
                              std::function<double(double)> enclosed_mass_inverse,
                              std::function<double(const ChartPoint&)> density_wrt_uniform,
                              double density_bound);
    static ZeroMeasure generic_density(std::string id,
                                       std::function<double(const ChartPoint&)> density_wrt_uniform,
                                       double density_bound);

    MeasureKind kind() const { return kind_; }
    const std::string& id() const { return id_; }
    double density_bound() const { return density_bound_; }

    /// Density with respect to the uniform probability measure.
    double density(const ChartPoint& p) const;
    /// Mass of the chart disk |w| <= rho (radial kinds only).
    double enclosed_mass(double rho) const;
    bool is_radial() const { return kind_ != MeasureKind::GenericDensity; }

    /// One draw in chart coordinates.
    Complex sample(RngStream& rng) const;

  private:
    ZeroMeasure() = default;
    void spot_check_density_bound() const;

    MeasureKind kind_ = MeasureKind::Uniform;
    std::string id_;
    double density_bound_ = 1.0;
    std::function<double(double)> mass_;
    std::function<double(double)> mass_inv_;
    std::function<double(const ChartPoint&)> density_;
};

/// Construct the bundled measure named by an experiment config ("uniform",
/// "gaussian0", "cap"). Throws std::invalid_argument for unknown names.
ZeroMeasure make_measure(const std::string& name, double cap_radius = 1.0);

/// count i.i.d. draws from mu, deterministic given the stream.
std::vector<Complex> sample_zeros(const ZeroMeasure& mu, int count, RngStream& rng);

/// Mean field at w from one mu-distributed zero. Radial measures use the
/// shell closed form M(|w|)/w; generic densities are integrated to abs_tol.
CauchyFieldValue cauchy_field(const ZeroMeasure& mu, Complex w);

/// Same transform forced through the 2-D quadrature path regardless of kind;
/// the independent cross-check for the closed forms. Integration runs in
/// geodesic polar coordinates about w, which absorbs the 1/(w - zeta)
/// singularity into the area element.
CauchyFieldValue cauchy_field_quadrature(const ZeroMeasure& mu, Complex w, double abs_tol = 1e-8);

/// Membership test for the breakdown set: exceptional when the defining
/// quantity -1/xi + phi(xi) is within margin of 0, or xi is within margin of
/// either pole of the chart (|xi| < margin, |xi| > 1/margin, or omega).
ExceptionalVerdict exceptional_set_test(const ZeroMeasure& mu, const ChartPoint& xi, double margin);

}  // namespace polypair

#endif
