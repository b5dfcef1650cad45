#ifndef POLYPAIR_QUADRATURE_HPP
#define POLYPAIR_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace polypair {

struct QuadratureResult {
    std::complex<double> value;
    double error_estimate = 0.0;
    long evaluations = 0;
};

class quadrature_error : public std::runtime_error {
  public:
    quadrature_error(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

/// Adaptive Gauss-Legendre integration of a complex-valued function on [a, b].
/// Panels are bisected until the local 7-point vs split-panel estimates agree;
/// handles integrable kinks and jump discontinuities by localizing them.
QuadratureResult integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                    double a, double b, double abs_tol, long max_evals = 2000000);

}  // namespace polypair

#endif
